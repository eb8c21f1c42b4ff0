//! Words over positive integer alphabets and the regularity predicate.
//!
//! A [`Word`] is a finite sequence of symbols `>= 1`; the empty word ε is
//! valid. A word is *k-regular* over `[n] = {1, .., n}` when every symbol
//! of `[n]` appears exactly `k` times and nothing else appears. The set of
//! all k-regular words for a given [`RegularityProfile`] can be streamed in
//! lexicographic order with [`all_regular_words`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Total symbol budget (`k * n`) accepted by enumeration entry points
/// unless a caller raises it explicitly.
pub const DEFAULT_MAX_SYMBOLS: u64 = 24;

/// A finite sequence of symbols from `{1, 2, 3, ...}`.
///
/// Ordering is lexicographic on the symbol sequence, which matches the
/// order used for word listings throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    /// The empty word ε.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, rejecting any symbol `< 1`.
    pub fn new(symbols: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s == 0) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad,
                n: u32::MAX,
            });
        }
        Ok(Word(symbols))
    }

    /// Builds a word from symbols already known to be `>= 1`.
    pub(crate) fn from_vec_unchecked(symbols: Vec<u32>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s >= 1));
        Word(symbols)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the word contains exactly `profile.k()` copies of each
    /// symbol in `[profile.n()]` and nothing else.
    pub fn is_regular(&self, profile: RegularityProfile) -> bool {
        let (n, k) = (profile.n(), profile.k());
        if self.0.len() as u64 != u64::from(n) * u64::from(k) {
            return false;
        }
        let mut counts = vec![0u32; n as usize];
        for &s in &self.0 {
            if s < 1 || s > n {
                return false;
            }
            counts[(s - 1) as usize] += 1;
        }
        counts.iter().all(|&c| c == k)
    }

    /// The word with its symbols in reversed order.
    pub fn reverse(&self) -> Word {
        let mut symbols = self.0.clone();
        symbols.reverse();
        Word(symbols)
    }

    /// Replaces each symbol `x` by `n + 1 - x`.
    ///
    /// Fails if any symbol lies outside `[n]`.
    pub fn complement(&self, n: u32) -> Result<Word> {
        let mut symbols = Vec::with_capacity(self.0.len());
        for &s in &self.0 {
            if s < 1 || s > n {
                return Err(Error::SymbolOutOfRange { symbol: s, n });
            }
            symbols.push(n + 1 - s);
        }
        Ok(Word(symbols))
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

/// Text form: `ε` for the empty word, a digit string while all symbols are
/// `<= 9` (e.g. `233211`), and comma-separated integers otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        if self.0.iter().all(|&s| s <= 9) {
            for &s in &self.0 {
                write!(f, "{}", s)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Accepts both text forms (digit string and comma-separated), plus `ε` or
/// the empty string for the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        if s.contains(',') {
            let mut symbols = Vec::new();
            for part in s.split(',').filter(|p| !p.trim().is_empty()) {
                let v: u32 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad symbol {:?} in word {:?}", part, s)))?;
                if v == 0 {
                    return Err(Error::Parse(format!("symbol 0 not allowed in {:?}", s)));
                }
                symbols.push(v);
            }
            return Ok(Word(symbols));
        }
        if s.chars().all(|c| ('1'..='9').contains(&c)) {
            let symbols = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
            return Ok(Word(symbols));
        }
        // Lone multi-digit symbol such as "10".
        if let Ok(v) = s.parse::<u32>() {
            if v >= 1 {
                return Ok(Word(vec![v]));
            }
        }
        Err(Error::Parse(format!("cannot parse word {:?}", s)))
    }
}

/// An alphabet size `n >= 0` together with a frequency `k >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RegularityProfile {
    n: u32,
    k: u32,
}

impl RegularityProfile {
    /// Rejects `k = 0`; `n = 0` is allowed and admits only ε.
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::FrequencyTooSmall { k, min: 1 });
        }
        Ok(RegularityProfile { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// Total number of symbols `k * n` in a conforming word.
    pub fn total_symbols(self) -> u64 {
        u64::from(self.n) * u64::from(self.k)
    }
}

impl fmt::Display for RegularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={}", self.n, self.k)
    }
}

/// Streams every k-regular word for `profile` exactly once, in strictly
/// increasing lexicographic order.
///
/// Uses [`DEFAULT_MAX_SYMBOLS`]; see [`all_regular_words_with_limit`] to
/// raise the budget.
pub fn all_regular_words(profile: RegularityProfile) -> Result<RegularWords> {
    all_regular_words_with_limit(profile, DEFAULT_MAX_SYMBOLS)
}

/// As [`all_regular_words`] with an explicit symbol budget.
pub fn all_regular_words_with_limit(
    profile: RegularityProfile,
    max_symbols: u64,
) -> Result<RegularWords> {
    let symbols = profile.total_symbols();
    if symbols > max_symbols {
        return Err(Error::LimitExceeded {
            symbols,
            limit: max_symbols,
        });
    }
    let mut first = Vec::with_capacity(symbols as usize);
    for s in 1..=profile.n {
        for _ in 0..profile.k {
            first.push(s);
        }
    }
    Ok(RegularWords {
        state: Some(first),
    })
}

/// Iterator over the multiset permutations of `{1^k, ..., n^k}`.
///
/// Steps with the classic next-permutation rule, which visits each distinct
/// arrangement exactly once in lexicographic order.
pub struct RegularWords {
    state: Option<Vec<u32>>,
}

impl Iterator for RegularWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.state.take()?;
        let item = Word::from_vec_unchecked(current.clone());
        let mut next = current;
        if next_permutation(&mut next) {
            self.state = Some(next);
        }
        Some(item)
    }
}

/// Advances `a` to its lexicographic successor; false when `a` was the last
/// arrangement. Duplicate values are handled (each multiset arrangement
/// appears once).
fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = a.len() - 1;
    while a[j] <= a[pivot] {
        j -= 1;
    }
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn regularity_examples() {
        let p = RegularityProfile::new(3, 2).unwrap();
        assert!(w("233211").is_regular(p));
        assert!(Word::empty().is_regular(RegularityProfile::new(0, 5).unwrap()));
        assert!(!w("1122").is_regular(RegularityProfile::new(3, 2).unwrap()));
        // Length mismatch and foreign symbols both fail.
        assert!(!w("112233").is_regular(RegularityProfile::new(3, 3).unwrap()));
        assert!(!w("112244").is_regular(RegularityProfile::new(3, 2).unwrap()));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("2112").reverse(), w("2112"));
        assert_eq!(w("223311").reverse(), w("113322"));
        assert_eq!(Word::empty().reverse(), Word::empty());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w("121").complement(2).unwrap(), w("212"));
        assert_eq!(w("11").complement(1).unwrap(), w("11"));
        assert_eq!(w("123").complement(3).unwrap(), w("321"));
        assert_eq!(
            w("123").complement(2),
            Err(Error::SymbolOutOfRange { symbol: 3, n: 2 })
        );
    }

    #[test]
    fn all_regular_words_small() {
        let words: Vec<Word> = all_regular_words(RegularityProfile::new(2, 1).unwrap())
            .unwrap()
            .collect();
        assert_eq!(words, vec![w("12"), w("21")]);

        let words: Vec<Word> = all_regular_words(RegularityProfile::new(2, 2).unwrap())
            .unwrap()
            .collect();
        assert_eq!(
            words,
            vec![w("1122"), w("1212"), w("1221"), w("2112"), w("2121"), w("2211")]
        );

        let words: Vec<Word> = all_regular_words(RegularityProfile::new(0, 3).unwrap())
            .unwrap()
            .collect();
        assert_eq!(words, vec![Word::empty()]);
    }

    #[test]
    fn limit_is_enforced() {
        let p = RegularityProfile::new(13, 2).unwrap();
        assert_eq!(
            all_regular_words(p).err(),
            Some(Error::LimitExceeded {
                symbols: 26,
                limit: DEFAULT_MAX_SYMBOLS
            })
        );
        assert!(all_regular_words_with_limit(p, 26).is_ok());
    }

    #[test]
    fn display_and_parse_forms() {
        assert_eq!(w("233211").to_string(), "233211");
        assert_eq!(Word::empty().to_string(), "ε");
        let big = Word::new(vec![10, 10, 9]).unwrap();
        assert_eq!(big.to_string(), "10,10,9");
        assert_eq!("10,10,9".parse::<Word>().unwrap(), big);
        assert_eq!("10".parse::<Word>().unwrap(), Word::new(vec![10]).unwrap());
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        // All-digit text that is not a valid digit word falls back to a
        // single symbol.
        assert_eq!("1021".parse::<Word>().unwrap(), Word::new(vec![1021]).unwrap());
        assert!("x".parse::<Word>().is_err());
        assert!("0".parse::<Word>().is_err());
    }

    #[test]
    fn profile_rejects_zero_frequency() {
        assert!(RegularityProfile::new(3, 0).is_err());
    }
}
