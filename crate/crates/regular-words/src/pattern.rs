//! Classical and vincular multi-patterns, containment, and the symmetries
//! of the square.
//!
//! A [`Pattern`] is a short word such as `121` or `213` together with an
//! adjacency mask. Mask position `i` set means pattern positions `i` and
//! `i + 1` must land on adjacent host positions; the all-true mask gives a
//! fully vincular (consecutive) pattern, written `v:121` in text form.
//!
//! Containment is order isomorphism with equalities preserved in both
//! directions: a host subword matches `121` only where its first and third
//! symbols are equal and its middle symbol is strictly larger. This is the
//! reading under which `232` matches `121` while `231` does not.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::Word;

/// One of the three non-identity symmetries of the square.
///
/// Each acts simultaneously on words and patterns and preserves avoidance
/// counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::Reverse => write!(f, "reverse"),
            Symmetry::Complement => write!(f, "complement"),
            Symmetry::ReverseComplement => write!(f, "reverse-complement"),
        }
    }
}

/// A multi-pattern with an adjacency mask.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    symbols: Vec<u32>,
    adjacency: Vec<bool>,
}

impl Pattern {
    /// A classical pattern: no adjacency constraints.
    pub fn classical(symbols: Vec<u32>) -> Result<Self> {
        let adjacency = vec![false; symbols.len().saturating_sub(1)];
        Pattern::with_adjacency(symbols, adjacency)
    }

    /// A fully vincular (consecutive) pattern: every gap constrained.
    pub fn consecutive(symbols: Vec<u32>) -> Result<Self> {
        let adjacency = vec![true; symbols.len().saturating_sub(1)];
        Pattern::with_adjacency(symbols, adjacency)
    }

    /// A pattern with an arbitrary adjacency mask.
    ///
    /// Symbols must use each value `1..=m` at least once for some `m >= 1`,
    /// and the mask must have length `len - 1`.
    pub fn with_adjacency(symbols: Vec<u32>, adjacency: Vec<bool>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Parse("pattern must be non-empty".into()));
        }
        let m = *symbols.iter().max().unwrap();
        if m == 0 {
            return Err(Error::SymbolOutOfRange { symbol: 0, n: m });
        }
        for v in 1..=m {
            if !symbols.contains(&v) {
                return Err(Error::Parse(format!(
                    "pattern must use every value 1..={} (missing {})",
                    m, v
                )));
            }
        }
        if adjacency.len() != symbols.len() - 1 {
            return Err(Error::Parse(format!(
                "adjacency mask length {} != pattern length {} - 1",
                adjacency.len(),
                symbols.len()
            )));
        }
        Ok(Pattern { symbols, adjacency })
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn adjacency(&self) -> &[bool] {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // patterns are non-empty by construction
    }

    /// True when no gap is constrained.
    pub fn is_classical(&self) -> bool {
        self.adjacency.iter().all(|&a| !a)
    }

    /// True when every gap is constrained.
    pub fn is_consecutive(&self) -> bool {
        self.adjacency.iter().all(|&a| a)
    }

    /// Largest symbol value used by the pattern.
    pub fn max_symbol(&self) -> u32 {
        *self.symbols.iter().max().unwrap()
    }

    /// Applies a symmetry of the square.
    ///
    /// Reversal reverses both the symbols and the adjacency mask;
    /// complementation maps `x` to `m + 1 - x` for the pattern's own
    /// maximum `m` and leaves the mask untouched.
    pub fn transformed(&self, sym: Symmetry) -> Pattern {
        match sym {
            Symmetry::Reverse => {
                let mut symbols = self.symbols.clone();
                symbols.reverse();
                let mut adjacency = self.adjacency.clone();
                adjacency.reverse();
                Pattern { symbols, adjacency }
            }
            Symmetry::Complement => {
                let m = self.max_symbol();
                let symbols = self.symbols.iter().map(|&x| m + 1 - x).collect();
                Pattern {
                    symbols,
                    adjacency: self.adjacency.clone(),
                }
            }
            Symmetry::ReverseComplement => {
                self.transformed(Symmetry::Reverse).transformed(Symmetry::Complement)
            }
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self)
    }
}

/// Text form: `121` for classical, `v:121` for fully vincular. Mixed masks
/// render the mask explicitly as `121;adj=10`.
impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: String = if self.symbols.iter().all(|&s| s <= 9) {
            self.symbols.iter().map(|s| s.to_string()).collect()
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            parts.join(",")
        };
        if self.adjacency.is_empty() || self.is_classical() {
            write!(f, "{}", body)
        } else if self.is_consecutive() {
            write!(f, "v:{}", body)
        } else {
            let mask: String = self
                .adjacency
                .iter()
                .map(|&a| if a { '1' } else { '0' })
                .collect();
            write!(f, "{};adj={}", body, mask)
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (vincular, body) = match s.strip_prefix("v:") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if body.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        let word: Word = body.parse()?;
        let symbols = word.symbols().to_vec();
        if vincular {
            Pattern::consecutive(symbols)
        } else {
            Pattern::classical(symbols)
        }
    }
}

/// A duplicate-free, non-empty set of patterns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    /// Sorts and deduplicates; rejects the empty set.
    pub fn new(mut patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Parse("pattern set must be non-empty".into()));
        }
        patterns.sort();
        patterns.dedup();
        Ok(PatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    /// Applies a symmetry to every member.
    pub fn transformed(&self, sym: Symmetry) -> PatternSet {
        let patterns = self.patterns.iter().map(|p| p.transformed(sym)).collect();
        PatternSet::new(patterns).expect("transform of non-empty set is non-empty")
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated list of patterns, e.g. `v:121,123,132,213`.
impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let patterns: Result<Vec<Pattern>> = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(Pattern::from_str)
            .collect();
        PatternSet::new(patterns?)
    }
}

/// Order isomorphism with equalities preserved: for all `i`, `j`,
/// `a[i] < a[j]` iff `b[i] < b[j]` and `a[i] = a[j]` iff `b[i] = b[j]`.
///
/// Fails on length mismatch.
pub fn order_isomorphic(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Parse(format!(
            "order isomorphism needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if (a[i].cmp(&a[j])) != (b[i].cmp(&b[j])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `word` contains an occurrence of `pattern`: positions
/// `i_1 < i_2 < ... < i_l` whose symbols are order isomorphic to the
/// pattern, with every masked gap occupying consecutive positions.
pub fn contains(word: &Word, pattern: &Pattern) -> bool {
    contains_in(word.symbols(), pattern)
}

pub(crate) fn contains_in(host: &[u32], pattern: &Pattern) -> bool {
    let l = pattern.len();
    if l > host.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(l);
    search_forward(host, pattern, 0, &mut chosen)
}

/// True iff an occurrence of `pattern` ends exactly at the last position of
/// `host`. Sound basis for incremental pruning: appending a symbol can only
/// create occurrences that use (hence end at) the new position.
pub(crate) fn contains_anchored_at_end(host: &[u32], pattern: &Pattern) -> bool {
    let l = pattern.len();
    if l > host.len() || host.is_empty() {
        return false;
    }
    let mut chosen = Vec::with_capacity(l);
    chosen.push(host.len() - 1);
    search_backward(host, pattern, &mut chosen)
}

/// Extends a partial assignment `chosen` of host positions for pattern
/// slots `0..chosen.len()`; tries candidates for the next slot.
fn search_forward(host: &[u32], pattern: &Pattern, start: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    // Slot j at position i leaves room for the remaining slots only while
    // i <= len - remaining.
    let remaining = pattern.len() - j;
    if host.len() < remaining {
        return false;
    }
    let max_i = host.len() - remaining;
    if j > 0 && pattern.adjacency()[j - 1] {
        let i = chosen[j - 1] + 1;
        if i <= max_i && consistent(host, pattern, chosen, i, j) {
            chosen.push(i);
            if search_forward(host, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        return false;
    }
    for i in start..=max_i {
        if consistent(host, pattern, chosen, i, j) {
            chosen.push(i);
            if search_forward(host, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Backward variant used by the anchored check; `chosen` holds positions for
/// the pattern suffix, last slot first.
fn search_backward(host: &[u32], pattern: &Pattern, chosen: &mut Vec<usize>) -> bool {
    let assigned = chosen.len();
    if assigned == pattern.len() {
        return true;
    }
    // Slot being assigned, and the host position of the slot after it.
    let j = pattern.len() - 1 - assigned;
    let next_pos = chosen[assigned - 1];
    // Slots 0..j still need j positions below i, so i >= j.
    if pattern.adjacency()[j] {
        if next_pos == 0 {
            return false;
        }
        let i = next_pos - 1;
        if i >= j && consistent_backward(host, pattern, chosen, i, j) {
            chosen.push(i);
            if search_backward(host, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
        return false;
    }
    for i in (j..next_pos).rev() {
        if consistent_backward(host, pattern, chosen, i, j) {
            chosen.push(i);
            if search_backward(host, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Checks the candidate host position `i` for pattern slot `j` against all
/// previously assigned slots `0..j`.
fn consistent(host: &[u32], pattern: &Pattern, chosen: &[usize], i: usize, j: usize) -> bool {
    let p = pattern.symbols();
    for (jp, &ip) in chosen.iter().enumerate() {
        if host[ip].cmp(&host[i]) != p[jp].cmp(&p[j]) {
            return false;
        }
    }
    true
}

fn consistent_backward(
    host: &[u32],
    pattern: &Pattern,
    chosen: &[usize],
    i: usize,
    j: usize,
) -> bool {
    let p = pattern.symbols();
    let l = pattern.len();
    for (offset, &ip) in chosen.iter().enumerate() {
        let jp = l - 1 - offset;
        if host[ip].cmp(&host[i]) != p[jp].cmp(&p[j]) {
            return false;
        }
    }
    true
}

/// True iff `word` contains no pattern of `set`.
pub fn avoids_all(word: &Word, set: &PatternSet) -> bool {
    set.patterns().iter().all(|p| !contains(word, p))
}

pub(crate) fn any_anchored_at_end(host: &[u32], set: &PatternSet) -> bool {
    set.patterns()
        .iter()
        .any(|p| contains_anchored_at_end(host, p))
}
