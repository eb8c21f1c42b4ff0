//! Pruned exhaustive search over avoidance classes.
//!
//! Words are grown symbol by symbol with per-symbol multiplicity
//! bookkeeping. A prefix that already contains a forbidden pattern can
//! never lose it again (containment is monotone under appending), so the
//! branch is cut immediately. Because only the freshly appended position
//! can participate in a new occurrence, each extension is checked with a
//! suffix-anchored search instead of a full rescan.
//!
//! Branching on the next symbol value in increasing order makes the output
//! stream lexicographic without sorting, and makes first-symbol work
//! splitting deterministic: branch results are concatenated in symbol
//! order, so threaded runs are byte-identical to sequential ones.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pattern::{self, PatternSet};
use crate::word::{RegularityProfile, Word, DEFAULT_MAX_SYMBOLS};

/// Limits and parallelism for one enumeration call.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Upper bound on `k * n`.
    pub max_symbols: u64,
    /// Worker threads for the first branching level; `0` and `1` both mean
    /// sequential.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_symbols: DEFAULT_MAX_SYMBOLS,
            threads: 1,
        }
    }
}

/// An avoidance query together with its materialized answer.
#[derive(Clone, Debug)]
pub struct AvoidanceClass {
    profile: RegularityProfile,
    patterns: PatternSet,
    words: Option<Vec<Word>>,
    count: BigUint,
}

impl AvoidanceClass {
    pub fn profile(&self) -> RegularityProfile {
        self.profile
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }

    /// The word list, when the class was materialized; lexicographic and
    /// duplicate-free.
    pub fn words(&self) -> Option<&[Word]> {
        self.words.as_deref()
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }
}

/// Materializes `Av_n^k(set)` in lexicographic order.
pub fn enumerate_avoiders(profile: RegularityProfile, set: &PatternSet) -> Result<AvoidanceClass> {
    enumerate_avoiders_with(profile, set, SearchOptions::default())
}

/// As [`enumerate_avoiders`] with explicit limits and threading.
pub fn enumerate_avoiders_with(
    profile: RegularityProfile,
    set: &PatternSet,
    options: SearchOptions,
) -> Result<AvoidanceClass> {
    check_limit(profile, options.max_symbols)?;
    let words = run_search(profile, set, options.threads, true).words;
    let words = words.expect("materializing search returns words");
    let count = BigUint::from(words.len());
    Ok(AvoidanceClass {
        profile,
        patterns: set.clone(),
        words: Some(words),
        count,
    })
}

/// Counts `|Av_n^k(set)|` without materializing the word list.
pub fn count_avoiders(profile: RegularityProfile, set: &PatternSet) -> Result<BigUint> {
    count_avoiders_with(profile, set, SearchOptions::default())
}

/// As [`count_avoiders`] with explicit limits and threading.
pub fn count_avoiders_with(
    profile: RegularityProfile,
    set: &PatternSet,
    options: SearchOptions,
) -> Result<BigUint> {
    check_limit(profile, options.max_symbols)?;
    Ok(run_search(profile, set, options.threads, false).count)
}

fn check_limit(profile: RegularityProfile, max_symbols: u64) -> Result<()> {
    let symbols = profile.total_symbols();
    if symbols > max_symbols {
        return Err(Error::LimitExceeded {
            symbols,
            limit: max_symbols,
        });
    }
    Ok(())
}

struct SearchOutcome {
    words: Option<Vec<Word>>,
    count: BigUint,
}

fn run_search(
    profile: RegularityProfile,
    set: &PatternSet,
    threads: usize,
    materialize: bool,
) -> SearchOutcome {
    let n = profile.n();
    if threads <= 1 || n < 2 {
        let mut state = SearchState::new(profile, set, materialize);
        state.descend();
        return state.finish();
    }

    // One task per first-symbol branch; merging in symbol order keeps the
    // result identical to the sequential run.
    let workers = threads.min(n as usize);
    let mut branch_results: Vec<Option<SearchOutcome>> = Vec::new();
    branch_results.resize_with(n as usize, || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..workers {
            let handle = scope.spawn(move || {
                let mut local = Vec::new();
                let mut branch = worker as u32;
                while branch < n {
                    let mut state = SearchState::new(profile, set, materialize);
                    state.descend_branch(branch + 1);
                    local.push((branch as usize, state.finish()));
                    branch += workers as u32;
                }
                local
            });
            handles.push(handle);
        }
        for handle in handles {
            for (branch, outcome) in handle.join().expect("search worker panicked") {
                branch_results[branch] = Some(outcome);
            }
        }
    });

    let mut words = if materialize { Some(Vec::new()) } else { None };
    let mut count = BigUint::from(0u32);
    for outcome in branch_results.into_iter().flatten() {
        count += outcome.count;
        if let (Some(all), Some(mut part)) = (words.as_mut(), outcome.words) {
            all.append(&mut part);
        }
    }
    SearchOutcome { words, count }
}

struct SearchState<'a> {
    set: &'a PatternSet,
    total: usize,
    remaining: Vec<u32>,
    prefix: Vec<u32>,
    found: u128,
    words: Option<Vec<Word>>,
}

impl<'a> SearchState<'a> {
    fn new(profile: RegularityProfile, set: &'a PatternSet, materialize: bool) -> Self {
        SearchState {
            set,
            total: profile.total_symbols() as usize,
            remaining: vec![profile.k(); profile.n() as usize],
            prefix: Vec::with_capacity(profile.total_symbols() as usize),
            found: 0,
            words: if materialize { Some(Vec::new()) } else { None },
        }
    }

    /// Full search from the empty prefix.
    fn descend(&mut self) {
        if self.prefix.len() == self.total {
            self.emit();
            return;
        }
        for symbol in 1..=self.remaining.len() as u32 {
            self.try_branch(symbol);
        }
    }

    /// Search restricted to words starting with `first`.
    fn descend_branch(&mut self, first: u32) {
        self.try_branch(first);
    }

    fn try_branch(&mut self, symbol: u32) {
        let slot = (symbol - 1) as usize;
        if self.remaining[slot] == 0 {
            return;
        }
        self.prefix.push(symbol);
        if !pattern::any_anchored_at_end(&self.prefix, self.set) {
            self.remaining[slot] -= 1;
            self.descend();
            self.remaining[slot] += 1;
        }
        self.prefix.pop();
    }

    fn emit(&mut self) {
        self.found += 1;
        if let Some(words) = self.words.as_mut() {
            words.push(Word::from_vec_unchecked(self.prefix.clone()));
        }
    }

    fn finish(self) -> SearchOutcome {
        SearchOutcome {
            words: self.words,
            count: BigUint::from(self.found),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: u32, k: u32) -> RegularityProfile {
        RegularityProfile::new(n, k).unwrap()
    }

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn words(class: &AvoidanceClass) -> Vec<String> {
        class.words().unwrap().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn fibonacci_two_words_at_three() {
        let class = enumerate_avoiders(profile(3, 2), &set("121,123,132,213")).unwrap();
        assert_eq!(
            words(&class),
            vec!["223311", "322311", "331122", "332112", "332211"]
        );
        assert_eq!(class.count(), &BigUint::from(5u32));
    }

    #[test]
    fn two_fibonacci_words_at_three() {
        let class = enumerate_avoiders(profile(3, 2), &set("122,213")).unwrap();
        let mut got = words(&class);
        got.sort();
        let mut expected = vec![
            "322311", "332112", "323112", "332211", "323211", "332121", "323121",
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn vincular_class_at_three() {
        let class = enumerate_avoiders(profile(3, 2), &set("v:121,123,132,213")).unwrap();
        let got = words(&class);
        assert_eq!(
            got,
            vec![
                "223311", "233112", "233211", "322311", "323112", "331122", "331221",
                "332112", "332211"
            ]
        );
    }

    #[test]
    fn stirling_words_at_three() {
        let class = enumerate_avoiders(profile(3, 2), &set("212")).unwrap();
        assert_eq!(class.count(), &BigUint::from(15u32));
    }

    #[test]
    fn empty_alphabet_has_only_epsilon() {
        let class = enumerate_avoiders(profile(0, 4), &set("123")).unwrap();
        assert_eq!(class.words().unwrap(), &[Word::empty()]);
    }

    #[test]
    fn single_symbol_profile() {
        let count = count_avoiders(profile(1, 7), &set("12,21")).unwrap();
        assert_eq!(count, BigUint::from(1u32));
    }

    #[test]
    fn figure_caption_counts() {
        let a = count_avoiders(profile(4, 3), &set("121,123,132,213")).unwrap();
        assert_eq!(a, BigUint::from(19u32));
        let b = count_avoiders(profile(4, 3), &set("122,213")).unwrap();
        assert_eq!(b, BigUint::from(43u32));
    }

    #[test]
    fn limit_error() {
        let err = count_avoiders(profile(13, 2), &set("121")).unwrap_err();
        assert_eq!(
            err,
            Error::LimitExceeded {
                symbols: 26,
                limit: DEFAULT_MAX_SYMBOLS
            }
        );
    }

    #[test]
    fn threads_match_sequential() {
        let seq = enumerate_avoiders(profile(4, 2), &set("121")).unwrap();
        let par = enumerate_avoiders_with(
            profile(4, 2),
            &set("121"),
            SearchOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.words(), par.words());
        let seq_count = count_avoiders(profile(4, 2), &set("212")).unwrap();
        let par_count = count_avoiders_with(
            profile(4, 2),
            &set("212"),
            SearchOptions {
                threads: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq_count, par_count);
    }
}
