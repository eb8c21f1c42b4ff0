//! Direct generators for the three theorem families, plus the annex/base
//! machinery and the bi-rooted prefix tree behind the vincular family.
//!
//! Each generator builds level `n` from the levels below it:
//!
//! * [`generate_fib_k`]: words avoiding `{121, 123, 132, 213}`. Level `n`
//!   is `n^k` prefixed onto level `n-1`, plus `n^b (n-1)^k n^(k-b)` for
//!   `0 <= b < k` prefixed onto level `n-2`. Counts follow
//!   `a(n) = a(n-1) + k * a(n-2)`.
//! * [`generate_k_fib`]: words avoiding `{122, 213}` for `k >= 2`. Level
//!   `n` is `n^(k-1) . insert(word, n, i+1)` for `0 <= i <= k-1` over level
//!   `n-1`, plus `n^(k-1) (n-1)^k n` prefixed onto level `n-2`. Counts
//!   follow `b(n) = k * b(n-1) + b(n-2)`.
//! * [`generate_fib_squared`]: 2-regular words avoiding
//!   `{v:121, 123, 132, 213}`. Every word splits as annex + base; the
//!   annex catalog is four special cases plus two root-to-leaf paths per
//!   depth of the prefix tree, and the base is a smaller word of the same
//!   family.
//!
//! Levels are memoized per invocation, so the recursive reuse of levels
//! `n-1` and `n-2` costs nothing extra.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{RegularityProfile, Word};

/// Inserts `x` at 1-based `position`, shifting later symbols right.
pub fn insert(w: &Word, x: u32, position: usize) -> Result<Word> {
    if x == 0 {
        return Err(Error::SymbolOutOfRange { symbol: 0, n: u32::MAX });
    }
    if position < 1 || position > w.len() + 1 {
        return Err(Error::PositionOutOfRange {
            position,
            max: w.len() + 1,
        });
    }
    let mut symbols = Vec::with_capacity(w.len() + 1);
    symbols.extend_from_slice(&w.symbols()[..position - 1]);
    symbols.push(x);
    symbols.extend_from_slice(&w.symbols()[position - 1..]);
    Ok(Word::from_vec_unchecked(symbols))
}

fn repeated(symbol: u32, times: u32) -> Vec<u32> {
    vec![symbol; times as usize]
}

fn prefixed(prefix: &[u32], tail: &Word) -> Word {
    let mut symbols = Vec::with_capacity(prefix.len() + tail.len());
    symbols.extend_from_slice(prefix);
    symbols.extend_from_slice(tail.symbols());
    Word::from_vec_unchecked(symbols)
}

/// Builds `Av_n^k{121, 123, 132, 213}` constructively, in recursion order.
///
/// Requires `k >= 1`.
pub fn generate_fib_k(n: u32, k: u32) -> Vec<Word> {
    assert!(k >= 1, "generate_fib_k needs k >= 1");
    let mut levels: Vec<Vec<Word>> = Vec::with_capacity(n as usize + 1);
    levels.push(vec![Word::empty()]);
    if n >= 1 {
        levels.push(vec![Word::from_vec_unchecked(repeated(1, k))]);
    }
    for j in 2..=n {
        let mut level = Vec::new();
        // (1) j^k in front of each level j-1 word.
        let head = repeated(j, k);
        for w in &levels[(j - 1) as usize] {
            level.push(prefixed(&head, w));
        }
        // (2) j^b (j-1)^k j^(k-b) in front of each level j-2 word.
        for b in 0..k {
            let mut head = repeated(j, b);
            head.extend(repeated(j - 1, k));
            head.extend(repeated(j, k - b));
            for w in &levels[(j - 2) as usize] {
                level.push(prefixed(&head, w));
            }
        }
        levels.push(level);
    }
    levels.pop().expect("levels is non-empty")
}

/// Builds `Av_n^k{122, 213}` constructively, in recursion order.
///
/// The theorem needs `k >= 2`; smaller `k` is rejected.
pub fn generate_k_fib(n: u32, k: u32) -> Result<Vec<Word>> {
    if k < 2 {
        return Err(Error::FrequencyTooSmall { k, min: 2 });
    }
    let mut levels: Vec<Vec<Word>> = Vec::with_capacity(n as usize + 1);
    levels.push(vec![Word::empty()]);
    if n >= 1 {
        levels.push(vec![Word::from_vec_unchecked(repeated(1, k))]);
    }
    for j in 2..=n {
        let mut level = Vec::new();
        // (1) j^(k-1) . insert(w, j, i+1) for each level j-1 word and
        // each 0 <= i <= k-1.
        let head = repeated(j, k - 1);
        for w in &levels[(j - 1) as usize] {
            for i in 0..k {
                let inserted = insert(w, j, (i + 1) as usize)
                    .expect("insert position within prefix of level word");
                level.push(prefixed(&head, &inserted));
            }
        }
        // (2) j^(k-1) (j-1)^k j in front of each level j-2 word.
        let mut head = repeated(j, k - 1);
        head.extend(repeated(j - 1, k));
        head.push(j);
        for w in &levels[(j - 2) as usize] {
            level.push(prefixed(&head, w));
        }
        levels.push(level);
    }
    Ok(levels.pop().expect("levels is non-empty"))
}

/// Builds `Av_n^2{v:121, 123, 132, 213}` constructively, in recursion order.
pub fn generate_fib_squared(n: u32) -> Vec<Word> {
    let mut levels: Vec<Vec<Word>> = Vec::with_capacity(n as usize + 1);
    levels.push(vec![Word::empty()]);
    if n >= 1 {
        levels.push(vec![Word::from_vec_unchecked(vec![1, 1])]);
    }
    for j in 2..=n {
        let mut level = Vec::new();
        // Annex j j over level j-1.
        for w in &levels[(j - 1) as usize] {
            level.push(prefixed(&[j, j], w));
        }
        // The three remaining special annexes over level j-2.
        for annex in special_annexes(j).into_iter().skip(1) {
            for w in &levels[(j - 2) as usize] {
                level.push(prefixed(&annex, w));
            }
        }
        // Two root-to-leaf annexes per depth, over level j-d-1.
        for d in 2..j {
            for variant in [PathVariant::RootN, PathVariant::RootNMinusOne] {
                let annex = path_annex(j, j - d, variant);
                for w in &levels[(j - d - 1) as usize] {
                    level.push(prefixed(&annex, w));
                }
            }
        }
        levels.push(level);
    }
    levels.pop().expect("levels is non-empty")
}

/// The four short annexes over `{n-1, n}`: `nn`, `(n-1)(n-1)nn`,
/// `(n-1)nn(n-1)`, `n(n-1)(n-1)n`.
fn special_annexes(n: u32) -> [Vec<u32>; 4] {
    let m = n - 1;
    [
        vec![n, n],
        vec![m, m, n, n],
        vec![m, n, n, m],
        vec![n, m, m, n],
    ]
}

/// Which of the two roots a root-to-leaf path starts from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PathVariant {
    /// Prefix `n (n-1) n ...`
    RootN,
    /// Prefix `(n-1) n n ...`
    RootNMinusOne,
}

/// The primary path labels: `n` followed by pairs `(m, m+1)` for
/// `m = n-2, n-3, ..., 2`, ending with `1` — the "two steps forward one
/// step back" walk from `n` down to `1`.
fn primary_path(n: u32) -> Vec<u32> {
    debug_assert!(n >= 3);
    let mut path = vec![n];
    for m in (2..=n.saturating_sub(2)).rev() {
        path.push(m);
        path.push(m + 1);
    }
    path.push(1);
    path
}

/// Root-to-leaf labels for the branch hanging off primary-path node
/// `branch` (`1 <= branch <= n-2`).
fn path_annex(n: u32, branch: u32, variant: PathVariant) -> Vec<u32> {
    debug_assert!((1..=n.saturating_sub(2)).contains(&branch));
    let mut annex = match variant {
        PathVariant::RootN => vec![n, n - 1],
        PathVariant::RootNMinusOne => vec![n - 1, n],
    };
    for &label in &primary_path(n) {
        annex.push(label);
        if label == branch {
            break;
        }
    }
    annex.push(branch);
    annex.push(branch + 1);
    annex
}

/// The complete annex catalog for Fibonacci-squared words over `[n]`:
/// the four special cases plus, for each depth `2 <= d <= n-1`, the two
/// root-to-leaf paths of the prefix tree.
pub fn prefix_tree_annexes(n: u32) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::AlphabetTooSmall { n, min: 2 });
    }
    let mut annexes: Vec<Word> = special_annexes(n)
        .into_iter()
        .map(Word::from_vec_unchecked)
        .collect();
    for d in 2..n {
        for variant in [PathVariant::RootN, PathVariant::RootNMinusOne] {
            annexes.push(Word::from_vec_unchecked(path_annex(n, n - d, variant)));
        }
    }
    Ok(annexes)
}

/// The annex/base split of a regular word.
///
/// The base is the longest strict suffix that is k-regular over `[m]` for
/// some `m < n` (possibly ε); the annex is the non-empty remainder and
/// holds exactly `k` copies of each symbol in `{m+1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardPartition {
    annex: Word,
    base: Word,
    base_alphabet: u32,
}

impl StandardPartition {
    pub fn annex(&self) -> &Word {
        &self.annex
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    /// The `m` with `base` regular over `[m]`.
    pub fn base_alphabet(&self) -> u32 {
        self.base_alphabet
    }

    /// Reassembles the original word.
    pub fn recombine(&self) -> Word {
        self.annex.concat(&self.base)
    }
}

/// Splits a non-empty k-regular word into annex and base.
///
/// Scans prefixes of length `k * j`; the first one holding exactly `k`
/// copies of each of the top `j` symbols is the annex (the shortest
/// non-empty prefix made of whole top symbol classes), which leaves the
/// longest regular strict suffix as the base.
pub fn standard_partition(w: &Word, profile: RegularityProfile) -> Result<StandardPartition> {
    let (n, k) = (profile.n(), profile.k());
    if w.is_empty() || n == 0 {
        return Err(Error::EmptyWord);
    }
    if !w.is_regular(profile) {
        return Err(Error::NotRegular { n, k });
    }
    let symbols = w.symbols();
    let mut counts = vec![0u32; n as usize];
    let mut pos = 0usize;
    for j in 1..=n {
        // Extend the prefix to length k * j.
        let target = (u64::from(k) * u64::from(j)) as usize;
        while pos < target {
            counts[(symbols[pos] - 1) as usize] += 1;
            pos += 1;
        }
        let top = n - j; // prefix must hold symbols top+1..=n
        let ok = (top..n).all(|s| counts[s as usize] == k)
            && (0..top).all(|s| counts[s as usize] == 0);
        if ok {
            let annex = Word::from_vec_unchecked(symbols[..target].to_vec());
            let base = Word::from_vec_unchecked(symbols[target..].to_vec());
            return Ok(StandardPartition {
                annex,
                base,
                base_alphabet: top,
            });
        }
    }
    unreachable!("the full word is always a valid annex");
}

/// The bi-rooted prefix tree whose root-to-leaf paths encode the
/// non-special annexes of Fibonacci-squared words over `[n]`.
#[derive(Clone, Debug)]
pub struct PrefixTree {
    n: u32,
    labels: Vec<u32>,
    edges: Vec<(usize, usize)>,
    roots: [usize; 2],
    leaves: Vec<usize>,
}

impl PrefixTree {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn roots(&self) -> [usize; 2] {
        self.roots
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    /// DOT text with symbol values as labels and the two roots marked.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph prefix_tree {\n");
        for (id, label) in self.labels.iter().enumerate() {
            let shape = if self.roots.contains(&id) {
                " shape=doublecircle"
            } else {
                ""
            };
            let _ = writeln!(out, "  v{} [label=\"{}\"{}];", id, label, shape);
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{} -- v{};", a, b);
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the explicit prefix tree for `n >= 3` (4(n-1) vertices).
pub fn prefix_tree(n: u32) -> Result<PrefixTree> {
    if n < 3 {
        return Err(Error::AlphabetTooSmall { n, min: 3 });
    }
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let push = |labels: &mut Vec<u32>, label: u32| -> usize {
        labels.push(label);
        labels.len() - 1
    };

    let root_n = push(&mut labels, n);
    let under_root_n = push(&mut labels, n - 1);
    edges.push((root_n, under_root_n));
    let root_m = push(&mut labels, n - 1);
    let under_root_m = push(&mut labels, n);
    edges.push((root_m, under_root_m));

    let path = primary_path(n);
    let mut previous = None;
    let mut path_ids = Vec::with_capacity(path.len());
    for &label in &path {
        let id = push(&mut labels, label);
        if let Some(prev) = previous {
            edges.push((prev, id));
        }
        previous = Some(id);
        path_ids.push(id);
    }
    edges.push((under_root_n, path_ids[0]));
    edges.push((under_root_m, path_ids[0]));

    // Leaf branches hang off every second path node: indices 1, 3, 5, ...
    let mut leaves = Vec::new();
    for (idx, &id) in path_ids.iter().enumerate() {
        if idx % 2 == 1 {
            let label = path[idx];
            let copy = push(&mut labels, label);
            edges.push((id, copy));
            let leaf = push(&mut labels, label + 1);
            edges.push((copy, leaf));
            leaves.push(leaf);
        }
    }

    Ok(PrefixTree {
        n,
        labels,
        edges,
        roots: [root_n, root_m],
        leaves,
    })
}
