//! Independent oracles for cross-checking the library.
//!
//! Everything here recomputes results from first principles with
//! algorithms unrelated to the production code paths: multiset
//! permutations by counted recursion (the library iterates with the
//! next-permutation rule), pattern containment by exhaustive index-subset
//! scan (the library backtracks), and k-ary trees by forest DP (the
//! library divides binomials).

use num_bigint::BigUint;
use num_traits::One;

use regular_words::Pattern;

/// All arrangements of the multiset {1^k, ..., n^k}, by recursive descent
/// over remaining multiplicities. Emits lexicographic order by
/// construction.
pub fn multiset_permutations(n: u32, k: u32) -> Vec<Vec<u32>> {
    let total = (n * k) as usize;
    let mut remaining = vec![k; n as usize];
    let mut prefix = Vec::with_capacity(total);
    let mut out = Vec::new();
    descend(total, &mut remaining, &mut prefix, &mut out);
    out
}

fn descend(total: usize, remaining: &mut [u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == total {
        out.push(prefix.clone());
        return;
    }
    for s in 0..remaining.len() {
        if remaining[s] > 0 {
            remaining[s] -= 1;
            prefix.push(s as u32 + 1);
            descend(total, remaining, prefix, out);
            prefix.pop();
            remaining[s] += 1;
        }
    }
}

/// Multinomial (kn)! / (k!)^n.
pub fn multinomial(n: u32, k: u32) -> BigUint {
    let factorial = |m: u32| -> BigUint {
        let mut f = BigUint::one();
        for i in 2..=u64::from(m) {
            f *= i;
        }
        f
    };
    let mut denom = BigUint::one();
    for _ in 0..n {
        denom *= factorial(k);
    }
    factorial(n * k) / denom
}

/// Containment by scanning every index subset of the right size, checking
/// order isomorphism (with equalities) and the adjacency mask directly.
pub fn naive_contains(host: &[u32], pattern: &Pattern) -> bool {
    let l = pattern.len();
    if l > host.len() {
        return false;
    }
    let mut indices = Vec::with_capacity(l);
    subsets(host, pattern, 0, &mut indices)
}

fn subsets(host: &[u32], pattern: &Pattern, from: usize, indices: &mut Vec<usize>) -> bool {
    if indices.len() == pattern.len() {
        return occurrence_matches(host, pattern, indices);
    }
    let needed = pattern.len() - indices.len();
    for i in from..host.len() {
        if host.len() - i < needed {
            break;
        }
        indices.push(i);
        if subsets(host, pattern, i + 1, indices) {
            return true;
        }
        indices.pop();
    }
    false
}

fn occurrence_matches(host: &[u32], pattern: &Pattern, indices: &[usize]) -> bool {
    let p = pattern.symbols();
    for a in 0..indices.len() {
        for b in (a + 1)..indices.len() {
            if host[indices[a]].cmp(&host[indices[b]]) != p[a].cmp(&p[b]) {
                return false;
            }
        }
    }
    for (gap, &attached) in pattern.adjacency().iter().enumerate() {
        if attached && indices[gap + 1] != indices[gap] + 1 {
            return false;
        }
    }
    true
}

/// Number of k-ary trees with n nodes, by DP over forests: a tree is a
/// root plus an ordered forest of k subtrees.
pub fn count_k_ary_trees(k: u32, n: u64) -> BigUint {
    let n = n as usize;
    let mut trees: Vec<BigUint> = vec![BigUint::one()]; // trees[0] = 1 (empty)
    for m in 1..=n {
        // forests[j][s] = forests of j subtrees, s nodes total
        let mut forest: Vec<BigUint> = vec![BigUint::one()];
        forest.resize(m, BigUint::ZERO);
        for _ in 0..k {
            let mut next = vec![BigUint::ZERO; m];
            for s in 0..m {
                if forest[s] == BigUint::ZERO {
                    continue;
                }
                for t in 0..m - s {
                    let add = &forest[s] * &trees[t];
                    next[s + t] += add;
                }
            }
            forest = next;
        }
        trees.push(forest[m - 1].clone());
    }
    trees[n].clone()
}
