//! Pattern-avoiding k-regular words.
//!
//! A *k-regular word* over `[n] = {1, .., n}` contains every symbol of
//! `[n]` exactly `k` times; permutations are the `k = 1` case. This crate
//! enumerates the words that avoid a set of (possibly vincular)
//! multi-patterns, three ways:
//!
//! * [`enumerate`] — pruned exhaustive search over any pattern set;
//! * [`construct`] — direct recursive generators for the three families
//!   with two-term recurrences: `{121, 123, 132, 213}` (Fibonacci-k),
//!   `{122, 213}` (k-Fibonacci), and `{v:121, 123, 132, 213}`
//!   (Fibonacci-squared), plus the annex/base decomposition and prefix
//!   tree behind the vincular family;
//! * [`sequences`] — exact evaluation of the counting recurrences and
//!   closed formulas the classes are measured against.
//!
//! The three routes cross-check each other: the generators and the search
//! must produce identical sets, and both must match the sequence values.
//!
//! ```
//! use regular_words::{count_avoiders, RegularityProfile, PatternSet};
//! use regular_words::sequences::a_k;
//!
//! let profile = RegularityProfile::new(3, 2)?;
//! let set: PatternSet = "121,123,132,213".parse()?;
//! let count = count_avoiders(profile, &set)?;
//! assert_eq!(count.to_string(), "5");
//! assert_eq!(a_k(2, 3).to_string(), "5");
//! # Ok::<(), regular_words::Error>(())
//! ```
//!
//! The accompanying guide in `book/` walks through the concepts; its code
//! snippets compile and run as part of `cargo test` (see the `book`
//! module below).

pub mod construct;
pub mod enumerate;
mod error;
pub mod pattern;
pub mod sequences;
pub mod word;

pub use enumerate::{
    count_avoiders, count_avoiders_with, enumerate_avoiders, enumerate_avoiders_with,
    AvoidanceClass, SearchOptions,
};
pub use error::{Error, Result};
pub use pattern::{avoids_all, contains, order_isomorphic, Pattern, PatternSet, Symmetry};
pub use word::{
    all_regular_words, all_regular_words_with_limit, RegularityProfile, Word,
    DEFAULT_MAX_SYMBOLS,
};

// Run every Rust snippet in the guide as a doctest, so the book cannot
// drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
}
