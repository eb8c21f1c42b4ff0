//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by word construction, pattern parsing, and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A symbol fell outside the alphabet `[n]` expected by the operation.
    #[error("symbol {symbol} out of range for alphabet [1..={n}]")]
    SymbolOutOfRange { symbol: u32, n: u32 },

    /// A 1-based insertion position was outside `1..=len+1`.
    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    /// The word is not `k`-regular over `[n]` where the operation requires it.
    #[error("word is not {k}-regular over [1..={n}]")]
    NotRegular { n: u32, k: u32 },

    /// The operation needs a non-empty word.
    #[error("operation requires a non-empty word")]
    EmptyWord,

    /// A frequency parameter was below the theorem's scope.
    #[error("frequency k={k} below minimum {min} for this construction")]
    FrequencyTooSmall { k: u32, min: u32 },

    /// An alphabet-size parameter was below the construction's scope.
    #[error("alphabet size n={n} below minimum {min} for this construction")]
    AlphabetTooSmall { n: u32, min: u32 },

    /// An enumeration would visit more symbols than the configured limit.
    #[error("enumeration over {symbols} symbols exceeds limit {limit}")]
    LimitExceeded { symbols: u64, limit: u64 },

    /// Text could not be parsed as a word or pattern.
    #[error("parse error: {0}")]
    Parse(String),

    /// A sum that must be integral was not; signals a convention bug.
    #[error("non-integral sum in closed formula at r={r}, n={n}")]
    NonIntegralSum { r: u32, n: u64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
