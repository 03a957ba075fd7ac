//! Error type shared across the crate.

use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EisenError {
    /// Shuffle enumeration would exceed the configured cap on m+n.
    #[error("enumeration too large: binomial({rank}, {m}) = {count} shuffles exceeds the cap m+n <= {cap}")]
    EnumerationTooLarge {
        m: usize,
        rank: usize,
        count: BigInt,
        cap: usize,
    },

    /// A permutation and a character tuple have different lengths.
    #[error("length mismatch: permutation acts on {perm_len} letters but the tuple has {tuple_len} entries")]
    LengthMismatch { perm_len: usize, tuple_len: usize },

    /// A value vector is not a valid shuffle.
    #[error("invalid shuffle: {0}")]
    InvalidShuffle(String),

    /// An argument was expected to be rational-with-substituted-s or integer.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Laurent expansion only exists for the trivial character.
    #[error("expansion unsupported for nontrivial character")]
    NontrivialExpansion,

    /// Inversion of the exact zero series.
    #[error("division by zero series")]
    DivisionByZeroSeries,

    /// The working truncation is too small to certify a series valuation.
    #[error("increase truncation: {0}")]
    IncreaseTruncation(String),

    /// A structural invariant failed; the message names it.
    #[error("invariant violated: {0}")]
    Invariant(String),
}
