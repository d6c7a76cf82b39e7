use thiserror::Error;

/// Errors raised by the computation modules.
///
/// Every variant is loud on purpose: an inexact polynomial division or a
/// malformed symbol indicates a bug in a caller's combinatorics, not a
/// recoverable condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A polynomial quotient left a remainder where exactness was guaranteed.
    #[error("non-exact polynomial division: {0}")]
    NonExactDivision(String),

    /// Rows not strictly increasing, or the defect is not a positive odd integer.
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    /// A (delta, bipartition) label inconsistent with the requested rank.
    #[error("invalid label: {0}")]
    InvalidLabel(String),

    /// Restriction by more than the rank of the symbol.
    #[error("rank underflow: cannot restrict by {amount} from rank {rank}")]
    RankUnderflow { amount: u32, rank: u32 },

    /// An enumeration whose estimated work exceeds the configured bound.
    #[error("scale guard: {0}")]
    ScaleGuard(String),

    /// A finite field outside the embedded modulus table.
    #[error("unsupported field F_{{{p}^{e}}}: supported are p in {{2,3,5,7}} with p^e <= 81")]
    UnsupportedField { p: u64, e: u32 },

    /// Malformed textual input (symbol grammar, CLI values).
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency assertion failed while counting points.
    #[error("oracle invariant violated: {0}")]
    OracleInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
