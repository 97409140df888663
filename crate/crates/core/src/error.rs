use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input is not a permutation of `{1, ..., n}`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// An operation defined only on full cycles was given something else.
    #[error("expected a single cycle on all {n} elements")]
    NotFullCycle { n: usize },

    /// The cycle is outside the domain of the stretching-pair resolution map:
    /// it must have at least one stretching pair, all of them exceptional.
    #[error("cycle has a non-exceptional stretching pair or none at all")]
    NotResolvable,

    /// A brute-force enumeration was asked to exceed its configured limit.
    #[error("n = {n} exceeds the brute-force limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    /// A numeric routine was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A generating-function coefficient that should be a count is not a
    /// non-negative integer after clearing factorials.
    #[error("coefficient at ({r}, {s}) does not clear to a non-negative integer")]
    NonIntegralCoefficient { r: usize, s: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
