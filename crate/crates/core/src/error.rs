use thiserror::Error;

/// Errors raised by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index {index} is not a fixed point")]
    NotAFixedPoint { index: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid block spec: {0}")]
    InvalidSpec(String),

    #[error("permutation has length {found}, spec expects {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{what} needs n = {n}, above the limit {limit}")]
    LimitExceeded { what: &'static str, n: usize, limit: usize },

    /// A checked identity did not hold.
    #[error("identity failed: {0}")]
    IdentityFailed(String),

    /// A division the theory guarantees to be exact left a remainder.
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
