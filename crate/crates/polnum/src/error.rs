use thiserror::Error;

/// Errors produced by the library.
///
/// `Internal` signals a violated invariant of the library itself and is
/// always a bug; everything else is a rejection of the caller's input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("slope not reduced: gcd({a}, {b}) != 1")]
    SlopeNotReduced { a: String, b: String },

    #[error("divisibility chain violated at index {index}: {prev} does not divide {next}")]
    ChainViolation { index: usize, prev: u64, next: u64 },

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
