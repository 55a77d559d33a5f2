use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has non-unit edge weights")]
    NonUnitWeights,
    #[error("decomposition has a non-clique leaf; exact mode cannot proceed")]
    NotFullyDecomposable,
    #[error("polynomial is not in the span of the given basis")]
    NotInSpan,
    #[error("ambient qubit counts differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("SDP solver failed: {0}")]
    Solver(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
