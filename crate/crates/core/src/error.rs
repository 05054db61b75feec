use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid counts: {0}")]
    InvalidCounts(String),

    #[error("invalid probabilities: {0}")]
    InvalidProbabilities(String),

    #[error("invalid parameter for family `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("fit failed: {0}")]
    FitFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown fixture id `{0}`")]
    UnknownFixture(String),

    #[error("unknown family id `{0}`")]
    UnknownFamily(String),

    #[error("unknown experiment id `{0}`")]
    UnknownExperiment(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
