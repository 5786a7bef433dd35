use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("operation requires all variables of degree 1")]
    NonUnitDegree,

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("verification failed at degree {degree}: {msg}")]
    Verification { degree: u32, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
