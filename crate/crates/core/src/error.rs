use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra type: {0}")]
    InvalidType(String),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("inconsistent grading: n_{weight} = {value} < 0")]
    InconsistentGrading { weight: i64, value: i64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid orbit: {0}")]
    InvalidOrbit(String),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("cap exceeded: size {size} > cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not magical: {0}")]
    NotMagical(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
