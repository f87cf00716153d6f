use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("invalid root ideal: {0}")]
    InvalidRootIdeal(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{shape:?} is not a {n}-core")]
    NotACore { shape: Vec<usize>, n: usize },
    #[error("{0:?} is not {1}-bounded")]
    NotBounded(Vec<usize>, usize),
    #[error("{0:?} is not a valid {1}-bounded weight")]
    InvalidKWeight(Vec<i64>, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a skew diagram: {0}")]
    InvalidSkew(String),
    #[error("symmetric function is not in the span: {0}")]
    NotInSpan(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
