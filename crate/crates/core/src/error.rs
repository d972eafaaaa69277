use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree arity mismatch: expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unspecified product: {0}")]
    UnspecifiedProduct(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("degree range outside the stable band: {0}")]
    UnstableRange(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
