use thiserror::Error;

/// Failure classes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact: {0}")]
    NotDivisible(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size guard exceeded: {0}")]
    Resource(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
