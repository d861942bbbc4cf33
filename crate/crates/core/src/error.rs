use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at {0} = 0")]
    PoleAtOrigin(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("partition weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("unsupported generator kind: {0}")]
    UnsupportedKind(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("arithmetic error: {0}")]
    Arith(String),
}
