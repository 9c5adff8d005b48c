use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("quantum integer [{0}] vanishes; q must not be a root of unity")]
    RootOfUnity(i64),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("mixed parity: {0}")]
    MixedParity(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
