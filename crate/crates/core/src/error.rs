use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input or intermediate value does not fit the supported integer width.
    #[error("value out of range: {0}")]
    Range(String),
    /// An input violates the mathematical precondition of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A bounded search hit its configured cap.
    #[error("resource limit reached: {0}")]
    Resource(String),
    /// Malformed text input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
