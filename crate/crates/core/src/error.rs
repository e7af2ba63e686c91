use thiserror::Error;

/// Errors raised by kernel operations.
///
/// Property failures (an axiom that does not hold, an operator that is not an
/// O-operator) are reported through the various `*Report` types instead; an
/// `Error` always means the request itself could not be carried out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("malformed rational literal {0:?}")]
    ParseScalar(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-regular input: {0}")]
    NonRegular(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}
