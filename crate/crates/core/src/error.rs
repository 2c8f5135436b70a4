use thiserror::Error;

/// Errors raised by the algebra engine and the script front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Objects of incompatible shape (variable counts, matrix sizes, ...).
    #[error("structural mismatch: {0}")]
    Structural(String),

    #[error("objects live over different rings")]
    RingMismatch,

    /// Input rejected by policy, e.g. an inhomogeneous generator.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition failed in {op}: {reason}")]
    Precondition { op: &'static str, reason: String },

    /// An internal identity that must always hold was violated.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn precondition(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
