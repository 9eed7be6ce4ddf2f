use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("insufficiently stretched: {0}")]
    InsufficientlyStretched(String),

    #[error("marking incompatible: {0}")]
    MarkingIncompatible(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
