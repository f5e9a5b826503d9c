//! Crate-wide error type.

use thiserror::Error;

/// Errors fall in two classes: bad input (caller can fix) and internal
/// invariant violations (a bug in the arithmetic; the theory guarantees
/// they cannot happen on valid input).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code used by the CLI: 1 for input errors, 2 for
    /// internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Io(_) => 1,
            Error::Internal(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
