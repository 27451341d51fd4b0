use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid Pauli text; `position` is 1-based.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: expected {expected} factors, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An enumeration would exceed its configured budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A structural identity that must hold did not; indicates a bug.
    #[error("structure violation: {0}")]
    Violation(String),

    /// A count does not fit the requested integer type.
    #[error("count overflows the target integer type")]
    Overflow,
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Error {
        Error::Argument(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Error {
        Error::Capacity(msg.into())
    }

    pub fn violation(msg: impl Into<String>) -> Error {
        Error::Violation(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns a [`Error::Violation`] built from the format arguments unless the
/// condition holds.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Violation(format!($($arg)+)));
        }
    };
}

pub(crate) use ensure;
