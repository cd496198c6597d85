use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input (bad endpoints, self-loops, parameter domains).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation was asked to run beyond its exhaustive-mode size limit.
    #[error("guard exceeded: {what} is {actual}, limit is {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text could not be parsed as a graph.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A step that the underlying theory guarantees to succeed failed.
    #[error("internal failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::Guard {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
