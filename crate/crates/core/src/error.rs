use thiserror::Error;

use crate::invariants::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The caller asked for something outside an operation's domain.
    #[error("usage error: {0}")]
    Usage(String),

    /// A parameter constraint of a relation was violated.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// An invariant family was requested for a tuple outside its hypotheses.
    #[error("{family} does not apply: {hypothesis}")]
    NotApplicable { family: Family, hypothesis: String },

    /// A malformed input document.
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}
