use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed interchange input. `location` names the line, field or edge.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A node or time budget ran out before the search finished.
    #[error("search budget exhausted after {nodes} nodes")]
    Timeout { nodes: u64 },

    /// A certificate or witness failed re-verification.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
