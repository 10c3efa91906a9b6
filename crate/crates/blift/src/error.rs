use thiserror::Error;

/// Errors shared across the whole engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an operation's arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A hard size cap (32 elements / 32 edges) was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A configurable search budget or cap was exhausted before the search
    /// could finish. Never stands in for a definite verdict.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// Circuit axioms failed while constructing a matroid.
    #[error("invalid circuit family: {0}")]
    Construction(String),

    /// A text-format record could not be parsed.
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },

    /// Unknown catalog or lemma name.
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(file: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            line,
            msg: msg.into(),
        }
    }
}
