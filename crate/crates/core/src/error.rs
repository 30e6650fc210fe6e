use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The operation is undefined for this graph (e.g. a disconnected host).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exact value was required but the search budget ran out.
    #[error("search budget exhausted: {0}")]
    Indeterminate(String),

    /// A construction failed its own verification.
    #[error("internal error: {0}")]
    Internal(String),
}
