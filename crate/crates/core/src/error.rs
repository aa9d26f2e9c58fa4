use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Literal parse failure; `position` is a 0-based character offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("word is not omega-Lyndon: {0}")]
    NotLyndon(String),

    #[error("extension could not be verified: {0}")]
    ConstructionFailed(String),

    #[error("cap {cap} is smaller than the witness bound {bound}")]
    CapTooSmall { cap: usize, bound: usize },

    #[error("no factorization candidate found within cap {cap} ({searched})")]
    CapExceeded { cap: usize, searched: String },

    #[error("input length {len} exceeds the enumeration limit {limit}")]
    TooLarge { len: usize, limit: usize },

    /// An internal consistency check failed. Seeing this means a bug or a
    /// comparator that does not satisfy the required order contract.
    #[error("inconsistent state: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
