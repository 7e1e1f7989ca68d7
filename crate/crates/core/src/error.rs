use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient at exponent {exponent:?} lies below the truncation floor {floor:?}")]
    BelowTruncation { exponent: Vec<i64>, floor: Vec<i64> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("oracle refused: degree {degree} exceeds the cap {cap}")]
    OracleCap { degree: usize, cap: usize },

    #[error("malformed rational {0:?}")]
    Parse(String),

    /// A consistency check inside an engine failed. This always signals a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
