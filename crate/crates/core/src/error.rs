use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} too large for exhaustive enumeration: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("exponent overflow")]
    Overflow,
    #[error("colon ideal is the unit ideal")]
    UnitIdeal,
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),
}

impl Error {
    /// True for errors caused by a configurable resource cap.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
