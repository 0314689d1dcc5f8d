use thiserror::Error;

/// Errors raised by tableau, permutation and scheduling operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input is not well-formed (bad partition, entry outside its shape, duplicate entries).
    #[error("structural error: {0}")]
    Structural(String),
    /// Input is well-formed but violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A brute-force routine was asked to exceed its size bound.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An HMT state whose occupied cells do not form a skew shape.
    #[error("invalid state: {0}")]
    InvalidState(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! structural {
    ($($arg:tt)*) => { $crate::error::Error::Structural(format!($($arg)*)) };
}
pub(crate) use domain;
pub(crate) use structural;
