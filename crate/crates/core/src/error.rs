use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: a chain entry below 2, a non-coprime pair, a length mismatch.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Well-formed input outside the range where a formula applies.
    #[error("outside domain: {0}")]
    Domain(String),
    /// Two computation paths disagreed, or an asserted identity failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
