use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller supplied arguments that violate an operation's contract.
    #[error("usage error: {0}")]
    Usage(String),

    /// A truncated series does not carry enough coefficients for the request.
    #[error("truncation exhausted: need order {needed}, have {available}")]
    TruncationExhausted { needed: usize, available: usize },

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed (for example an inexact division).
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
