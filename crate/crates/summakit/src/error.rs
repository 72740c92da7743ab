//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by series construction, summation and quadrature.
#[derive(Debug, Error)]
pub enum Error {
    /// A series ran out of terms before the requested range was covered.
    #[error("horizon exhausted: {0}")]
    Horizon(String),

    /// A quadrature could not meet its accuracy target.
    #[error("quadrature accuracy unreachable: {0}")]
    Quadrature(String),

    /// The summation method does not apply to the given series.
    #[error("method inapplicable: {0}")]
    MethodInapplicable(String),

    /// An argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A domain type invariant failed at construction time.
    #[error("construction failed: {0}")]
    Construction(String),

    /// Lookup of a builtin series by name failed.
    #[error("unknown series: {0:?}")]
    UnknownSeries(String),
}

impl Error {
    pub(crate) fn horizon(msg: impl Into<String>) -> Self {
        Error::Horizon(msg.into())
    }

    pub(crate) fn quadrature(msg: impl Into<String>) -> Self {
        Error::Quadrature(msg.into())
    }

    pub(crate) fn inapplicable(msg: impl Into<String>) -> Self {
        Error::MethodInapplicable(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
