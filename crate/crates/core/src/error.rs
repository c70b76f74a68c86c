//! Error type shared by all numerical routines.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument is outside the domain a routine is defined on.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A result cannot be represented faithfully in the requested
    /// truncated basis (leaked probability, missing levels, ...).
    #[error("truncation error in {op}: {msg}")]
    Truncation { op: &'static str, msg: String },

    /// An iterative routine failed to converge.
    #[error("convergence failure in {op}: {msg}")]
    Convergence { op: &'static str, msg: String },

    /// A summation window was too small for the requested accuracy.
    #[error("window error in {op}: {msg}")]
    Window { op: &'static str, msg: String },

    /// Invalid experiment configuration (bad field values, missing inputs).
    #[error("invalid input for {op}: {msg}")]
    Input { op: &'static str, msg: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub(crate) fn truncation(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Truncation { op, msg: msg.into() }
    }

    pub(crate) fn convergence(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Convergence { op, msg: msg.into() }
    }

    pub(crate) fn window(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Window { op, msg: msg.into() }
    }

    pub(crate) fn input(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Input { op, msg: msg.into() }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
