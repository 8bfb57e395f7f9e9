//! Error type shared across the crate.

use std::fmt;

/// Errors reported by constructors, evaluators, and the shooting solver.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input violated a documented precondition or type invariant.
    /// The message names the violated condition.
    Domain(String),
    /// Numerical integration left the finite floating-point range.
    /// `r_last` is the last radius at which the state was still finite.
    Integration { r_last: f64, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Integration { r_last, message } => {
                write!(f, "integration failure at r = {r_last}: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
