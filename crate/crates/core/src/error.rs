//! Crate-wide error type.
//!
//! Domain violations (negative inputs, empty grids, malformed descriptors) are
//! reported eagerly; numeric outcomes that are legitimate values of the theory
//! (+∞ norms, divergent integrals) are *not* errors and travel as [`crate::ExtReal`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structured input failed validation.
    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },

    /// Text input could not be parsed; line/column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A verification suite id is not known to the harness.
    #[error("unknown suite id: {0:?}")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invalid(what: &'static str, why: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            why: why.into(),
        }
    }
}
