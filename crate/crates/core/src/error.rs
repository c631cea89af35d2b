//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by tensor math, graph construction, sampling, data
/// ingestion, and training.
#[derive(Debug, Error)]
pub enum Error {
    /// Shape disagreement, non-square input, or asymmetry where symmetry is required.
    #[error("shape error: {0}")]
    Shape(String),

    /// Invalid configuration or argument value.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A non-finite value appeared in a numeric computation.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A parameter was requested that is not registered on the tape.
    #[error("lookup error: {0}")]
    Lookup(String),

    /// Malformed input file.
    #[error("format error: {0}")]
    Format(String),

    /// Training aborted on a non-finite loss; carries a diagnostic snapshot.
    #[error("training diverged: {0}")]
    Diverged(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
