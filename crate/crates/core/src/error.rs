//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by model construction, data handling, and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible tensor or parameter shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Invalid argument or precondition violation.
    #[error("validation: {0}")]
    Validation(String),

    /// Malformed input file or checkpoint.
    #[error("format: {0}")]
    Format(String),

    /// Incomplete or inconsistent run configuration.
    #[error("configuration: {0}")]
    Config(String),

    /// Loss or parameters became non-finite during adaptation.
    #[error("numerical divergence at segment {segment}: {message}")]
    Divergence { segment: usize, message: String },

    /// Every candidate configuration diverged during tuning.
    #[error("no viable configuration: {0}")]
    NoViableConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn divergence(segment: usize, message: impl Into<String>) -> Self {
        Error::Divergence {
            segment,
            message: message.into(),
        }
    }
}
