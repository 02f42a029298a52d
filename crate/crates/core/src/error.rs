use thiserror::Error;

/// Everything that can go wrong while building, loading or checking a design.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("missing ingredient: {0}")]
    MissingIngredient(String),

    #[error("invalid ingredient: {0}")]
    InvalidIngredient(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::UnsupportedParameters(msg.into()))
}
