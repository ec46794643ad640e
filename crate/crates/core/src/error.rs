use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rule parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("illegal position: {0}")]
    IllegalPosition(String),

    /// An operation was asked for something outside its combinatorial guard.
    #[error("guard violated: {0}")]
    Guard(String),

    /// A query reached past the rows that were evolved.
    #[error("outside computed diagram: {0}")]
    OutsideDiagram(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
