use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix {0} is not skew-symmetric")]
    NotSkew(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("{0} is not a pure octonion")]
    NotPure(String),
    #[error("invalid structure table: {0}")]
    Table(String),
    #[error("root extraction failed: {0}")]
    Roots(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
