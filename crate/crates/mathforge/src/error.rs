use thiserror::Error;

/// Crate-wide error type. Generators reject and resample on most of these;
/// they surface to callers only when an operation is fed a foreign input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("singular matrix")]
    Singular,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("unsupported expression: {0}")]
    UnsupportedExpression(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("unreachable goal")]
    Unreachable,
    #[error("ambiguous instance: {0}")]
    Ambiguous(String),
    #[error("inconsistent constraints: {0}")]
    Inconsistent(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("robustness error: {0}")]
    Robustness(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
