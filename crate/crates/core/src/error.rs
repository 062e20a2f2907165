use thiserror::Error;

/// Errors raised across the crate.
///
/// `Internal` marks a broken mathematical invariant (a bug, not bad input);
/// the CLI maps it to a distinct exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("not a perfect square")]
    NotASquare,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("invalid quiver: {0}")]
    Quiver(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(i64),

    #[error("invalid walk: {0}")]
    Walk(String),

    #[error("invalid boundary: {0}")]
    Boundary(String),

    #[error("point ({0}, {1}) is not on or below the boundary")]
    AboveBoundary(i64, i64),

    #[error("invalid range: {0}")]
    Range(String),

    #[error("extreme ray value is not a fork product")]
    NotForkProduct,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
