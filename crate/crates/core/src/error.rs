use thiserror::Error;

/// Errors raised by graph construction, lookups, parsing and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid position id {0:?}")]
    InvalidPositionId(String),
    #[error("unknown position {0:?}")]
    UnknownPosition(String),
    #[error("unknown move {0} -> {1}")]
    UnknownMove(String, String),
    #[error("malformed expression at offset {offset}: {reason}")]
    MalformedExpression { offset: usize, reason: String },
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: attack references undeclared argument {name:?}")]
    UndeclaredArgument { line: usize, name: String },
    #[error("graph too large for the oracle: {0}")]
    GraphTooLarge(String),
    #[error("incomplete labeling: {0}")]
    IncompleteLabeling(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
