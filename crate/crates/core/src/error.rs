use thiserror::Error;

use crate::tiler::Tiling;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration or search exceeded its configured guard.
    #[error("size limit exceeded: {what} (limit {limit})")]
    SizeLimit { what: String, limit: u128 },

    /// The exact solver ran out of budget; `best` is only a lower bound.
    #[error("search budget of {nodes} nodes exhausted; best tiling found has {} copies (lower bound only)", best.len())]
    SearchBudget { nodes: u64, best: Box<Tiling> },

    #[error("construction not applicable: {0}")]
    NotApplicable(String),

    #[error("infeasible size: {0}")]
    InfeasibleSize(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn size_limit(what: impl Into<String>, limit: u128) -> Self {
        Error::SizeLimit {
            what: what.into(),
            limit,
        }
    }

    /// True for the guard-style failures (`SizeLimit` and `SearchBudget`).
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::SizeLimit { .. } | Error::SearchBudget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
