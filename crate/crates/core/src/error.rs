use thiserror::Error;

use crate::rootsys::{CartanType, SystemId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {kind}{rank}: {reason}")]
    InvalidSystem {
        kind: CartanType,
        rank: usize,
        reason: String,
    },

    #[error("unknown root system type `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownType(String),

    #[error("unknown labeling `{0}` (expected `vo` or `bourbaki`)")]
    UnknownLabeling(String),

    #[error("objects belong to different root systems ({0} vs {1})")]
    SystemMismatch(SystemId, SystemId),

    #[error("coefficient vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a positive root")]
    NotARoot(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    BadSimpleIndex { index: usize, rank: usize },

    #[error("{above} does not dominate {below}")]
    NotComparable { above: String, below: String },

    #[error("{0} and {1} have different lengths and are not W-conjugate")]
    LengthMismatch(String, String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("family is not inversion complete: {0} is not covered")]
    Incomplete(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors that signal a valid request the engine declines to
    /// handle (as opposed to malformed input).
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Unsupported(_))
    }
}
