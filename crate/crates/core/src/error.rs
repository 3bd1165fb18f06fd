use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid edge ({u}, {v}) for n = {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("edge id {id} out of range for n = {n}")]
    InvalidEdgeId { id: usize, n: usize },

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("vertex set is empty")]
    EmptySet,

    #[error("vertex set universe {found} does not match graph order {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },

    #[error("exact mode limited to size {limit}, got {size}")]
    ExactLimitExceeded { size: usize, limit: usize },

    #[error("sampled mode needs at least one trial")]
    NoTrials,

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("expected {expected} parts, got {found}")]
    PartCount { expected: usize, found: usize },

    #[error("slice of size {slice} larger than source of size {source_size}")]
    SliceTooLarge { slice: usize, source_size: usize },

    #[error("slice of size {slice} does not exceed alpha * {source_size}")]
    SliceTooSmall { slice: usize, source_size: usize },

    #[error("board needs n >= 2, got {0}")]
    BoardTooSmall(usize),

    #[error("edge {0} already claimed")]
    AlreadyClaimed(Edge),

    #[error("out-of-turn move: expected {expected}, got {found}")]
    OutOfTurn { expected: &'static str, found: &'static str },

    #[error("no unclaimed edges left")]
    BoardExhausted,

    #[error("strategy {strategy} returned an illegal move: {reason}")]
    IllegalStrategyMove { strategy: String, reason: String },

    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),

    #[error("exact solver supports n <= {limit}, got {n}")]
    SolverTooLarge { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
