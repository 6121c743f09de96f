//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input")]
    Degenerate,
    #[error("too few points: need at least {need}, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("duplicate lines at indices {0} and {1}")]
    DuplicateLines(usize, usize),
    #[error("point set spans no triangle of nonzero area")]
    NoNonzeroTriangle,
    #[error("n must be even, got {0}")]
    OddN(usize),
    #[error("invalid n = {n}: {reason}")]
    BadN { n: usize, reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("construction failed after retries (seed {seed}): {reason}")]
    ConstructionFailed { seed: u64, reason: String },
    #[error("charging invariant violated: {0}")]
    ChargingInvariantViolated(String),
    #[error("audit failed: {0}")]
    AuditFailed(String),
    #[error("lines are parallel")]
    ParallelLines,
    #[error("cylinder axes are parallel")]
    ParallelAxes,
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
