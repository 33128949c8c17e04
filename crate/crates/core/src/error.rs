use thiserror::Error;

use crate::matrix::Position;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MongeError {
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("invalid interval: lower bound {lo} exceeds upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("lower bound exceeds upper bound at {0}")]
    InvertedBounds(Position),
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,
    #[error("matrix must have at least one row and one column, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {actual}")]
    EntryCount { expected: usize, actual: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
    #[error("operation needs at least 2 rows and 2 columns, got {rows}x{cols}")]
    TooSmall { rows: usize, cols: usize },
    #[error("brute force is limited to 6x6 matrices, got {rows}x{cols}")]
    TooLarge { rows: usize, cols: usize },
    #[error("matrix is not Monge")]
    NotMonge,
    #[error("negative entry at {0}")]
    NegativeEntry(Position),
    #[error("coefficient vector {name} has length {actual}, expected {expected}")]
    IndexRangeViolation {
        name: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("coefficient {name} is negative")]
    NegativeCoefficient { name: String },
    #[error("scalar must be nonnegative")]
    NegativeScalar,
    #[error("interval matrix does not have the strong Monge property")]
    NotStrongMonge,
    #[error("interval matrix does not have the weak Monge property")]
    NotWeakMonge,
    #[error("interval matrix has negative entries")]
    NegativeEntries,
    #[error("degenerate interval at {0}; use the general permutation algorithm")]
    TrivialIntervalPresent(Position),
    #[error("intersection is empty at {}", format_positions(.0))]
    EmptyIntersection(Vec<Position>),
    #[error("malformed matrix document: {0}")]
    Format(String),
    #[error("linear solver failure: {0}")]
    Solver(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl MongeError {
    /// Failures of the library itself rather than of its input.
    pub fn is_internal(&self) -> bool {
        matches!(self, MongeError::Solver(_) | MongeError::Internal(_))
    }
}

fn format_positions(positions: &[Position]) -> String {
    positions
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = MongeError> = std::result::Result<T, E>;
