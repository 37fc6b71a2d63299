use thiserror::Error;

/// Input and generation errors. These are user-facing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RleError {
    #[error("line {line}: malformed: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: exponent must be positive")]
    NonPositiveExponent { line: usize },
    #[error("line {line}: run repeats the symbol of the previous run (use normalize to merge)")]
    AdjacentEqualRuns { line: usize },
    #[error("line {line}: exponent or total length exceeds 2^62")]
    ExponentOverflow { line: usize },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("input of length {n} exceeds the limit of {limit}")]
    InputTooLarge { n: u64, limit: u64 },
}

impl RleError {
    pub(crate) fn with_line(self, map: impl Fn(usize) -> usize) -> Self {
        match self {
            RleError::MalformedLine { line, reason } => RleError::MalformedLine { line: map(line), reason },
            RleError::NonPositiveExponent { line } => RleError::NonPositiveExponent { line: map(line) },
            RleError::AdjacentEqualRuns { line } => RleError::AdjacentEqualRuns { line: map(line) },
            RleError::ExponentOverflow { line } => RleError::ExponentOverflow { line: map(line) },
            other => other,
        }
    }
}

/// A broken internal invariant. Never expected on valid input; seeing one
/// means a bug in an upstream stage.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("internal invariant violated: {0}")]
pub struct InvariantViolation(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Input(#[from] RleError),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
