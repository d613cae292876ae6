use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants fall into three families which the command-line frontend maps to
/// distinct exit codes: invalid input, exceeded enumeration budgets, and
/// internal invariant violations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {q}: {reason}")]
    UnsupportedField { q: u64, reason: String },
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("element index {repr} out of range for GF({q})")]
    ElementOutOfRange { repr: u64, q: u64 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        got: usize,
    },
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rows: usize, rank: usize },
    #[error("the zero code is not a valid input here")]
    ZeroCode,
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate code (dual distance 1): puncture it first")]
    Degenerate,
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn budget(needed: impl ToString, budget: u64) -> Self {
        Error::BudgetExceeded {
            needed: needed.to_string(),
            budget,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
