use thiserror::Error;

/// Errors raised by the enumeration engines and their arithmetic substrate.
///
/// A splitting that fails verification is not an error; see
/// [`crate::oracle::Verdict`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow at exponent {exponent}")]
    Overflow { exponent: usize },

    #[error("overflow evaluating polynomial at x = {point}")]
    EvalOverflow { point: i64 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not divisible: nonzero remainder at exponent {exponent}")]
    NotDivisible { exponent: usize },

    #[error("{cells} cells exceeds the configured cap of {cap}")]
    CellCapExceeded { cells: usize, cap: usize },

    #[error("{candidates} factor bipartitions exceed the limit of {limit}")]
    BipartitionLimitExceeded { candidates: u128, limit: u128 },

    #[error("search exceeded its time budget of {millis} ms")]
    TimeBudgetExceeded { millis: u128 },

    #[error("invalid radix scheme: {0}")]
    InvalidScheme(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("engines disagree for {rows}x{cols}: {detail}")]
    EngineDisagreement {
        rows: usize,
        cols: usize,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
