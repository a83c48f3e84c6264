use thiserror::Error;

/// Errors raised by the library. Non-integral parameters and failed design
/// tests are values, not errors; these variants cover misuse, resource
/// limits and internal-consistency failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: u32, actual: u32 },

    #[error("{what} = {value} is outside the allowed range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("dense operation on n = {n} exceeds the cap of {cap} variables")]
    DenseCapExceeded { n: u32, cap: u32 },

    #[error("enumeration budget exceeded: {required} steps needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),

    #[error("spectrum does not come from a {{0,1}}-valued function: first offending x = {x:#x} ({reason})")]
    NotBoolean { x: u64, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
