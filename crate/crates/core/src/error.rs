use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i128,
        reason: &'static str,
    },

    #[error("{op}: index {index} outside the domain ({reason})")]
    IndexOutOfDomain {
        op: &'static str,
        index: u64,
        reason: &'static str,
    },

    #[error("{op} is not defined for sequence kind {kind}")]
    UnsupportedKind { op: &'static str, kind: char },

    #[error("n = {n} exceeds the recurrence guard {guard}")]
    GuardExceeded { n: u64, guard: u64 },

    #[error("quadratic field mismatch: sqrt({left}) vs sqrt({right})")]
    DiscriminantMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An exact evaluation produced a value that must be an integer but is
    /// not. Signals an arithmetic bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
