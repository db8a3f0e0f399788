use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A number, matrix, point, or angle literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A fraction with a zero denominator, or division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Operand dimensions do not fit the operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// The operation is not defined for these arguments (e.g. replacing a
    /// row with a multiple of itself).
    #[error("invalid operation: {0}")]
    InvalidOperation(String),

    /// A row or column index outside the matrix.
    #[error("index out of range: {index} (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// An argument outside the modelled domain (e.g. a negative growth factor).
    #[error("domain error: {0}")]
    Domain(String),

    /// The scalar passed to an eigenspace computation is not a root of the
    /// characteristic polynomial.
    #[error("{0} is not an eigenvalue of the matrix")]
    NotAnEigenvalue(String),

    /// No eigenvalue of the transition matrix admits a nonnegative eigenvector.
    #[error("no feasible allocation: every eigenspace has mixed-sign vectors only")]
    NoFeasibleAllocation,

    /// The requested result exists but is irrational, so the exact engine
    /// cannot produce it.
    #[error("exactness unavailable: {0}")]
    ExactnessUnavailable(String),

    /// A scene file failed to parse; `line` is 1-based.
    #[error("line {line}: {message}")]
    SceneParse { line: usize, message: String },
}

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for outcomes that describe an infeasible problem rather than
    /// malformed input. CLI callers map these to a distinct exit status.
    pub fn is_infeasibility(&self) -> bool {
        matches!(
            self,
            Error::NoFeasibleAllocation | Error::ExactnessUnavailable(_)
        )
    }
}
