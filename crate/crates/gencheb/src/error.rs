use thiserror::Error;

use crate::poly::VarId;

/// Errors shared by the polynomial core and the higher-level modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder. On mesh shapes this signals a
    /// violated cluster-mesh relation.
    #[error("not divisible: exact division left a nonzero remainder")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// A variable with a negative exponent was mapped to a non-unit image.
    #[error("non-invertible substitution image for {0}")]
    NonInvertibleImage(VarId),
    #[error("evaluation point has no assignment for {0}")]
    MissingAssignment(VarId),
    /// Zero raised to a negative power during rational evaluation.
    #[error("zero denominator while evaluating {0}")]
    ZeroDenominator(VarId),
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("missing frieze seed for column {0}")]
    MissingSeed(i32),
    #[error("invalid module coordinates: {0}")]
    InvalidModule(String),
    #[error("inadmissible instance: {0}")]
    InadmissibleInstance(String),
    /// `summed_identity` was asked about a pair with no extensions.
    #[error("no extension: {0}")]
    NoExtension(String),
    /// A random rational sample hit a zero divisor during frieze propagation.
    #[error("degenerate sample: zero divisor during propagation")]
    DegenerateSample,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
