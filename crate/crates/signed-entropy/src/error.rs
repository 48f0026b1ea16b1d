use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The component sum is too close to zero; every entropy formula here
    /// divides by `|Σ p_i|`.
    #[error("measure weight {weight:e} is within {tol:e} of zero")]
    ZeroWeight { weight: f64, tol: f64 },

    /// A measure must contain at least one component.
    #[error("measure must contain at least one component")]
    EmptyMeasure,

    /// Components must be finite reals.
    #[error("component {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    /// The Rényi order is outside its valid domain.
    #[error("invalid order alpha = {alpha}: {reason}")]
    BadAlpha { alpha: f64, reason: &'static str },

    /// Classical entropies only accept non-negative components.
    #[error("component {index} is negative ({value}); classical entropies require p_i >= 0")]
    NegativeComponent { index: usize, value: f64 },

    /// Two measures that must have equal length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// Matrix and vector dimensions do not line up.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Phase-point operators are only built for odd prime dimensions.
    #[error("unsupported dimension {0}: phase-point operators require an odd prime")]
    UnsupportedDimension(usize),

    /// A matrix that must be Hermitian is not.
    #[error("matrix is not Hermitian (max residual {residual:e})")]
    NotHermitian { residual: f64 },

    /// The mean-value identity is only evaluated when both weights share a
    /// sign; mixed signs can push the kernel mean out of its domain.
    #[error("mean-value check refused: weights {left} and {right} have opposite signs")]
    MixedSignWeights { left: f64, right: f64 },

    /// Logarithm argument must be strictly positive.
    #[error("logarithm argument {0:e} is not positive")]
    NonpositiveLogArgument(f64),

    /// The witness search reached its resolution floor without certifying a
    /// negative entropy value. Indicates negativity below float resolution.
    #[error("witness search hit the epsilon floor {floor:e} (abs-sum/weight ratio {ratio})")]
    WitnessFloor { floor: f64, ratio: f64 },

    /// A property batch found a counterexample.
    #[error("check failed: {0}")]
    CheckFailed(String),

    /// Malformed input handed to the CLI or a file parser.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
