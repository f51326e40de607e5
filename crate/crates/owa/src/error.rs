use thiserror::Error;

/// Errors from weight construction, quantifier evaluation and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OwaError {
    /// A value failed a construction invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// Two vectors that must share a length do not.
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    /// An argument fell outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Adaptive quadrature ran out of subdivision depth.
    #[error(
        "quadrature did not converge: best estimate {estimate:e}, error bound {error_bound:e}"
    )]
    Convergence { estimate: f64, error_bound: f64 },
}

pub type Result<T> = std::result::Result<T, OwaError>;
