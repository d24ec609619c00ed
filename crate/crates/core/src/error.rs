//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not symmetric positive definite: {0}")]
    NotSpd(String),

    #[error("singular pivot in LDL^T factorization at index {index} (|d| = {modulus:.3e}); the shift is too close to the spectrum")]
    SingularPivot { index: usize, modulus: f64 },

    #[error("numerically singular matrix: {0}")]
    Singular(String),

    #[error("degenerate spectral interval (lambda_max == lambda_min)")]
    DegenerateInterval,

    #[error("point is off the Bernstein ellipse beyond roundoff (|cos^2 + sin^2 - 1| = {0:.3e})")]
    EllipseInconsistency(f64),

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("no admissible tau at beta_max = {beta_max}: discriminant {discriminant:.3e} < 0; reduce beta_max or eps_tau")]
    NoAdmissibleTau { beta_max: usize, discriminant: f64 },

    #[error("iteration limit reached without convergence: {0}")]
    NoConvergence(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("breakdown: {0}")]
    Breakdown(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
