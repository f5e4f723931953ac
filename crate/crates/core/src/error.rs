//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the geometry, metric and solver routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix does not satisfy `p ≤ n`.
    #[error("matrix must be tall: p <= n, got n={n}, p={p}")]
    InvalidShape { n: usize, p: usize },

    /// Two operands have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    /// The point is numerically rank-deficient, so the layer through it is
    /// not a manifold and `(XᵀX)⁻¹` is meaningless.
    #[error("singular layer: sigma_min/sigma_max = {ratio:.3e} below floor {floor:.3e}")]
    SingularLayer { ratio: f64, floor: f64 },

    /// A point expected on the Stiefel manifold is too far from it.
    #[error("point is not on the Stiefel manifold: ||X^T X - I|| = {residual:.3e}")]
    NotFeasible { residual: f64 },

    /// Operands were built over different base points.
    #[error("operands are attached to different base points")]
    MismatchedBases,

    /// A configuration or argument value is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A matrix expected symmetric is not.
    #[error("matrix is not symmetric: ||A - A^T|| = {residual:.3e}")]
    NotSymmetric { residual: f64 },

    /// A linear system used by an oracle is too ill-conditioned to trust.
    #[error("ill-conditioned system: condition {cond:.3e} exceeds limit {limit:.3e}")]
    IllConditioned { cond: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
