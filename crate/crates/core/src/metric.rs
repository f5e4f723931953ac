//! The β-metric family on the set of full-rank `n×p` matrices.
//!
//! On the Stiefel manifold the family interpolates the two mainstream
//! choices: `β = 1` is the Euclidean (Frobenius) metric and `β = 1/2` the
//! canonical metric. It weights the rotational part of a tangent vector (the
//! part in `span(X)`) by `β` and leaves the complementary part untouched.
//!
//! Pulled back through the layer diffeomorphism `Y ↦ Y(XᵀX)^{1/2}`, the
//! family extends to every full-rank point:
//!
//! ```text
//! g_X(ξ, ζ) = ⟨ξ, (I_n − (1−β)X(XᵀX)⁻¹Xᵀ) ζ (XᵀX)⁻¹⟩.
//! ```
//!
//! [`eval`] computes this closed form with two `p×p` solves and no `n×n`
//! intermediates. [`eval_decomposed`] and [`gram_matrix`] are alternative
//! routes through the same value, kept for cross-validation.

use nalgebra::DMatrix;

use crate::constraint::{AmbientPoint, OrthoComplement};
use crate::error::{Error, Result};
use crate::linalg::{sym_part, vec_col};
use crate::scalar::{real, Scalar};

/// The metric parameter `β > 0` selecting a member of the family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Beta<T: Scalar>(T);

impl<T: Scalar> Beta<T> {
    /// Wraps a positive parameter value; rejects `β ≤ 0`.
    pub fn new(value: T) -> Result<Self> {
        if value > T::zero() {
            Ok(Self(value))
        } else {
            Err(Error::InvalidParameter(format!(
                "beta must be positive, got {}",
                value.as_f64()
            )))
        }
    }

    /// `β = 1`; on the Stiefel manifold this is the Frobenius metric.
    pub fn euclidean() -> Self {
        Self(T::one())
    }

    /// `β = 1/2`, the canonical metric.
    pub fn canonical() -> Self {
        Self(real::<T>(0.5))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Coordinates of an `n×p` matrix in the split `η = X·A + X_⊥·B`.
#[derive(Clone, Debug)]
pub struct TangentDecomposition<T: Scalar> {
    complement: OrthoComplement<T>,
    span_coeff: DMatrix<T>,
    complement_coeff: DMatrix<T>,
}

impl<T: Scalar> TangentDecomposition<T> {
    pub fn base(&self) -> &AmbientPoint<T> {
        self.complement.base()
    }

    pub fn complement(&self) -> &OrthoComplement<T> {
        &self.complement
    }

    /// The `p×p` coefficient `A` on the columns of `X`.
    pub fn span_coeff(&self) -> &DMatrix<T> {
        &self.span_coeff
    }

    /// The `(n−p)×p` coefficient `B` on the columns of `X_⊥`.
    pub fn complement_coeff(&self) -> &DMatrix<T> {
        &self.complement_coeff
    }

    /// Rebuilds the decomposed matrix `X·A + X_⊥·B`.
    pub fn reconstruct(&self) -> DMatrix<T> {
        self.base().matrix() * &self.span_coeff + self.complement.entries() * &self.complement_coeff
    }
}

fn check_direction_shape<T: Scalar>(x: &AmbientPoint<T>, m: &DMatrix<T>) -> Result<()> {
    if m.shape() != (x.n(), x.p()) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", x.n(), x.p()),
            actual: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    Ok(())
}

/// Evaluates the ambient metric `g_X(ξ, ζ)` at a full-rank point.
///
/// Uses `g = tr(ξᵀζ·C⁻¹) − (1−β)·tr((Xᵀξ)ᵀ·C⁻¹·(Xᵀζ)·C⁻¹)` with `C = XᵀX`,
/// so the cost is `O(np²)` plus two `p×p` solves.
pub fn eval<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    xi: &DMatrix<T>,
    zeta: &DMatrix<T>,
) -> Result<T> {
    check_direction_shape(x, xi)?;
    check_direction_shape(x, zeta)?;
    let cross = xi.tr_mul(zeta);
    let term_ambient = x.solve_gram(&cross).trace();
    let u = x.matrix().tr_mul(xi);
    let v = x.matrix().tr_mul(zeta);
    // tr(Uᵀ·C⁻¹·V·C⁻¹) = ⟨C⁻¹·U, V·C⁻¹⟩
    let term_span = x.solve_gram(&u).dot(&x.solve_gram_right(&v));
    Ok(term_ambient - (T::one() - beta.value()) * term_span)
}

/// Evaluates the Stiefel-manifold form `⟨ξ, (I_n − (1−β)XXᵀ)ζ⟩`, valid when
/// `X` is feasible. Agrees with [`eval`] there, since `XᵀX = I`.
pub fn eval_on_stiefel<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    xi: &DMatrix<T>,
    zeta: &DMatrix<T>,
) -> Result<T> {
    let res = x.feasibility_residual();
    if res > T::FEASIBILITY_TOL {
        return Err(Error::NotFeasible {
            residual: res.as_f64(),
        });
    }
    check_direction_shape(x, xi)?;
    check_direction_shape(x, zeta)?;
    let u = x.matrix().tr_mul(xi);
    let v = x.matrix().tr_mul(zeta);
    Ok(xi.dot(zeta) - (T::one() - beta.value()) * u.dot(&v))
}

/// Splits `η` as `X·A + X_⊥·B` with `A = (XᵀX)⁻¹Xᵀη` and `B = X_⊥ᵀη` (valid
/// because `X_⊥` is orthonormal and orthogonal to `span(X)`).
pub fn decompose<T: Scalar>(
    x: &AmbientPoint<T>,
    complement: &OrthoComplement<T>,
    eta: &DMatrix<T>,
) -> Result<TangentDecomposition<T>> {
    if complement.base() != x {
        return Err(Error::MismatchedBases);
    }
    check_direction_shape(x, eta)?;
    let span_coeff = x.solve_gram(&x.matrix().tr_mul(eta));
    let complement_coeff = complement.entries().tr_mul(eta);
    Ok(TangentDecomposition {
        complement: complement.clone(),
        span_coeff,
        complement_coeff,
    })
}

/// Evaluates the metric from two decompositions over the same base:
///
/// ```text
/// g(η, ξ) = β·tr(A_ηᵀ·XᵀX·A_ξ·(XᵀX)⁻¹) + tr(B_ηᵀ·X_⊥ᵀX_⊥·B_ξ·(XᵀX)⁻¹).
/// ```
pub fn eval_decomposed<T: Scalar>(
    d_eta: &TangentDecomposition<T>,
    d_xi: &TangentDecomposition<T>,
    beta: Beta<T>,
) -> Result<T> {
    if d_eta.base() != d_xi.base()
        || d_eta.complement().entries() != d_xi.complement().entries()
    {
        return Err(Error::MismatchedBases);
    }
    let x = d_eta.base();
    let span_inner = d_eta.span_coeff().tr_mul(&(x.gram() * d_xi.span_coeff()));
    let comp_gram = d_eta.complement().entries().tr_mul(d_eta.complement().entries());
    let comp_inner = d_eta
        .complement_coeff()
        .tr_mul(&(comp_gram * d_xi.complement_coeff()));
    let term_span = x.solve_gram(&span_inner).trace();
    let term_comp = x.solve_gram(&comp_inner).trace();
    Ok(beta.value() * term_span + term_comp)
}

/// The metric as an `np×np` symmetric positive-definite quadratic form over
/// column-major vectorized matrices: `vec(ξ)ᵀ·G·vec(ζ) = g_X(ξ, ζ)`.
///
/// `G = (XᵀX)⁻¹ ⊗ (I_n − (1−β)X(XᵀX)⁻¹Xᵀ)`. This forms `n×n` blocks and is
/// intended for oracle-scale problems, not the solver path.
pub fn gram_matrix<T: Scalar>(x: &AmbientPoint<T>, beta: Beta<T>) -> Result<DMatrix<T>> {
    let n = x.n();
    let p = x.p();
    let gram_inv = sym_part(&x.solve_gram(&DMatrix::identity(p, p)));
    let x_gram_inv = x.x_gram_inv();
    let span_proj = &x_gram_inv * x.matrix().transpose();
    let weight = sym_part(
        &(DMatrix::identity(n, n) - span_proj * (T::one() - beta.value())),
    );
    Ok(gram_inv.kronecker(&weight))
}

/// Convenience wrapper: evaluates the quadratic form of [`gram_matrix`]
/// against two directions.
pub fn eval_via_gram<T: Scalar>(
    gram: &DMatrix<T>,
    xi: &DMatrix<T>,
    zeta: &DMatrix<T>,
) -> T {
    let vx = vec_col(xi);
    let vz = vec_col(zeta);
    vx.dot(&(gram * vz))
}
