//! Metric-dependent geometry of a layer: normal space membership, the
//! orthogonal projection onto the layer tangent space, and the unconstrained
//! and constrained Riemannian gradients in the β-metric.
//!
//! The normal space turns out not to depend on β: it is
//! `{X(XᵀX)⁻¹S : S symmetric}`. Consequently the orthogonal projection has a
//! β-free closed form,
//!
//! ```text
//! Proj_X(Z) = X(XᵀX)⁻¹·skew(XᵀZ) + (I_n − X(XᵀX)⁻¹Xᵀ)·Z,
//! ```
//!
//! while the gradients do depend on β:
//!
//! ```text
//! ∇f(X)    = (I_n + ((1−β)/β)·X(XᵀX)⁻¹Xᵀ)·∇_E f(X)·XᵀX
//! grad f(X) = ∇_E f·XᵀX − (1/2β)·X·∇_E fᵀ·X + (1/2β − 1)·X(XᵀX)⁻¹Xᵀ·∇_E f·XᵀX
//! ```
//!
//! with `grad f = Proj(∇f)`, and for `β = 1/2` the constrained gradient
//! collapses to `2·skew(∇_E f·Xᵀ)·X`.

use nalgebra::{DMatrix, DVector};

use crate::constraint::{is_tangent, AmbientPoint, SymMatrix};
use crate::error::{Error, Result};
use crate::linalg::{skew_part, sym_part};
use crate::metric::Beta;
use crate::scalar::{real, Scalar};

fn check_direction_shape<T: Scalar>(x: &AmbientPoint<T>, m: &DMatrix<T>) -> Result<()> {
    if m.shape() != (x.n(), x.p()) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", x.n(), x.p()),
            actual: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    Ok(())
}

/// Whether `η` lies in the normal space `{X(XᵀX)⁻¹S : S symmetric}` at `x`,
/// up to a least-squares residual of `tol·‖η‖`.
///
/// Membership is tested by fitting `η` onto the explicit basis
/// `{X(XᵀX)⁻¹(e_ie_jᵀ + e_je_iᵀ)}` so a quantitative residual is available;
/// the space is the same for every `β > 0`.
pub fn is_normal<T: Scalar>(x: &AmbientPoint<T>, eta: &DMatrix<T>, tol: T) -> Result<bool> {
    check_direction_shape(x, eta)?;
    let (n, p) = (x.n(), x.p());
    let x_gram_inv = x.x_gram_inv();
    let count = p * (p + 1) / 2;
    let mut stack = DMatrix::zeros(n * p, count);
    let mut col = 0;
    for i in 0..p {
        for j in i..p {
            let s = SymMatrix::<T>::pair_basis(p, i, j);
            let v = &x_gram_inv * s.entries();
            stack.set_column(col, &DVector::from_column_slice(v.as_slice()));
            col += 1;
        }
    }
    let rhs = DVector::from_column_slice(eta.as_slice());
    let svd = stack.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(T::zero(), T::max);
    let coeffs = svd
        .solve(&rhs, sigma_max * real::<T>(1e-13))
        .map_err(|m| Error::InvalidParameter(m.to_string()))?;
    let residual = (&stack * coeffs - &rhs).norm();
    Ok(residual <= tol * eta.norm())
}

/// Orthogonal projection of `Z` onto the layer tangent space at `x`.
///
/// Evaluates the closed form as `Z − X(XᵀX)⁻¹·sym(XᵀZ)`, which is the same
/// matrix but needs a single `p×p` solve. The result is independent of `β`.
pub fn project_tangent<T: Scalar>(x: &AmbientPoint<T>, z: &DMatrix<T>) -> Result<DMatrix<T>> {
    check_direction_shape(x, z)?;
    let cross_sym = sym_part(&x.matrix().tr_mul(z));
    Ok(z - x.matrix() * x.solve_gram(&cross_sym))
}

/// The unconstrained Riemannian gradient `∇f(X)` in the β-metric: the vector
/// pairing to the differential of `f` over the whole ambient tangent space,
/// computed from the Euclidean gradient `∇_E f(X)`.
pub fn unconstrained_gradient<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    eucl_grad: &DMatrix<T>,
) -> Result<DMatrix<T>> {
    check_direction_shape(x, eucl_grad)?;
    let scaled = eucl_grad * x.gram();
    let correction = (T::one() - beta.value()) / beta.value();
    let span = x.matrix() * x.solve_gram(&x.matrix().tr_mul(&scaled));
    Ok(&scaled + span * correction)
}

/// The constrained Riemannian gradient `grad f(X)` in the β-metric: the
/// tangent vector pairing to the differential of `f` restricted to the layer
/// tangent space. Equals `Proj_X(∇f(X))`.
pub fn constrained_gradient<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    eucl_grad: &DMatrix<T>,
) -> Result<DMatrix<T>> {
    check_direction_shape(x, eucl_grad)?;
    let half_inv_beta = real::<T>(0.5) / beta.value();
    let scaled = eucl_grad * x.gram();
    let reflected = x.matrix() * (eucl_grad.tr_mul(x.matrix()) * half_inv_beta);
    let span = x.matrix() * x.solve_gram(&x.matrix().tr_mul(&scaled));
    Ok(&scaled - reflected + span * (half_inv_beta - T::one()))
}

/// The constrained gradient in the canonical metric (`β = 1/2`), via the
/// simplified expression `2·skew(∇_E f·Xᵀ)·X`.
pub fn canonical_gradient<T: Scalar>(
    x: &AmbientPoint<T>,
    eucl_grad: &DMatrix<T>,
) -> Result<DMatrix<T>> {
    check_direction_shape(x, eucl_grad)?;
    let outer = eucl_grad * x.matrix().transpose();
    Ok(skew_part(&outer) * x.matrix() * real::<T>(2.0))
}

/// First-order drift of the constraint along `ξ`: `Dh(X)[ξ] = Xᵀξ + ξᵀX`.
///
/// Vanishes exactly when `ξ` is tangent to the layer; in particular the
/// constrained gradient produces no first-order feasibility drift.
pub fn feasibility_drift<T: Scalar>(x: &AmbientPoint<T>, xi: &DMatrix<T>) -> Result<SymMatrix<T>> {
    check_direction_shape(x, xi)?;
    let cross = x.matrix().tr_mul(xi);
    Ok(SymMatrix::symmetrized(&(cross * real::<T>(2.0))))
}

/// The Euclidean gradient of an objective together with both β-metric
/// gradients at a point.
#[derive(Clone, Debug)]
pub struct GradientPair<T: Scalar> {
    base: AmbientPoint<T>,
    beta: Beta<T>,
    euclidean: DMatrix<T>,
    beta_unconstrained: DMatrix<T>,
    beta_constrained: DMatrix<T>,
}

impl<T: Scalar> GradientPair<T> {
    /// Computes both metric gradients from the Euclidean gradient.
    pub fn compute(x: &AmbientPoint<T>, beta: Beta<T>, eucl_grad: DMatrix<T>) -> Result<Self> {
        let beta_unconstrained = unconstrained_gradient(x, beta, &eucl_grad)?;
        let beta_constrained = constrained_gradient(x, beta, &eucl_grad)?;
        Ok(Self {
            base: x.clone(),
            beta,
            euclidean: eucl_grad,
            beta_unconstrained,
            beta_constrained,
        })
    }

    pub fn base(&self) -> &AmbientPoint<T> {
        &self.base
    }

    pub fn beta(&self) -> Beta<T> {
        self.beta
    }

    pub fn euclidean(&self) -> &DMatrix<T> {
        &self.euclidean
    }

    pub fn unconstrained(&self) -> &DMatrix<T> {
        &self.beta_unconstrained
    }

    pub fn constrained(&self) -> &DMatrix<T> {
        &self.beta_constrained
    }

    /// Sanity check of the two defining relations: the constrained gradient
    /// is tangent, and it is the projection of the unconstrained one.
    pub fn is_consistent(&self, tol: T) -> bool {
        if !is_tangent(&self.base, &self.beta_constrained, tol) {
            return false;
        }
        match project_tangent(&self.base, &self.beta_unconstrained) {
            Ok(projected) => {
                let scale = T::one().max(self.beta_constrained.norm());
                (projected - &self.beta_constrained).norm() <= tol * scale
            }
            Err(_) => false,
        }
    }
}
