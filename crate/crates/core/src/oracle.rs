//! Independent brute-force verifiers used by the test suite.
//!
//! These deliberately avoid the closed forms they validate:
//! [`gradient_via_gram`] reaches the unconstrained gradient only through the
//! metric's Gram matrix, and [`projection_via_lsq`] reaches the projection
//! only through the tangent basis and that same Gram matrix. They are sized
//! for oracle-scale problems (`n ≤ 20`, so the Gram matrix is at most
//! `100×100`).

use nalgebra::{Cholesky, DMatrix, DVector};

use crate::constraint::{tangent_basis, AmbientPoint};
use crate::error::{Error, Result};
use crate::linalg::{sym_part, symmetric_condition, unvec_col, vec_col};
use crate::metric::{gram_matrix, Beta};
use crate::scalar::{real, Scalar};

/// Largest condition number an oracle linear system may have before the test
/// instance is rejected as untrustworthy.
pub const CONDITION_LIMIT: f64 = 1e10;

/// Central finite difference of `fun` at `x` along `ξ`:
/// `(fun(X + step·ξ) − fun(X − step·ξ)) / (2·step)`. Second-order accurate.
pub fn fd_directional<T: Scalar, F>(fun: F, x: &DMatrix<T>, xi: &DMatrix<T>, step: T) -> T
where
    F: Fn(&DMatrix<T>) -> T,
{
    debug_assert!(step > T::zero(), "finite-difference step must be positive");
    let plus = fun(&(x + xi * step));
    let minus = fun(&(x - xi * step));
    (plus - minus) / (step * real::<T>(2.0))
}

/// Default finite-difference step `1e-6·(1 + ‖X‖)`.
pub fn default_fd_step<T: Scalar>(x: &DMatrix<T>) -> T {
    real::<T>(1e-6) * (T::one() + x.norm())
}

/// Recovers the unconstrained Riemannian gradient numerically by solving
/// `G·vec(∇f) = vec(∇_E f)` with the metric's Gram matrix `G`.
///
/// Rejects instances whose Gram matrix has condition above
/// [`CONDITION_LIMIT`].
pub fn gradient_via_gram<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    eucl_grad: &DMatrix<T>,
) -> Result<DMatrix<T>> {
    let gram = gram_matrix(x, beta)?;
    let cond = symmetric_condition(&gram);
    if cond.as_f64() > CONDITION_LIMIT {
        return Err(Error::IllConditioned {
            cond: cond.as_f64(),
            limit: CONDITION_LIMIT,
        });
    }
    let chol = Cholesky::new(gram).ok_or(Error::IllConditioned {
        cond: cond.as_f64(),
        limit: CONDITION_LIMIT,
    })?;
    let solution = chol.solve(&vec_col(eucl_grad));
    Ok(unvec_col(&solution, x.n(), x.p()))
}

/// Result of the least-squares projection oracle.
#[derive(Clone, Debug)]
pub struct LsqProjection<T: Scalar> {
    /// The projected matrix, reassembled from tangent-basis coordinates.
    pub projection: DMatrix<T>,
    /// Condition number of the tangent-basis normal-equations matrix.
    pub gram_condition: T,
}

/// Projects `Z` onto the layer tangent space by brute force: minimizes
/// `g(Z − ξ, Z − ξ)` over the span of the tangent basis via the normal
/// equations under the β-metric.
///
/// Rejects instances whose basis Gram matrix has condition above
/// [`CONDITION_LIMIT`]. The result must agree with the closed-form
/// projection and be the same for every `β`.
pub fn projection_via_lsq<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    z: &DMatrix<T>,
) -> Result<LsqProjection<T>> {
    if z.shape() != (x.n(), x.p()) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", x.n(), x.p()),
            actual: format!("{}x{}", z.nrows(), z.ncols()),
        });
    }
    let basis = tangent_basis(x);
    let dim = basis.len();
    let (n, p) = (x.n(), x.p());
    let gram = gram_matrix(x, beta)?;

    let mut stack = DMatrix::zeros(n * p, dim);
    for (c, v) in basis.vectors().iter().enumerate() {
        stack.set_column(c, &vec_col(v));
    }
    let weighted = &gram * &stack;
    let normal = sym_part(&stack.tr_mul(&weighted));
    let rhs = stack.tr_mul(&(&gram * vec_col(z)));

    let cond = symmetric_condition(&normal);
    if cond.as_f64() > CONDITION_LIMIT {
        return Err(Error::IllConditioned {
            cond: cond.as_f64(),
            limit: CONDITION_LIMIT,
        });
    }
    let chol = Cholesky::new(normal).ok_or(Error::IllConditioned {
        cond: cond.as_f64(),
        limit: CONDITION_LIMIT,
    })?;
    let coeffs: DVector<T> = chol.solve(&rhs);
    let mut projection = DMatrix::zeros(n, p);
    for (c, v) in basis.vectors().iter().enumerate() {
        projection += v * coeffs[c];
    }
    Ok(LsqProjection {
        projection,
        gram_condition: cond,
    })
}

/// Dense symmetric eigendecomposition reference: the sum of the `p` smallest
/// eigenvalues of `A` and an orthonormal basis of the corresponding
/// invariant subspace.
pub fn eigen_reference<T: Scalar>(a: &DMatrix<T>, p: usize) -> Result<(T, DMatrix<T>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("{n}x{n}"),
            actual: format!("{}x{}", a.nrows(), a.ncols()),
        });
    }
    let asym = (a - a.transpose()).norm();
    if asym > T::FEASIBILITY_TOL * T::one().max(a.norm()) {
        return Err(Error::NotSymmetric {
            residual: asym.as_f64(),
        });
    }
    if p == 0 || p > n {
        return Err(Error::InvalidParameter(format!(
            "subspace width must satisfy 1 <= p <= n, got p={p}, n={n}"
        )));
    }
    let eig = a.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[i]
            .partial_cmp(&eig.eigenvalues[j])
            .expect("eigenvalues are finite")
    });
    let mut sum = T::zero();
    let mut vectors = DMatrix::zeros(n, p);
    for (col, &idx) in order.iter().take(p).enumerate() {
        sum += eig.eigenvalues[idx];
        vectors.set_column(col, &eig.eigenvectors.column(idx));
    }
    Ok((sum, vectors))
}
