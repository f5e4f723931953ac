//! The orthogonality constraint `h(X) = XᵀX − I_p`, the infeasibility
//! measure `N(X) = ½‖h(X)‖²`, and the geometry of the layer through a
//! full-rank point: the set of all `Y` with `YᵀY = XᵀX`.
//!
//! Every full-rank `X` sits on exactly one layer, and the layers foliate the
//! set of full-rank `n×p` matrices. The tangent space of the layer at `X`
//! admits three equivalent descriptions:
//!
//! * `{ξ : ξᵀX + Xᵀξ = 0}`,
//! * `{X(XᵀX)⁻¹Ω + Δ : Ω skew, ΔᵀX = 0}`,
//! * `{WX : W ∈ Skew(n)}`,
//!
//! all of dimension `np − p(p+1)/2`. [`tangent_basis`] constructs an explicit
//! basis from the second form; [`is_tangent`] checks the first.

use nalgebra::{Cholesky, DMatrix, Dyn};

use crate::error::{Error, Result};
use crate::linalg::{skew_part, sym_part};
use crate::scalar::{real, Scalar};

/// A full-rank `n×p` real matrix (`p ≤ n`), the iterate of the landing
/// method.
///
/// Construction validates the shape and rejects numerically rank-deficient
/// matrices (relative `σ_min/σ_max` below a floor), then caches `XᵀX` and its
/// Cholesky factor so that the `(XᵀX)⁻¹`-solves appearing throughout the
/// metric formulas never form the inverse explicitly.
#[derive(Clone, Debug)]
pub struct AmbientPoint<T: Scalar> {
    matrix: DMatrix<T>,
    gram: DMatrix<T>,
    chol: Cholesky<T, Dyn>,
    sigma_min_ratio: T,
    sigma_max: T,
}

impl<T: Scalar> PartialEq for AmbientPoint<T> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<T: Scalar> AmbientPoint<T> {
    /// Validates `matrix` as a full-rank point using the default rank floor
    /// [`Scalar::RANK_FLOOR`].
    pub fn new(matrix: DMatrix<T>) -> Result<Self> {
        Self::with_rank_floor(matrix, T::RANK_FLOOR)
    }

    /// Validates `matrix` as a full-rank point: requires `1 ≤ p ≤ n` and
    /// `σ_min(X) ≥ rank_floor·σ_max(X)`.
    pub fn with_rank_floor(matrix: DMatrix<T>, rank_floor: T) -> Result<Self> {
        let (n, p) = matrix.shape();
        if p == 0 || n < p {
            return Err(Error::InvalidShape { n, p });
        }
        let singular_values = matrix.clone().svd(false, false).singular_values;
        let mut sigma_max = T::zero();
        let mut sigma_min = T::max_value().expect("scalar has a max value");
        for &s in singular_values.iter() {
            sigma_max = sigma_max.max(s);
            sigma_min = sigma_min.min(s);
        }
        let ratio = if sigma_max > T::zero() {
            sigma_min / sigma_max
        } else {
            T::zero()
        };
        let singular = Error::SingularLayer {
            ratio: ratio.as_f64(),
            floor: rank_floor.as_f64(),
        };
        if !(ratio >= rank_floor) {
            return Err(singular);
        }
        let gram = sym_part(&matrix.tr_mul(&matrix));
        // A ratio barely above the floor can still defeat the factorization;
        // that is a singular layer for every practical purpose.
        let chol = Cholesky::new(gram.clone()).ok_or(singular)?;
        Ok(Self {
            matrix,
            gram,
            chol,
            sigma_min_ratio: ratio,
            sigma_max,
        })
    }

    /// The underlying `n×p` matrix.
    pub fn matrix(&self) -> &DMatrix<T> {
        &self.matrix
    }

    /// Row count `n`.
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Column count `p`.
    pub fn p(&self) -> usize {
        self.matrix.ncols()
    }

    /// The cached Gram matrix `XᵀX` (exactly symmetric).
    pub fn gram(&self) -> &DMatrix<T> {
        &self.gram
    }

    /// `σ_min(X)/σ_max(X)`, computed once at construction.
    pub fn sigma_min_ratio(&self) -> T {
        self.sigma_min_ratio
    }

    /// Largest singular value of `X`.
    pub fn sigma_max(&self) -> T {
        self.sigma_max
    }

    /// Solves `(XᵀX)·Z = rhs`, i.e. applies `(XᵀX)⁻¹` from the left.
    pub fn solve_gram(&self, rhs: &DMatrix<T>) -> DMatrix<T> {
        assert_eq!(rhs.nrows(), self.p(), "solve_gram needs a p-row rhs");
        self.chol.solve(rhs)
    }

    /// Applies `(XᵀX)⁻¹` from the right: returns `M(XᵀX)⁻¹`.
    pub fn solve_gram_right(&self, m: &DMatrix<T>) -> DMatrix<T> {
        assert_eq!(m.ncols(), self.p(), "solve_gram_right needs a p-column m");
        self.chol.solve(&m.transpose()).transpose()
    }

    /// `X(XᵀX)⁻¹`, the column basis paired with the skew coefficients in the
    /// tangent parametrization.
    pub fn x_gram_inv(&self) -> DMatrix<T> {
        self.solve_gram_right(&self.matrix)
    }

    /// Principal (symmetric positive-definite) square root of `XᵀX`, via the
    /// symmetric eigendecomposition. Eigenvalues are clamped at zero before
    /// the root so rounding noise cannot produce NaN.
    pub fn gram_sqrt(&self) -> DMatrix<T> {
        let eig = self.gram.clone().symmetric_eigen();
        let p = self.p();
        let mut root = DMatrix::zeros(p, p);
        for k in 0..p {
            let lambda = eig.eigenvalues[k].max(T::zero()).sqrt();
            let v = eig.eigenvectors.column(k);
            for i in 0..p {
                for j in 0..p {
                    root[(i, j)] += lambda * v[i] * v[j];
                }
            }
        }
        sym_part(&root)
    }

    /// `‖XᵀX − I_p‖`, the distance of the point from the Stiefel manifold in
    /// the constraint residual.
    pub fn feasibility_residual(&self) -> T {
        residual(self).norm()
    }

    /// Whether the point lies on the Stiefel manifold up to `tol`.
    pub fn is_feasible(&self, tol: T) -> bool {
        self.feasibility_residual() <= tol
    }
}

/// A `p×p` matrix that is exactly symmetric entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T: Scalar> {
    entries: DMatrix<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Builds the symmetric part `(M + Mᵀ)/2` of a square matrix.
    pub fn symmetrized(m: &DMatrix<T>) -> Self {
        Self {
            entries: sym_part(m),
        }
    }

    /// The basis element `e_ie_jᵀ + e_je_iᵀ` (or `e_ie_iᵀ` when `i = j`).
    pub fn pair_basis(p: usize, i: usize, j: usize) -> Self {
        let mut m = DMatrix::zeros(p, p);
        m[(i, j)] = T::one();
        m[(j, i)] = T::one();
        Self { entries: m }
    }

    pub fn entries(&self) -> &DMatrix<T> {
        &self.entries
    }

    pub fn into_inner(self) -> DMatrix<T> {
        self.entries
    }

    pub fn norm(&self) -> T {
        self.entries.norm()
    }
}

/// A `p×p` matrix that is exactly skew-symmetric entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T: Scalar> {
    entries: DMatrix<T>,
}

impl<T: Scalar> SkewMatrix<T> {
    /// Builds the skew part `(M − Mᵀ)/2` of a square matrix.
    pub fn skew_symmetrized(m: &DMatrix<T>) -> Self {
        Self {
            entries: skew_part(m),
        }
    }

    /// The basis element `e_ie_jᵀ − e_je_iᵀ` for `i < j`.
    pub fn pair_basis(p: usize, i: usize, j: usize) -> Self {
        assert!(i < j && j < p, "skew pair basis needs i < j < p");
        let mut m = DMatrix::zeros(p, p);
        m[(i, j)] = T::one();
        m[(j, i)] = -T::one();
        Self { entries: m }
    }

    pub fn entries(&self) -> &DMatrix<T> {
        &self.entries
    }

    pub fn into_inner(self) -> DMatrix<T> {
        self.entries
    }
}

/// An orthonormal basis of the orthogonal complement of `span(X)`:
/// `X_⊥ ∈ R^{n×(n−p)}` with `XᵀX_⊥ = 0` and `X_⊥ᵀX_⊥ = I`.
#[derive(Clone, Debug)]
pub struct OrthoComplement<T: Scalar> {
    base: AmbientPoint<T>,
    entries: DMatrix<T>,
}

impl<T: Scalar> OrthoComplement<T> {
    /// The point this complement was built for.
    pub fn base(&self) -> &AmbientPoint<T> {
        &self.base
    }

    /// The `n×(n−p)` matrix of complement columns.
    pub fn entries(&self) -> &DMatrix<T> {
        &self.entries
    }

    /// Number of complement columns, `n − p`.
    pub fn width(&self) -> usize {
        self.entries.ncols()
    }
}

/// An explicit basis of the layer tangent space at `base`, with
/// `np − p(p+1)/2` linearly independent vectors.
///
/// Ordering: first the skew-coefficient vectors `X(XᵀX)⁻¹(e_ie_jᵀ − e_je_iᵀ)`
/// in lexicographic `(i,j)` order with `i < j`, then the complement vectors
/// `X_⊥e_ke_lᵀ` in column-major order over the `(n−p)×p` coefficient grid.
#[derive(Clone, Debug)]
pub struct TangentBasis<T: Scalar> {
    base: AmbientPoint<T>,
    vectors: Vec<DMatrix<T>>,
}

impl<T: Scalar> TangentBasis<T> {
    pub fn base(&self) -> &AmbientPoint<T> {
        &self.base
    }

    pub fn vectors(&self) -> &[DMatrix<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The layer tangent dimension `np − p(p+1)/2`.
    pub fn expected_len(n: usize, p: usize) -> usize {
        n * p - p * (p + 1) / 2
    }
}

/// The constraint residual `h(X) = XᵀX − I_p`; zero exactly on the Stiefel
/// manifold. The result is exactly symmetric.
pub fn residual<T: Scalar>(x: &AmbientPoint<T>) -> SymMatrix<T> {
    let mut h = x.gram().clone();
    for i in 0..x.p() {
        h[(i, i)] -= T::one();
    }
    SymMatrix::symmetrized(&h)
}

/// The infeasibility `N(X) = ½‖h(X)‖²`; nonnegative, zero iff `XᵀX = I_p`.
pub fn infeasibility<T: Scalar>(x: &AmbientPoint<T>) -> T {
    let h = residual(x).norm();
    h * h * real::<T>(0.5)
}

/// The infeasibility descent field `X·h(X)`, the normal term of the landing
/// step.
///
/// Equal to half the Frobenius gradient of `N`; the factor is immaterial for
/// the iteration because the relaxation weight absorbs it, and this is the
/// field the classical landing step is written with.
pub fn infeasibility_direction<T: Scalar>(x: &AmbientPoint<T>) -> DMatrix<T> {
    x.matrix() * residual(x).entries()
}

/// Euclidean (Frobenius) gradient of the infeasibility:
/// `∇N(X) = 2·X·h(X)`, satisfying `⟨∇N(X), ξ⟩ = DN(X)[ξ]` for every `ξ`.
///
/// The metric computing this gradient is fixed to Frobenius regardless of
/// which ambient metric drives the tangent term.
pub fn infeasibility_gradient<T: Scalar>(x: &AmbientPoint<T>) -> DMatrix<T> {
    infeasibility_direction(x) * real::<T>(2.0)
}

/// The layer diffeomorphism `Y ↦ Y(XᵀX)^{1/2}`, mapping the Stiefel manifold
/// onto the layer through `X`. Uses the principal square root; no other
/// branch is considered.
pub fn layer_map<T: Scalar>(x: &AmbientPoint<T>, y: &DMatrix<T>) -> Result<DMatrix<T>> {
    if y.shape() != (x.n(), x.p()) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", x.n(), x.p()),
            actual: format!("{}x{}", y.nrows(), y.ncols()),
        });
    }
    Ok(y * x.gram_sqrt())
}

/// Orthonormal basis of the orthogonal complement of `span(X)`, from the
/// full orthogonal factor of a QR decomposition of `X`.
pub fn ortho_complement<T: Scalar>(x: &AmbientPoint<T>) -> OrthoComplement<T> {
    let (n, p) = (x.n(), x.p());
    let qr = x.matrix().clone().qr();
    let mut q_t = DMatrix::identity(n, n);
    qr.q_tr_mul(&mut q_t);
    // Rows p.. of Qᵀ are the complement columns; X full-rank guarantees the
    // first p columns of Q span exactly span(X).
    let entries = q_t.rows(p, n - p).transpose();
    OrthoComplement {
        base: x.clone(),
        entries,
    }
}

/// Explicit basis of the layer tangent space at `x`; see [`TangentBasis`]
/// for the ordering convention.
pub fn tangent_basis<T: Scalar>(x: &AmbientPoint<T>) -> TangentBasis<T> {
    let (n, p) = (x.n(), x.p());
    let x_gram_inv = x.x_gram_inv();
    let complement = ortho_complement(x);
    let mut vectors = Vec::with_capacity(TangentBasis::<T>::expected_len(n, p));
    for i in 0..p {
        for j in (i + 1)..p {
            // X(XᵀX)⁻¹(e_ie_jᵀ − e_je_iᵀ): column j holds +X(XᵀX)⁻¹e_i,
            // column i holds −X(XᵀX)⁻¹e_j.
            let mut v = DMatrix::zeros(n, p);
            v.set_column(j, &x_gram_inv.column(i));
            v.set_column(i, &(-x_gram_inv.column(j)));
            vectors.push(v);
        }
    }
    for l in 0..p {
        for k in 0..complement.width() {
            let mut v = DMatrix::zeros(n, p);
            v.set_column(l, &complement.entries().column(k));
            vectors.push(v);
        }
    }
    TangentBasis {
        base: x.clone(),
        vectors,
    }
}

/// Whether `ξ` lies in the layer tangent space at `x`:
/// `‖ξᵀX + Xᵀξ‖ ≤ tol·max(1, ‖X‖·‖ξ‖)`.
///
/// A shape mismatch is reported as `false`.
pub fn is_tangent<T: Scalar>(x: &AmbientPoint<T>, xi: &DMatrix<T>, tol: T) -> bool {
    if xi.shape() != (x.n(), x.p()) {
        return false;
    }
    let cross = x.matrix().tr_mul(xi);
    let defect = (&cross + cross.transpose()).norm();
    let scale = T::one().max(x.matrix().norm() * xi.norm());
    defect <= tol * scale
}
