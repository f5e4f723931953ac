//! Concrete smooth objectives with Euclidean gradients, plus seeded random
//! instance generation. These are the standard orthogonality-constrained
//! test beds: trace minimization (eigenvalue sums) and Procrustes fitting,
//! both with analytically checkable optima.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::constraint::AmbientPoint;
use crate::error::{Error, Result};
use crate::oracle::eigen_reference;
use crate::scalar::{real, Scalar};

/// A smooth cost `f` with its Euclidean (Frobenius) gradient `∇_E f`.
///
/// Objectives are immutable after construction and their callbacks must be
/// pure, so they are safe to share across threads.
pub struct Objective<T: Scalar> {
    name: String,
    n: usize,
    p: usize,
    eval: Box<dyn Fn(&DMatrix<T>) -> T + Send + Sync>,
    eucl_grad: Box<dyn Fn(&DMatrix<T>) -> DMatrix<T> + Send + Sync>,
}

impl<T: Scalar> std::fmt::Debug for Objective<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Objective({}, {}x{})", self.name, self.n, self.p)
    }
}

impl<T: Scalar> Objective<T> {
    /// Wraps arbitrary cost and gradient callbacks over `n×p` arguments.
    pub fn new<F, G>(name: impl Into<String>, n: usize, p: usize, eval: F, eucl_grad: G) -> Self
    where
        F: Fn(&DMatrix<T>) -> T + Send + Sync + 'static,
        G: Fn(&DMatrix<T>) -> DMatrix<T> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            n,
            p,
            eval: Box::new(eval),
            eucl_grad: Box::new(eucl_grad),
        }
    }

    /// The constant-zero objective; the landing iteration then reduces to
    /// the pure normal flow on the infeasibility.
    pub fn zero(n: usize, p: usize) -> Self {
        Self::new("zero", n, p, |_| T::zero(), move |x| {
            DMatrix::zeros(x.nrows(), x.ncols())
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Evaluates `f(X)`.
    pub fn eval(&self, x: &DMatrix<T>) -> T {
        (self.eval)(x)
    }

    /// Evaluates the Euclidean gradient `∇_E f(X)`.
    pub fn eucl_grad(&self, x: &DMatrix<T>) -> DMatrix<T> {
        (self.eucl_grad)(x)
    }
}

/// Trace-minimization objective `f(X) = tr(XᵀAX)` with `∇_E f(X) = 2AX`,
/// for symmetric `A`. Its constrained minimum over the Stiefel manifold is
/// the sum of the `p` smallest eigenvalues of `A`.
pub fn rayleigh<T: Scalar>(a: &DMatrix<T>, p: usize) -> Result<Objective<T>> {
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
        return Err(Error::InvalidShape { n, p });
    }
    let a_eval = a.clone();
    let a_grad = a.clone();
    Ok(Objective::new(
        "rayleigh",
        n,
        p,
        move |x| (&a_eval * x).dot(x),
        move |x| &a_grad * x * real::<T>(2.0),
    ))
}

/// Procrustes objective `f(X) = ½‖AX − B‖²` with `∇_E f(X) = Aᵀ(AX − B)`,
/// for `A ∈ R^{m×n}` and `B ∈ R^{m×p}`.
pub fn procrustes<T: Scalar>(a: &DMatrix<T>, b: &DMatrix<T>) -> Result<Objective<T>> {
    let (m, n) = a.shape();
    let p = b.ncols();
    if b.nrows() != m {
        return Err(Error::DimensionMismatch {
            expected: format!("{m}x{p}"),
            actual: format!("{}x{}", b.nrows(), b.ncols()),
        });
    }
    if p == 0 || p > n {
        return Err(Error::InvalidShape { n, p });
    }
    let a_eval = a.clone();
    let b_eval = b.clone();
    let a_grad = a.clone();
    let b_grad = b.clone();
    Ok(Objective::new(
        "procrustes",
        n,
        p,
        move |x| {
            let r = &a_eval * x - &b_eval;
            r.norm_squared() * real::<T>(0.5)
        },
        move |x| {
            let r = &a_grad * x - &b_grad;
            a_grad.tr_mul(&r)
        },
    ))
}

/// Which shipped objective a random instance uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    Rayleigh,
    Procrustes,
}

impl std::str::FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rayleigh" => Ok(Self::Rayleigh),
            "procrustes" => Ok(Self::Procrustes),
            other => Err(Error::InvalidParameter(format!(
                "unknown problem kind '{other}' (expected 'rayleigh' or 'procrustes')"
            ))),
        }
    }
}

/// A fully specified run: objective, starting point, and (when available) the
/// known optimal value.
#[derive(Debug)]
pub struct ProblemInstance<T: Scalar> {
    pub objective: Objective<T>,
    pub x0: AmbientPoint<T>,
    /// Known constrained optimum: the eigenvalue-sum reference for the
    /// trace objective, exact zero for the synthetic Procrustes instances
    /// (their targets are built as `B = A·X⋆` with feasible `X⋆`).
    pub optimum_oracle: Option<T>,
    pub seed: u64,
}

fn standard_normal_matrix<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, p: usize) -> DMatrix<T> {
    DMatrix::from_fn(n, p, |_, _| real::<T>(rng.sample(StandardNormal)))
}

/// Draws a well-conditioned standard-normal matrix, retrying while the
/// singular-value ratio is below `1e-6`.
fn full_rank_normal<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, p: usize) -> AmbientPoint<T> {
    loop {
        let candidate = standard_normal_matrix(rng, n, p);
        if let Ok(point) = AmbientPoint::with_rank_floor(candidate, real::<T>(1e-6)) {
            return point;
        }
    }
}

/// Random orthonormal `n×p` matrix (QR of a Gaussian draw).
fn random_stiefel<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, p: usize) -> DMatrix<T> {
    full_rank_normal::<T>(rng, n, p).matrix().clone().qr().q()
}

/// Builds a deterministic seeded instance.
///
/// The starting point is a random orthonormal matrix, optionally pushed off
/// the manifold by `X₀ ← X_feas·(I + (δ/2)·D)` with a random diagonal `D` of
/// unit Frobenius norm, which yields `‖h(X₀)‖ ≈ δ` up to an `O(δ²)` term.
/// Requires `0 ≤ δ < 2` so the perturbed point stays full-rank.
pub fn random_instance<T: Scalar>(
    kind: ProblemKind,
    n: usize,
    p: usize,
    seed: u64,
    delta: T,
) -> Result<ProblemInstance<T>> {
    if p == 0 || p > n {
        return Err(Error::InvalidShape { n, p });
    }
    if delta < T::zero() || delta >= real::<T>(2.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in [0, 2), got {}",
            delta.as_f64()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Objective data first, then the starting point, so both draws are
    // reproducible functions of the seed alone.
    let (objective, optimum_oracle) = match kind {
        ProblemKind::Rayleigh => {
            let raw = standard_normal_matrix::<T>(&mut rng, n, n);
            let scale = real::<T>(0.5) / real::<T>(n as f64).sqrt();
            let a = (&raw + raw.transpose()) * scale;
            let (reference, _) = eigen_reference(&a, p)?;
            (rayleigh(&a, p)?, Some(reference))
        }
        ProblemKind::Procrustes => {
            // 1/√n keeps σ_max(A) = O(1), so step sizes transfer across n.
            let scale = T::one() / real::<T>(n as f64).sqrt();
            let a = full_rank_normal::<T>(&mut rng, n, n).matrix() * scale;
            let x_star = random_stiefel::<T>(&mut rng, n, p);
            let b = &a * x_star;
            (procrustes(&a, &b)?, Some(T::zero()))
        }
    };

    let x0 = start_from_rng(&mut rng, n, p, delta)?;

    Ok(ProblemInstance {
        objective,
        x0,
        optimum_oracle,
        seed,
    })
}

/// Deterministic seeded starting point: random orthonormal matrix, pushed
/// off the manifold by `δ` exactly as in [`random_instance`]. Used when the
/// objective data comes from files instead of a seeded draw.
pub fn random_start<T: Scalar>(n: usize, p: usize, seed: u64, delta: T) -> Result<AmbientPoint<T>> {
    if p == 0 || p > n {
        return Err(Error::InvalidShape { n, p });
    }
    if delta < T::zero() || delta >= real::<T>(2.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in [0, 2), got {}",
            delta.as_f64()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    start_from_rng(&mut rng, n, p, delta)
}

fn start_from_rng<T: Scalar>(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: usize,
    delta: T,
) -> Result<AmbientPoint<T>> {
    let feasible = random_stiefel::<T>(rng, n, p);
    let x0_matrix = if delta > T::zero() {
        let mut d: DVector<T> = DVector::from_fn(p, |_, _| real::<T>(rng.sample(StandardNormal)));
        let norm = d.norm();
        if norm > T::zero() {
            d /= norm;
        } else {
            d[0] = T::one();
        }
        let mut scaling = DMatrix::identity(p, p);
        for i in 0..p {
            scaling[(i, i)] += delta * real::<T>(0.5) * d[i];
        }
        feasible * scaling
    } else {
        feasible
    };
    AmbientPoint::new(x0_matrix)
}
