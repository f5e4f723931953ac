//! The landing iteration: a retraction-free scheme for optimization under
//! orthogonality constraints.
//!
//! Each step moves along the weighted sum of two terms,
//!
//! ```text
//! X_{k+1} = X_k − η_k·(grad f(X_k) + ω·∇N(X_k)),
//! ```
//!
//! where `grad f` is the constrained Riemannian gradient in the chosen
//! β-metric (tangent to the current layer, so it changes `h` only at second
//! order) and the normal term `X·h(X)` — proportional to the Frobenius
//! gradient of the infeasibility — pulls the iterate toward the feasible
//! set. The loop stops when `‖grad f(X_k)‖ + ‖h(X_k)‖ ≤ ε` (both norms
//! Frobenius), at the iteration cap, or when the iterate degenerates.

use nalgebra::DMatrix;

use crate::constraint::{infeasibility, residual, AmbientPoint};
use crate::error::{Error, Result};
use crate::geometry::constrained_gradient;
use crate::metric::Beta;
use crate::problems::Objective;
use crate::scalar::{real, Scalar};

/// Smallest step the backtracking policy will try before giving up.
pub const MIN_BACKTRACK_STEP: f64 = 1e-16;

/// Most times a rank-violating candidate step is halved before the run is
/// declared broken down.
const MAX_RANK_HALVINGS: usize = 60;

/// Step-size policy for the landing loop.
///
/// `None` step sizes are resolved at solve time to the dimensionally safe
/// default `0.1/(1 + σ_max(X₀)²)`.
#[derive(Clone, Debug, PartialEq)]
pub enum StepPolicy<T: Scalar> {
    /// Constant step, halved (up to a bounded number of times, for that
    /// iteration only) when the candidate iterate would be rank-deficient.
    Fixed { eta: Option<T> },
    /// Armijo-style backtracking on the merit `f + ω·N`: a step is accepted
    /// when the merit drops by at least `sufficient_decrease·η·‖d‖²`,
    /// shrinking on rejection and re-expanding the carried step on success,
    /// never beyond the initial step.
    Backtracking {
        eta0: Option<T>,
        shrink: T,
        growth: T,
        sufficient_decrease: T,
    },
}

impl<T: Scalar> StepPolicy<T> {
    /// Backtracking with the default parameters (shrink ½, growth 1.1,
    /// sufficient decrease 1e-4).
    pub fn backtracking() -> Self {
        Self::Backtracking {
            eta0: None,
            shrink: real::<T>(0.5),
            growth: real::<T>(1.1),
            sufficient_decrease: real::<T>(1e-4),
        }
    }
}

impl<T: Scalar> Default for StepPolicy<T> {
    fn default() -> Self {
        Self::Fixed { eta: None }
    }
}

/// Configuration of a landing run.
#[derive(Clone, Debug)]
pub struct LandingConfig<T: Scalar> {
    /// Metric parameter for the tangent term.
    pub beta: Beta<T>,
    /// Relaxation weight `ω > 0` on the normal term.
    pub omega: T,
    /// Stopping tolerance `ε` on `‖grad f‖ + ‖h‖`.
    pub epsilon: T,
    /// Iteration cap.
    pub max_iters: usize,
    pub step_policy: StepPolicy<T>,
    /// Relative `σ_min/σ_max` floor candidates must clear.
    pub rank_floor: T,
}

impl<T: Scalar> LandingConfig<T> {
    /// Defaults: `ω = 1`, `ε = 1e-8`, 10000 iterations, fixed auto-scaled
    /// step, rank floor [`Scalar::RANK_FLOOR`].
    pub fn new(beta: Beta<T>) -> Self {
        Self {
            beta,
            omega: T::one(),
            epsilon: real::<T>(1e-8),
            max_iters: 10_000,
            step_policy: StepPolicy::default(),
            rank_floor: T::RANK_FLOOR,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.omega <= T::zero() {
            return Err(Error::InvalidParameter("omega must be positive".into()));
        }
        if self.epsilon <= T::zero() {
            return Err(Error::InvalidParameter("epsilon must be positive".into()));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidParameter("max_iters must be positive".into()));
        }
        if self.rank_floor <= T::zero() || self.rank_floor >= T::one() {
            return Err(Error::InvalidParameter(
                "rank_floor must lie in (0, 1)".into(),
            ));
        }
        match &self.step_policy {
            StepPolicy::Fixed { eta } => {
                if let Some(e) = eta {
                    if *e <= T::zero() {
                        return Err(Error::InvalidParameter("eta must be positive".into()));
                    }
                }
            }
            StepPolicy::Backtracking {
                eta0,
                shrink,
                growth,
                sufficient_decrease,
            } => {
                if let Some(e) = eta0 {
                    if *e <= T::zero() {
                        return Err(Error::InvalidParameter("eta0 must be positive".into()));
                    }
                }
                if !(*shrink > T::zero() && *shrink < T::one()) {
                    return Err(Error::InvalidParameter(
                        "shrink must lie in (0, 1)".into(),
                    ));
                }
                if *growth < T::one() {
                    return Err(Error::InvalidParameter("growth must be >= 1".into()));
                }
                if *sufficient_decrease <= T::zero() {
                    return Err(Error::InvalidParameter(
                        "sufficient_decrease must be positive".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// One row of the solver trace.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationRecord<T: Scalar> {
    pub k: usize,
    pub f_value: T,
    /// Frobenius norm of the constrained gradient at this iterate.
    pub grad_norm: T,
    /// `‖h(X_k)‖`; always satisfies `h_norm² = 2·N_value`.
    pub h_norm: T,
    pub n_value: T,
    /// Step applied from this iterate; zero for the terminal record.
    pub eta: T,
    pub sigma_min_ratio: T,
}

/// Why the loop stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LandingStatus {
    /// The stopping criterion `‖grad f‖ + ‖h‖ ≤ ε` held at the final record.
    Converged,
    /// The iteration cap was reached first.
    MaxIters,
    /// No admissible step could keep the iterate above the rank floor.
    RankBreakdown,
    /// Backtracking shrank the step below [`MIN_BACKTRACK_STEP`].
    StepFailure,
}

/// Outcome of a landing run.
#[derive(Clone, Debug)]
pub struct LandingResult<T: Scalar> {
    pub final_point: AmbientPoint<T>,
    pub trace: Vec<IterationRecord<T>>,
    pub status: LandingStatus,
}

impl<T: Scalar> LandingResult<T> {
    pub fn final_record(&self) -> &IterationRecord<T> {
        self.trace.last().expect("trace always has the k=0 record")
    }

    pub fn iterations(&self) -> usize {
        self.final_record().k
    }
}

/// The merit function `f(X) + ω·N(X)` used by the backtracking policy.
pub fn merit_value<T: Scalar>(objective: &Objective<T>, x: &AmbientPoint<T>, omega: T) -> T {
    objective.eval(x.matrix()) + omega * infeasibility(x)
}

/// Default step scale `0.1/(1 + σ_max(X₀)²)`.
pub fn default_step<T: Scalar>(x0: &AmbientPoint<T>) -> T {
    real::<T>(0.1) / (T::one() + x0.sigma_max() * x0.sigma_max())
}

/// One landing step `X − η·(grad f(X) + ω·X·h(X))` from an explicit
/// Euclidean gradient. Fails with a singular-layer error when the candidate
/// falls under the default rank floor.
pub fn landing_step<T: Scalar>(
    x: &AmbientPoint<T>,
    beta: Beta<T>,
    omega: T,
    eta: T,
    eucl_grad: &DMatrix<T>,
) -> Result<AmbientPoint<T>> {
    if omega <= T::zero() {
        return Err(Error::InvalidParameter("omega must be positive".into()));
    }
    if eta <= T::zero() {
        return Err(Error::InvalidParameter("eta must be positive".into()));
    }
    let grad = constrained_gradient(x, beta, eucl_grad)?;
    let direction = grad + x.matrix() * residual(x).entries() * omega;
    AmbientPoint::new(x.matrix() - direction * eta)
}

/// Runs the landing loop from `x0` until the stopping criterion, the
/// iteration cap, or a breakdown. The trace has one record per visited
/// iterate, including `k = 0`; reruns with identical inputs produce
/// bit-identical traces.
pub fn solve<T: Scalar>(
    objective: &Objective<T>,
    x0: &AmbientPoint<T>,
    config: &LandingConfig<T>,
) -> Result<LandingResult<T>> {
    config.validate()?;
    if (objective.n(), objective.p()) != (x0.n(), x0.p()) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", objective.n(), objective.p()),
            actual: format!("{}x{}", x0.n(), x0.p()),
        });
    }

    let auto_step = default_step(x0);
    let mut carried_step = match &config.step_policy {
        StepPolicy::Fixed { eta } => eta.unwrap_or(auto_step),
        StepPolicy::Backtracking { eta0, .. } => eta0.unwrap_or(auto_step),
    };

    let mut x = x0.clone();
    let mut trace = Vec::new();
    let mut k = 0usize;

    let status = loop {
        let f_value = objective.eval(x.matrix());
        let eucl = objective.eucl_grad(x.matrix());
        let grad = constrained_gradient(&x, config.beta, &eucl)?;
        let h = residual(&x);
        let h_norm = h.norm();
        let n_value = h_norm * h_norm * real::<T>(0.5);
        let grad_norm = grad.norm();
        let mut record = IterationRecord {
            k,
            f_value,
            grad_norm,
            h_norm,
            n_value,
            eta: T::zero(),
            sigma_min_ratio: x.sigma_min_ratio(),
        };

        if grad_norm + h_norm <= config.epsilon {
            trace.push(record);
            break LandingStatus::Converged;
        }
        if k == config.max_iters {
            trace.push(record);
            break LandingStatus::MaxIters;
        }

        let direction = &grad + x.matrix() * h.entries() * config.omega;
        let stepped = match &config.step_policy {
            StepPolicy::Fixed { .. } => {
                fixed_step(&x, &direction, carried_step, config.rank_floor)
            }
            StepPolicy::Backtracking {
                eta0,
                shrink,
                growth,
                sufficient_decrease,
            } => backtracking_step(
                objective,
                &x,
                &direction,
                f_value + config.omega * n_value,
                carried_step,
                eta0.unwrap_or(auto_step),
                *shrink,
                *growth,
                *sufficient_decrease,
                config.omega,
                config.rank_floor,
            ),
        };

        match stepped {
            Ok((next, eta_used, next_carried)) => {
                record.eta = eta_used;
                trace.push(record);
                carried_step = next_carried;
                x = next;
                k += 1;
            }
            Err(stop) => {
                trace.push(record);
                break stop;
            }
        }
    };

    Ok(LandingResult {
        final_point: x,
        trace,
        status,
    })
}

type StepOutcome<T> = std::result::Result<(AmbientPoint<T>, T, T), LandingStatus>;

fn fixed_step<T: Scalar>(
    x: &AmbientPoint<T>,
    direction: &DMatrix<T>,
    eta: T,
    rank_floor: T,
) -> StepOutcome<T> {
    let mut trial = eta;
    for _ in 0..=MAX_RANK_HALVINGS {
        let candidate = x.matrix() - direction * trial;
        if let Ok(point) = AmbientPoint::with_rank_floor(candidate, rank_floor) {
            // The configured step is carried unchanged to the next iteration.
            return Ok((point, trial, eta));
        }
        trial *= real::<T>(0.5);
    }
    Err(LandingStatus::RankBreakdown)
}

#[allow(clippy::too_many_arguments)]
fn backtracking_step<T: Scalar>(
    objective: &Objective<T>,
    x: &AmbientPoint<T>,
    direction: &DMatrix<T>,
    merit_at_x: T,
    carried: T,
    eta_cap: T,
    shrink: T,
    growth: T,
    sufficient_decrease: T,
    omega: T,
    rank_floor: T,
) -> StepOutcome<T> {
    let dir_norm_sq = direction.norm_squared();
    // Decreases below the merit's representational precision are not
    // decidable; treat them as satisfied instead of shrinking forever.
    let slack = T::default_epsilon() * real::<T>(4.0) * (T::one() + merit_at_x.abs());
    let mut eta = carried;
    let mut last_rejection_was_rank = false;
    while eta >= real::<T>(MIN_BACKTRACK_STEP) {
        let candidate = x.matrix() - direction * eta;
        match AmbientPoint::with_rank_floor(candidate, rank_floor) {
            Ok(point) => {
                let merit = objective.eval(point.matrix()) + omega * infeasibility(&point);
                if merit <= merit_at_x - sufficient_decrease * eta * dir_norm_sq + slack {
                    return Ok((point, eta, (eta * growth).min(eta_cap)));
                }
                last_rejection_was_rank = false;
            }
            Err(_) => {
                last_rejection_was_rank = true;
            }
        }
        eta *= shrink;
    }
    Err(if last_rejection_was_rank {
        LandingStatus::RankBreakdown
    } else {
        LandingStatus::StepFailure
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::infeasibility_direction;
    use crate::geometry::feasibility_drift;
    use crate::oracle::eigen_reference;
    use crate::problems::{random_instance, rayleigh, ProblemKind};
    use crate::scalar::rel_err;
    use nalgebra::DMatrix;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn randn(rng: &mut ChaCha8Rng, n: usize, p: usize) -> DMatrix<f64> {
        DMatrix::from_fn(n, p, |_, _| rng.sample(StandardNormal))
    }

    fn seeded_point(n: usize, p: usize, seed: u64) -> AmbientPoint<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let m = randn(&mut rng, n, p);
            if let Ok(x) = AmbientPoint::new(m) {
                if x.sigma_min_ratio() > 1e-3 {
                    return x;
                }
            }
        }
    }

    fn scalar_point(v: f64) -> AmbientPoint<f64> {
        AmbientPoint::new(DMatrix::from_element(1, 1, v)).unwrap()
    }

    #[test]
    fn step_leaves_stationary_feasible_points_alone() {
        // Eigenvector basis of a symmetric matrix: feasible and stationary.
        let raw = randn(&mut ChaCha8Rng::seed_from_u64(401), 6, 6);
        let a = (&raw + raw.transpose()) * 0.5;
        let (_, basis) = eigen_reference(&a, 2).unwrap();
        let x = AmbientPoint::new(basis).unwrap();
        let obj = rayleigh(&a, 2).unwrap();
        let next = landing_step(&x, Beta::euclidean(), 1.0, 0.1, &obj.eucl_grad(x.matrix()))
            .unwrap();
        assert!((next.matrix() - x.matrix()).norm() <= 1e-12);
    }

    #[test]
    fn step_scalar_pure_normal_case() {
        let x = scalar_point(2.0);
        let zero_grad = DMatrix::zeros(1, 1);
        let next = landing_step(&x, Beta::canonical(), 1.0, 0.1, &zero_grad).unwrap();
        assert!((next.matrix()[(0, 0)] - 1.4).abs() <= 1e-15);
    }

    #[test]
    fn step_matches_hand_composed_update() {
        let x = seeded_point(5, 2, 403);
        let eucl = randn(&mut ChaCha8Rng::seed_from_u64(404), 5, 2);
        let beta = Beta::new(0.3).unwrap();
        let (omega, eta) = (0.7, 0.05);
        let next = landing_step(&x, beta, omega, eta, &eucl).unwrap();
        let recomposed = x.matrix()
            - (constrained_gradient(&x, beta, &eucl).unwrap()
                + infeasibility_direction(&x) * omega)
                * eta;
        assert_eq!(next.matrix(), &recomposed);
    }

    #[test]
    fn step_rejects_bad_parameters() {
        let x = scalar_point(2.0);
        let g = DMatrix::zeros(1, 1);
        assert!(landing_step(&x, Beta::euclidean(), 0.0, 0.1, &g).is_err());
        assert!(landing_step(&x, Beta::euclidean(), 1.0, 0.0, &g).is_err());
    }

    #[test]
    fn merit_examples() {
        let obj = Objective::<f64>::zero(1, 1);
        let x = scalar_point(2.0);
        assert_eq!(merit_value(&obj, &x, 2.0), 9.0);

        let feasible = AmbientPoint::new(DMatrix::identity(4, 2)).unwrap();
        let obj = Objective::new("shift", 4, 2, |_| 3.5, |x| DMatrix::zeros(x.nrows(), x.ncols()));
        assert_eq!(merit_value(&obj, &feasible, 5.0), 3.5);
    }

    #[test]
    fn normal_step_decreases_infeasibility() {
        // With no cost term and η ≤ 1/(2ω(σ_max²+1)), one step strictly
        // decreases N whenever the point is infeasible.
        let mut checked = 0;
        for seed in 0..50u64 {
            let x = seeded_point(5, 2, 500 + seed);
            if residual(&x).norm() < 1e-8 {
                continue;
            }
            let omega = 1.0;
            let smax = x.sigma_max();
            let eta = 1.0 / (2.0 * omega * (smax * smax + 1.0));
            let zero = DMatrix::zeros(5, 2);
            let next = landing_step(&x, Beta::euclidean(), omega, eta, &zero).unwrap();
            assert!(
                infeasibility(&next) < infeasibility(&x),
                "seed {seed}: N did not decrease"
            );
            checked += 1;
        }
        assert!(checked >= 45, "only {checked} infeasible samples");
    }

    #[test]
    fn constraint_residual_shrinks_quadratically_along_the_step() {
        // h is quadratic, so ‖h(X−ηd) − h(X) + η·Dh(X)[d]‖ = η²‖dᵀd‖; halving
        // η must quarter it.
        let x = seeded_point(6, 3, 405);
        let obj = random_instance::<f64>(ProblemKind::Rayleigh, 6, 3, 406, 0.0)
            .unwrap()
            .objective;
        let eucl = obj.eucl_grad(x.matrix());
        let grad = constrained_gradient(&x, Beta::canonical(), &eucl).unwrap();
        let d = &grad + infeasibility_direction(&x);

        let defect = |eta: f64| {
            let moved = AmbientPoint::new(x.matrix() - &d * eta).unwrap();
            let drift = feasibility_drift(&x, &d).unwrap();
            (residual(&moved).entries() - residual(&x).entries()
                + drift.entries() * eta)
                .norm()
        };
        let r1 = defect(1e-2);
        let r2 = defect(5e-3);
        assert!(r2 <= r1 / 4.0 + 1e-14, "r1 {r1}, r2 {r2}");
    }

    #[test]
    fn solve_converges_immediately_at_a_stationary_feasible_start() {
        let raw = randn(&mut ChaCha8Rng::seed_from_u64(407), 8, 8);
        let a = (&raw + raw.transpose()) * 0.5;
        let (_, basis) = eigen_reference(&a, 3).unwrap();
        let x0 = AmbientPoint::new(basis).unwrap();
        let obj = rayleigh(&a, 3).unwrap();
        let result = solve(&obj, &x0, &LandingConfig::new(Beta::euclidean())).unwrap();
        assert_eq!(result.status, LandingStatus::Converged);
        assert_eq!(result.trace.len(), 1);
        assert_eq!(result.trace[0].k, 0);
    }

    #[test]
    fn solve_scalar_normal_flow_matches_recursion_and_is_monotone() {
        let obj = Objective::<f64>::zero(1, 1);
        let x0 = scalar_point(2.0);
        let mut config = LandingConfig::new(Beta::euclidean());
        config.step_policy = StepPolicy::Fixed { eta: Some(0.1) };
        config.max_iters = 200;
        let result = solve(&obj, &x0, &config).unwrap();
        assert_eq!(result.status, LandingStatus::Converged);
        assert!(result.iterations() <= 200);

        // Independent scalar recursion x ← x − η·x·(x²−1).
        let mut x = 2.0f64;
        for rec in &result.trace {
            let h = x * x - 1.0;
            assert!(rel_err(rec.h_norm, h.abs()) <= 1e-14, "k={}", rec.k);
            x -= 0.1 * x * h;
        }

        // Monotone decrease of the iterate toward 1.
        let mut prev = f64::INFINITY;
        let mut x = 2.0f64;
        for _ in &result.trace {
            assert!(x <= prev && x >= 1.0 - 1e-12);
            prev = x;
            x -= 0.1 * x * (x * x - 1.0);
        }
        assert!((result.final_point.matrix()[(0, 0)] - 1.0).abs() <= 5e-9);
    }

    #[test]
    fn solve_reaches_the_rayleigh_optimum() {
        let instance = random_instance::<f64>(ProblemKind::Rayleigh, 20, 5, 42, 0.5).unwrap();
        let mut config = LandingConfig::new(Beta::canonical());
        config.step_policy = StepPolicy::Fixed { eta: Some(0.3) };
        let result = solve(&instance.objective, &instance.x0, &config).unwrap();
        assert_eq!(result.status, LandingStatus::Converged);
        let final_rec = result.final_record();
        assert!(final_rec.h_norm <= 1e-8);
        let f_final = instance.objective.eval(result.final_point.matrix());
        let reference = instance.optimum_oracle.unwrap();
        assert!(
            (f_final - reference).abs() <= 1e-6,
            "f {f_final} vs oracle {reference}"
        );
    }

    #[test]
    fn solve_trace_is_consistent_and_deterministic() {
        let instance = random_instance::<f64>(ProblemKind::Rayleigh, 10, 3, 7, 0.5).unwrap();
        let mut config = LandingConfig::new(Beta::new(0.5).unwrap());
        config.step_policy = StepPolicy::Fixed { eta: Some(0.2) };
        let a = solve(&instance.objective, &instance.x0, &config).unwrap();
        let b = solve(&instance.objective, &instance.x0, &config).unwrap();
        assert_eq!(a.trace, b.trace, "reruns must be bit-identical");
        assert_eq!(a.status, b.status);

        for rec in &a.trace {
            assert!(rel_err(rec.h_norm * rec.h_norm, 2.0 * rec.n_value) <= 1e-12);
            assert!(rec.sigma_min_ratio >= config.rank_floor);
        }

        // Stopping correctness: converged iff the criterion holds at the end.
        let last = a.final_record();
        assert_eq!(
            a.status == LandingStatus::Converged,
            last.grad_norm + last.h_norm <= config.epsilon
        );
    }

    #[test]
    fn solve_respects_the_iteration_cap() {
        let instance = random_instance::<f64>(ProblemKind::Rayleigh, 10, 3, 11, 0.5).unwrap();
        let mut config = LandingConfig::new(Beta::euclidean());
        config.max_iters = 5;
        config.step_policy = StepPolicy::Fixed { eta: Some(1e-6) };
        let result = solve(&instance.objective, &instance.x0, &config).unwrap();
        assert_eq!(result.status, LandingStatus::MaxIters);
        assert_eq!(result.trace.len(), 6);
        assert_eq!(result.final_record().k, 5);
    }

    #[test]
    fn solve_with_backtracking_converges() {
        let instance = random_instance::<f64>(ProblemKind::Rayleigh, 12, 3, 13, 0.5).unwrap();
        let mut config = LandingConfig::new(Beta::canonical());
        config.step_policy = StepPolicy::backtracking();
        let result = solve(&instance.objective, &instance.x0, &config).unwrap();
        assert_eq!(result.status, LandingStatus::Converged);
        let f_final = instance.objective.eval(result.final_point.matrix());
        assert!((f_final - instance.optimum_oracle.unwrap()).abs() <= 1e-6);
    }

    #[test]
    fn solve_validates_config_and_shapes() {
        let obj = Objective::<f64>::zero(3, 2);
        let x0 = seeded_point(3, 2, 409);
        let mut config = LandingConfig::new(Beta::euclidean());
        config.omega = 0.0;
        assert!(solve(&obj, &x0, &config).is_err());

        let config = LandingConfig::new(Beta::euclidean());
        let wrong = seeded_point(4, 2, 410);
        assert!(solve(&obj, &wrong, &config).is_err());
    }

    #[test]
    fn oversized_fixed_step_halves_instead_of_breaking_down() {
        // A huge step would overshoot through a rank-deficient iterate; the
        // safeguard halves it for the iteration instead of failing.
        let obj = Objective::<f64>::zero(1, 1);
        let x0 = scalar_point(2.0);
        let mut config = LandingConfig::new(Beta::euclidean());
        config.step_policy = StepPolicy::Fixed { eta: Some(1.0 / 3.0) };
        config.max_iters = 500;
        let result = solve(&obj, &x0, &config).unwrap();
        // η = 1/3 maps 2 exactly onto 0; one halving makes the step viable.
        assert_eq!(result.status, LandingStatus::Converged);
        assert!(result.trace[0].eta < 1.0 / 3.0);
    }
}
