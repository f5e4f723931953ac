//! Landing method for optimization under orthogonality constraints, with the
//! tangent term computed in a selectable ambient β-metric.
//!
//! The solver minimizes a smooth `f : R^{n×p} → R` subject to `XᵀX = I_p`
//! without retractions: each iterate moves along a tangent term that
//! decreases `f` on the current level set of `h(X) = XᵀX − I_p`, plus a
//! normal term that decreases the infeasibility `N(X) = ½‖h(X)‖²`. The
//! tangent term is the constrained Riemannian gradient in a one-parameter
//! family of ambient metrics indexed by `β > 0` (`β = 1` Euclidean,
//! `β = 1/2` canonical), so the same loop covers the classical choices and
//! everything in between.
//!
//! Module map:
//!
//! * [`constraint`] — the constraint map, infeasibility, layer tangent
//!   spaces, orthonormal complements.
//! * [`metric`] — the β-metric on the Stiefel manifold and its ambient
//!   extension, with three mutually validating evaluation routes.
//! * [`geometry`] — normal space, tangent projection, unconstrained and
//!   constrained gradients.
//! * [`landing`] — the iteration itself: step, merit, solve loop, trace.
//! * [`problems`] — trace-minimization and Procrustes test objectives with
//!   seeded instance generation.
//! * [`oracle`] — brute-force verifiers (finite differences, Gram-system
//!   solves, least-squares projection, dense eigendecomposition) used by the
//!   test suite.
//!
//! All numeric code is generic over the scalar type through [`Scalar`]
//! (`f32` or `f64`); the `*64`/`*32` aliases below pick a concrete width.
//!
//! ```
//! use stiefel_landing::{landing, problems, Beta64, LandingConfig64};
//!
//! let instance =
//!     problems::random_instance(problems::ProblemKind::Rayleigh, 12, 3, 7, 0.5).unwrap();
//! let config = LandingConfig64::new(Beta64::canonical());
//! let result = landing::solve(&instance.objective, &instance.x0, &config).unwrap();
//! assert_eq!(result.status, landing::LandingStatus::Converged);
//! assert!(result.final_record().h_norm <= 1e-8);
//! ```

pub mod constraint;
pub mod error;
pub mod geometry;
pub mod landing;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod problems;
pub mod scalar;

pub use constraint::AmbientPoint;
pub use error::{Error, Result};
pub use landing::{LandingConfig, LandingResult, LandingStatus, StepPolicy};
pub use metric::Beta;
pub use problems::{Objective, ProblemInstance, ProblemKind};
pub use scalar::Scalar;

/// Double-precision aliases, the default choice.
pub type AmbientPoint64 = AmbientPoint<f64>;
pub type Beta64 = Beta<f64>;
pub type Objective64 = Objective<f64>;
pub type LandingConfig64 = LandingConfig<f64>;
pub type LandingResult64 = LandingResult<f64>;

/// Single-precision aliases.
pub type AmbientPoint32 = AmbientPoint<f32>;
pub type Beta32 = Beta<f32>;
pub type Objective32 = Objective<f32>;
pub type LandingConfig32 = LandingConfig<f32>;
pub type LandingResult32 = LandingResult<f32>;
