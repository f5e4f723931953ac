//! Scalar abstraction so the whole crate works with either `f32` or `f64`.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the crate.
///
/// Combines nalgebra's `RealField` (factorizations, norms) with num-traits
/// conversions, plus the precision-dependent tolerances that the geometry
/// routines need.
pub trait Scalar: RealField + FromPrimitive + ToPrimitive + Copy {
    /// Tolerance for on-manifold checks of the form `‖XᵀX − I_p‖ ≤ tol`.
    const FEASIBILITY_TOL: Self;

    /// Default relative floor for `σ_min(X)/σ_max(X)` below which a point is
    /// treated as rank-deficient.
    const RANK_FLOOR: Self;

    /// Lossy view as `f64`, for error messages and serialization.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

/// Converts an `f64` constant into the working scalar type.
pub fn real<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 constant")
}

macro_rules! impl_scalar {
    ($t:ty, $feas:expr, $floor:expr) => {
        impl Scalar for $t {
            const FEASIBILITY_TOL: Self = $feas;
            const RANK_FLOOR: Self = $floor;
        }
    };
}

impl_scalar!(f32, 1e-4, 1e-6);
impl_scalar!(f64, 1e-10, 1e-10);

/// Relative error `|a − b| / max(1, |a|, |b|)`, the scale-invariant metric
/// used by every oracle comparison in this crate.
pub fn rel_err<T: Scalar>(a: T, b: T) -> T {
    let scale = T::one().max(a.abs()).max(b.abs());
    (a - b).abs() / scale
}

/// Matrix version of [`rel_err`]: `‖A − B‖ / max(1, ‖A‖, ‖B‖)` in the
/// Frobenius norm.
pub fn rel_err_mat<T: Scalar>(a: &nalgebra::DMatrix<T>, b: &nalgebra::DMatrix<T>) -> T {
    let scale = T::one().max(a.norm()).max(b.norm());
    (a - b).norm() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel_err_is_scale_invariant_above_one() {
        assert_eq!(rel_err(2.0f64, 2.0), 0.0);
        assert!((rel_err(100.0f64, 101.0) - 1.0 / 101.0).abs() < 1e-15);
        // Below unit scale the error is absolute.
        assert!((rel_err(0.0f64, 1e-3) - 1e-3).abs() < 1e-18);
    }

    #[test]
    fn f32_and_f64_constants_convert() {
        assert_eq!(real::<f32>(0.5), 0.5f32);
        assert_eq!(real::<f64>(0.5), 0.5f64);
        assert_eq!(1.5f32.as_f64(), 1.5f64);
    }
}
