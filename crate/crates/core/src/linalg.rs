//! Small dense linear-algebra helpers shared across modules.

use nalgebra::{DMatrix, DVector};

use crate::scalar::{real, Scalar};

/// Symmetric part `(M + Mᵀ)/2`. Exactly symmetric entrywise.
pub fn sym_part<T: Scalar>(m: &DMatrix<T>) -> DMatrix<T> {
    assert_eq!(m.nrows(), m.ncols(), "symmetric part needs a square matrix");
    let half = real::<T>(0.5);
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| (m[(i, j)] + m[(j, i)]) * half)
}

/// Skew-symmetric part `(M − Mᵀ)/2`. Exactly skew entrywise, zero diagonal.
pub fn skew_part<T: Scalar>(m: &DMatrix<T>) -> DMatrix<T> {
    assert_eq!(m.nrows(), m.ncols(), "skew part needs a square matrix");
    let half = real::<T>(0.5);
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        if i == j {
            T::zero()
        } else {
            (m[(i, j)] - m[(j, i)]) * half
        }
    })
}

/// Column-major vectorization of a matrix.
pub fn vec_col<T: Scalar>(m: &DMatrix<T>) -> DVector<T> {
    DVector::from_column_slice(m.as_slice())
}

/// Inverse of [`vec_col`]: reshape a length-`n·p` vector into an `n×p` matrix.
pub fn unvec_col<T: Scalar>(v: &DVector<T>, n: usize, p: usize) -> DMatrix<T> {
    assert_eq!(v.len(), n * p, "vector length does not match target shape");
    DMatrix::from_column_slice(n, p, v.as_slice())
}

/// Ratio of largest to smallest eigenvalue magnitude of a symmetric matrix,
/// used as a condition estimate. Returns `infinity` for a singular matrix.
pub fn symmetric_condition<T: Scalar>(m: &DMatrix<T>) -> T {
    let eigs = m.clone().symmetric_eigen().eigenvalues;
    let mut max = T::zero();
    let mut min = T::max_value().expect("scalar has a max value");
    for &e in eigs.iter() {
        let a = e.abs();
        max = max.max(a);
        min = min.min(a);
    }
    if min == T::zero() {
        T::max_value().expect("scalar has a max value")
    } else {
        max / min
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_and_skew_parts_recombine() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let s = sym_part(&m);
        let k = skew_part(&m);
        assert_eq!(s.clone() + k.clone(), m);
        assert_eq!(s[(0, 1)], s[(1, 0)]);
        assert_eq!(k[(0, 1)], -k[(1, 0)]);
        assert_eq!(k[(0, 0)], 0.0);
    }

    #[test]
    fn vec_roundtrip_is_column_major() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let v = vec_col(&m);
        assert_eq!(v.as_slice(), &[1.0, 3.0, 2.0, 4.0]);
        assert_eq!(unvec_col(&v, 2, 2), m);
    }
}
