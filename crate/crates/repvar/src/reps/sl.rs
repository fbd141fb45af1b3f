//! The fixed basis of sl(n) used everywhere in the crate.
//!
//! Off-diagonal units E_ij (i != j) in lexicographic order, followed by
//! the diagonals H_k = E_kk - E_(k+1)(k+1). Keeping one basis makes every
//! cohomology matrix and every witness reproducible entry for entry.

use crate::linalg::Matrix;
use crate::numbers::CyclotomicNumber;

/// Dimension of sl(n).
pub fn sl_dim(n: usize) -> usize {
    n * n - 1
}

/// The basis matrices of sl(n) in the fixed order.
pub fn sl_basis(n: usize) -> Vec<Matrix> {
    let mut out = vec![];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n);
                m[(i, j)] = CyclotomicNumber::int(1);
                out.push(m);
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m[(k, k)] = CyclotomicNumber::int(1);
        m[(k + 1, k + 1)] = CyclotomicNumber::int(-1);
        out.push(m);
    }
    out
}

/// Coordinates of a trace-zero matrix in the fixed basis.
///
/// Panics if the matrix is not square or has nonzero trace.
pub fn sl_coords(m: &Matrix) -> Vec<CyclotomicNumber> {
    let n = m.rows();
    assert!(m.is_square());
    assert!(m.trace().is_zero(), "sl coordinates of a matrix with trace != 0");
    let mut out = Vec::with_capacity(sl_dim(n));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m[(i, j)].clone());
            }
        }
    }
    // diagonal d_1..d_n with sum zero: the H_k coefficient is the partial
    // sum d_1 + ... + d_k
    let mut partial = CyclotomicNumber::int(0);
    for k in 0..n - 1 {
        partial += &m[(k, k)];
        out.push(partial.clone());
    }
    out
}

/// Rebuild a trace-zero matrix from coordinates in the fixed basis.
pub fn sl_from_coords(n: usize, coords: &[CyclotomicNumber]) -> Matrix {
    assert_eq!(coords.len(), sl_dim(n));
    let mut m = Matrix::zeros(n, n);
    let mut idx = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(i, j)] = coords[idx].clone();
                idx += 1;
            }
        }
    }
    for k in 0..n - 1 {
        let c = &coords[idx];
        m[(k, k)] += c;
        m[(k + 1, k + 1)] -= c;
        idx += 1;
    }
    m
}

/// Matrix of X -> M X M^-1 restricted to sl(n), in the fixed basis.
pub fn adjoint_on_sl(m: &Matrix) -> Matrix {
    let n = m.rows();
    let inv = m.inverse().expect("adjoint action of a singular matrix");
    let basis = sl_basis(n);
    let d = sl_dim(n);
    let mut out = Matrix::zeros(d, d);
    for (j, x) in basis.iter().enumerate() {
        let image = &(m * x) * &inv;
        for (i, c) in sl_coords(&image).into_iter().enumerate() {
            out[(i, j)] = c;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_round_trip() {
        for n in 2..=4 {
            for (i, b) in sl_basis(n).iter().enumerate() {
                let coords = sl_coords(b);
                for (j, c) in coords.iter().enumerate() {
                    assert_eq!(c.is_zero(), i != j);
                }
                assert_eq!(&sl_from_coords(n, &coords), b);
            }
        }
    }

    #[test]
    fn adjoint_of_identity() {
        assert!(adjoint_on_sl(&Matrix::identity(3)).is_identity());
        // central elements act trivially
        let zeta = CyclotomicNumber::root_of_unity(3, 1);
        let central = Matrix::identity(3).scale(&zeta);
        assert!(adjoint_on_sl(&central).is_identity());
    }

    #[test]
    fn adjoint_eigenvalues_on_diagonal() {
        // diag(l, 1/l) acts on (E12, E21, H) with eigenvalues (l^2, l^-2, 1)
        let l = CyclotomicNumber::root_of_unity(12, 1);
        let m = Matrix::diagonal(&[l.clone(), l.inverse().unwrap()]);
        let ad = adjoint_on_sl(&m);
        let expect = Matrix::diagonal(&[l.pow(2), l.pow(-2), CyclotomicNumber::int(1)]);
        assert_eq!(ad, expect);
    }
}
