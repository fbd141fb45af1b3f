//! Exact dense linear algebra over Q(zeta_N) and over K[t, t^-1].
//!
//! Rank, kernels and determinants use fraction-free (Bareiss-style)
//! elimination: every intermediate entry is a minor of the input, which
//! keeps coefficient growth under control for the desk-scale matrices
//! that representation varieties produce.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::numbers::{laurent_gcd, CyclotomicNumber, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense row-major matrix over the cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<CyclotomicNumber>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![CyclotomicNumber::int(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CyclotomicNumber::int(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CyclotomicNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CyclotomicNumber,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(diag: &[CyclotomicNumber]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Parse entries from integer literals, for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| CyclotomicNumber::int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[CyclotomicNumber] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> CyclotomicNumber {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = CyclotomicNumber::int(0);
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CyclotomicNumber::is_zero)
    }

    /// Flatten to a row-major vector.
    pub fn to_vec(&self) -> Vec<CyclotomicNumber> {
        self.entries.clone()
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn mul_vec(&self, v: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CyclotomicNumber::int(0);
                for j in 0..self.cols {
                    let t = &self[(i, j)] * &v[j];
                    acc += &t;
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; dimensions multiply.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            &self[(i, j)] * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Fraction-free forward elimination. Returns the echelon matrix, the
    /// pivot columns and the determinant sign correction.
    fn bareiss(&self) -> (Matrix, Vec<usize>, i8) {
        let mut m = self.clone();
        let mut prev = CyclotomicNumber::int(1);
        let mut pivots = vec![];
        let mut sign = 1i8;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            if pr != row {
                m.swap_rows(row, pr);
                sign = -sign;
            }
            for i in row + 1..m.rows {
                for j in col + 1..m.cols {
                    let num = &m[(row, col)] * &m[(i, j)] - &m[(i, col)] * &m[(row, j)];
                    m[(i, j)] = &num / &prev;
                }
                m[(i, col)] = CyclotomicNumber::int(0);
            }
            prev = m[(row, col)].clone();
            pivots.push(col);
            row += 1;
        }
        (m, pivots, sign)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (mut m, pivots, _) = self.bareiss();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let inv = m[(k, pc)].inverse().expect("pivot is nonzero");
            for j in pc..m.cols {
                m[(k, j)] = &m[(k, j)] * &inv;
            }
            for i in 0..k {
                if m[(i, pc)].is_zero() {
                    continue;
                }
                let f = m[(i, pc)].clone();
                for j in pc..m.cols {
                    let t = &f * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &t;
                }
            }
        }
        (m, pivots)
    }

    /// Basis of the exact null space, one vector per free column, in
    /// column order: deterministic output for regression tests.
    pub fn kernel_basis(&self) -> Vec<Vec<CyclotomicNumber>> {
        let (r, pivots) = self.rref();
        let mut basis = vec![];
        let mut pivot_of_col = vec![None; self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            pivot_of_col[pc] = Some(k);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![CyclotomicNumber::int(0); self.cols];
            v[free] = CyclotomicNumber::int(1);
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(k, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// One solution of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(
        &self,
        rhs: &[CyclotomicNumber],
    ) -> Result<Option<Vec<CyclotomicNumber>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} rows but rhs has {} entries",
                self.rows,
                rhs.len()
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // a pivot in the augmented column
        }
        let mut x = vec![CyclotomicNumber::int(0); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(k, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CyclotomicNumber::int(1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn det(&self) -> CyclotomicNumber {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return CyclotomicNumber::int(1);
        }
        let (m, pivots, sign) = self.bareiss();
        if pivots.len() < self.rows {
            return CyclotomicNumber::int(0);
        }
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Integer matrix power; negative exponents use the inverse.
    pub fn pow_int(&self, e: i64) -> Matrix {
        assert!(self.is_square());
        let base = if e < 0 {
            self.inverse().expect("negative power of a singular matrix")
        } else {
            self.clone()
        };
        let mut out = Matrix::identity(self.rows);
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Coefficients of the characteristic polynomial det(xI - M), low
    /// degree first, computed by the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<CyclotomicNumber> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![CyclotomicNumber::int(0); n + 1];
        coeffs[n] = CyclotomicNumber::int(1);
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -&(m.trace().div_checked(&CyclotomicNumber::int(k as i64)).unwrap());
            coeffs[n - k] = c.clone();
            for i in 0..n {
                m[(i, i)] += &c;
            }
        }
        coeffs
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CyclotomicNumber;
    fn index(&self, (i, j): (usize, usize)) -> &CyclotomicNumber {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CyclotomicNumber {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul<Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        self * &rhs
    }
}

impl Mul<&Matrix> for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        &self * rhs
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl Add for Matrix {
    type Output = Matrix;
    fn add(self, rhs: Matrix) -> Matrix {
        &self + &rhs
    }
}

impl Sub for Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Matrix) -> Matrix {
        &self - &rhs
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Matrix of Laurent polynomials: the carrier for twisted Fox matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Keep the selected columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> LaurentMatrix {
        LaurentMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Exact evaluation at a nonzero field element.
    pub fn eval(&self, x: &CyclotomicNumber) -> Result<Matrix, crate::numbers::NumberError> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].eval(x)?;
            }
        }
        Ok(out)
    }

    /// Fraction-free determinant over K[t, t^-1]; the Bareiss divisions
    /// are exact by Sylvester's identity.
    pub fn det(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.clone();
        let mut prev = LaurentPoly::one();
        let mut sign = 1i8;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&i| !m[(i, col)].is_zero()) else {
                return LaurentPoly::zero();
            };
            if pr != col {
                for k in 0..n {
                    let tmp = m[(pr, k)].clone();
                    m[(pr, k)] = m[(col, k)].clone();
                    m[(col, k)] = tmp;
                }
                sign = -sign;
            }
            for i in col + 1..n {
                for j in col + 1..n {
                    let num = &(&m[(col, col)] * &m[(i, j)]) - &(&m[(i, col)] * &m[(col, j)]);
                    m[(i, j)] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
                m[(i, col)] = LaurentPoly::zero();
            }
            prev = m[(col, col)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Normalized gcd of all size x size minors. Size 0 gives 1; if every
    /// minor vanishes the result is 0.
    pub fn minors_gcd(&self, size: usize) -> LaurentPoly {
        assert!(
            size <= self.rows.min(self.cols),
            "minor size exceeds matrix dimensions"
        );
        if size == 0 {
            return LaurentPoly::one();
        }
        let mut minors = vec![];
        for rows in combinations(self.rows, size) {
            for cols in combinations(self.cols, size) {
                let d = self.submatrix(&rows, &cols).det();
                if !d.is_zero() {
                    minors.push(d);
                }
            }
        }
        laurent_gcd(&minors)
    }
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All k-element ascending index subsets of 0..n.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut current = vec![];
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=n.saturating_sub(needed) {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::parse_laurent;
    use crate::numbers::CyclotomicNumber as Cyc;

    #[test]
    fn rank_of_identity() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn zero_dimensional_edges() {
        // cochain complexes with no relators produce 0 x n matrices
        let m = Matrix::zeros(0, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 4);
        let m = Matrix::zeros(4, 0);
        assert_eq!(m.rank(), 0);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn rank_nullity_random() {
        let mut rng = crate::util::SplitMix64::new(7);
        for _ in 0..40 {
            let r = 1 + (rng.next_u64() % 4) as usize;
            let c = 1 + (rng.next_u64() % 4) as usize;
            let m = Matrix::from_fn(r, c, |_, _| {
                Cyc::int((rng.next_u64() % 7) as i64 - 3)
            });
            assert_eq!(m.rank() + m.kernel_basis().len(), c);
            for v in m.kernel_basis() {
                assert!(m.mul_vec(&v).iter().all(Cyc::is_zero));
            }
        }
    }

    #[test]
    fn solve_reports_inconsistency() {
        let m = Matrix::zeros(2, 2);
        let rhs = vec![Cyc::int(1), Cyc::int(0)];
        assert_eq!(m.solve(&rhs).unwrap(), None);
        let id = Matrix::identity(2);
        assert_eq!(id.solve(&rhs).unwrap(), Some(rhs.clone()));
        assert!(id.solve(&[Cyc::int(1)]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), Cyc::int(1));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), Cyc::int(0));
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn char_poly_of_companion() {
        // x^2 - x - 1 for [[0,1],[1,1]]
        let m = Matrix::from_int_rows(&[&[0, 1], &[1, 1]]);
        let p = m.char_poly();
        assert_eq!(p, vec![Cyc::int(-1), Cyc::int(-1), Cyc::int(1)]);
    }

    #[test]
    fn kronecker_products() {
        let i2 = Matrix::identity(2);
        let i3 = Matrix::identity(3);
        assert_eq!(i2.kronecker(&i3), Matrix::identity(6));

        let lam = Cyc::root_of_unity(12, 1);
        let mu = Cyc::root_of_unity(12, 5);
        let a = Matrix::diagonal(&[lam.clone(), lam.inverse().unwrap()]);
        let b = Matrix::diagonal(&[mu.clone(), mu.inverse().unwrap()]);
        let k = a.kronecker(&b);
        let expect = Matrix::diagonal(&[
            &lam * &mu,
            &lam * &mu.inverse().unwrap(),
            &lam.inverse().unwrap() * &mu,
            &lam.inverse().unwrap() * &mu.inverse().unwrap(),
        ]);
        assert_eq!(k, expect);
        // trace multiplicativity on random integer matrices
        let mut rng = crate::util::SplitMix64::new(3);
        for _ in 0..10 {
            let a = Matrix::from_fn(2, 2, |_, _| Cyc::int((rng.next_u64() % 9) as i64 - 4));
            let b = Matrix::from_fn(3, 3, |_, _| Cyc::int((rng.next_u64() % 9) as i64 - 4));
            assert_eq!(a.kronecker(&b).trace(), a.trace() * b.trace());
        }
    }

    #[test]
    fn laurent_minors() {
        let t_minus_1 = parse_laurent("t - 1", 1).unwrap();
        let m = LaurentMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                t_minus_1.clone()
            } else {
                LaurentPoly::zero()
            }
        });
        assert_eq!(m.minors_gcd(1), t_minus_1.normalize());
        assert_eq!(m.minors_gcd(0), LaurentPoly::one());
        assert_eq!(m.minors_gcd(2), (&t_minus_1 * &t_minus_1).normalize());
    }

    #[test]
    fn minors_gcd_elementary_divisor_chain() {
        let p = |s: &str| parse_laurent(s, 1).unwrap();
        let m = LaurentMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) => p("t - 1"),
            (1, 1) => p("t^2 - 1"),
            (2, 2) => p("t^3 - 1"),
            (0, 1) => p("t - 1"),
            _ => LaurentPoly::zero(),
        });
        for k in 0..3 {
            let a = m.minors_gcd(k);
            let b = m.minors_gcd(k + 1);
            if !b.is_zero() {
                assert!(a.divides(&b), "E_{k} must divide E_{}", k + 1);
            }
        }
    }

    #[test]
    fn laurent_det_matches_eval() {
        // det commutes with evaluation at t = 2
        let p = |s: &str| parse_laurent(s, 12).unwrap();
        let m = LaurentMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) => p("t - 1"),
            (0, 1) => p("zeta(12)*t"),
            (0, 2) => p("1"),
            (1, 0) => p("t^-1"),
            (1, 1) => p("t + 1"),
            (1, 2) => p("0"),
            (2, 0) => p("2"),
            (2, 1) => p("t^2"),
            (2, 2) => p("t - zeta(12)"),
            _ => unreachable!(),
        });
        let two = Cyc::int(2);
        let d = m.det();
        assert_eq!(d.eval(&two).unwrap(), m.eval(&two).unwrap().det());
    }

    #[test]
    fn combinations_enumeration() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
