//! Reducible metabelian representations built from cocycles valued in a
//! torsion module with Jordan-block action.
//!
//! The module is K^(n-1) with t^k acting on row vectors by
//! `a -> alpha^k a J^k` where J = I + N is the upper unipotent Jordan
//! block. A generator assignment z: generators -> K^(n-1) extends to the
//! whole group through the cocycle rule
//! `z(g h) = z(g) + alpha^phi(g) z(h) J^phi(g)`, and it defines a GL_n
//! homomorphism in block form exactly when z vanishes on the relators.

use crate::linalg::Matrix;
use crate::numbers::CyclotomicNumber;
use crate::words::{fox_derivative, Presentation, Word};

use super::{RepError, Representation};

/// One row vector per generator.
pub type CocycleAssignment = Vec<Vec<CyclotomicNumber>>;

/// The upper Jordan block J = I + N of the given size.
pub fn jordan_block(size: usize) -> Matrix {
    let mut j = Matrix::identity(size);
    for i in 0..size.saturating_sub(1) {
        j[(i, i + 1)] = CyclotomicNumber::int(1);
    }
    j
}

/// The involution P with P J P^-1 = J^-1: entries
/// p_ij = (-1)^j * binomial(j, i) in 1-based indices.
pub fn pascal_conjugator(size: usize) -> Matrix {
    Matrix::from_fn(size, size, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        CyclotomicNumber::int(sign) * super::binomial(j, i)
    })
}

/// Value of the extended cocycle on a word.
pub fn evaluate_cocycle(
    presentation: &Presentation,
    alpha: &CyclotomicNumber,
    z: &CocycleAssignment,
    w: &Word,
) -> Result<Vec<CyclotomicNumber>, RepError> {
    let size = z.first().map_or(0, Vec::len);
    let jordan = jordan_block(size);
    let mut acc = vec![CyclotomicNumber::int(0); size];
    let mut phi_prefix = 0i64;
    for &(g, s) in w.letters() {
        let phi_g = presentation
            .abelianize(&Word::generator(g))
            .map_err(|_| RepError::MissingAbelianization)?;
        // z(g^-1) = -alpha^-phi(g) z(g) J^-phi(g)
        let (zg, phi_letter) = if s > 0 {
            (z[g].clone(), phi_g)
        } else {
            let v = row_action(&z[g], alpha, &jordan, -phi_g);
            (v.iter().map(|c| -c).collect(), -phi_g)
        };
        let moved = row_action(&zg, alpha, &jordan, phi_prefix);
        for (a, m) in acc.iter_mut().zip(&moved) {
            *a += &m.clone();
        }
        phi_prefix += phi_letter;
    }
    Ok(acc)
}

/// a -> alpha^k a J^k on row vectors.
fn row_action(
    a: &[CyclotomicNumber],
    alpha: &CyclotomicNumber,
    jordan: &Matrix,
    k: i64,
) -> Vec<CyclotomicNumber> {
    let jk = jordan.pow_int(k);
    let scale = alpha.pow(k);
    // row * matrix = transpose action
    let col = jk.transpose().mul_vec(a);
    col.iter().map(|c| c * &scale).collect()
}

/// The block-form GL_n representation attached to a cocycle: on each
/// generator,
///
/// ```text
/// ( 1  z(g) ) ( alpha^phi(g)      0       )
/// ( 0   I   ) (      0       J^-phi(g)    )
/// ```
///
/// Fails with `CocycleConditionViolated` when z does not vanish on a
/// relator and `MissingAbelianization` without phi.
pub fn build_metabelian(
    presentation: &Presentation,
    alpha: &CyclotomicNumber,
    n: usize,
    z: &CocycleAssignment,
) -> Result<Representation, RepError> {
    assert!(n >= 2, "metabelian representations need rank at least 2");
    assert_eq!(z.len(), presentation.generator_count());
    assert!(z.iter().all(|v| v.len() == n - 1));
    assert!(!alpha.is_zero());
    for (idx, r) in presentation.relators().iter().enumerate() {
        let v = evaluate_cocycle(presentation, alpha, z, r)?;
        if v.iter().any(|c| !c.is_zero()) {
            return Err(RepError::CocycleConditionViolated { relator: idx });
        }
    }
    let jordan = jordan_block(n - 1);
    let mut images = vec![];
    for (g, zg) in z.iter().enumerate() {
        let phi = presentation
            .abelianize(&Word::generator(g))
            .map_err(|_| RepError::MissingAbelianization)?;
        let j_neg = jordan.pow_int(-phi);
        let mut m = Matrix::zeros(n, n);
        m[(0, 0)] = alpha.pow(phi);
        // top-right block: z(g) * J^-phi(g)
        let row = j_neg.transpose().mul_vec(zg);
        for (k, c) in row.into_iter().enumerate() {
            m[(0, k + 1)] = c;
        }
        for i in 0..n - 1 {
            for k in 0..n - 1 {
                m[(i + 1, k + 1)] = j_neg[(i, k)].clone();
            }
        }
        images.push(m);
    }
    Representation::with_determinant(presentation, images, alpha.clone())
}

/// Conjugate a block metabelian representation by diag(1, P) so that the
/// lower-right block becomes J^phi(g); the first-row tail then reads off
/// the cocycle of the alternate block convention (and in particular its
/// first entry is the negative of the original one).
pub fn metabelian_normal_form(rep: &Representation) -> Representation {
    let n = rep.rank();
    let p = pascal_conjugator(n - 1);
    let mut c = Matrix::identity(n);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            c[(i + 1, j + 1)] = p[(i, j)].clone();
        }
    }
    rep.conjugate(&c)
}

/// The SL_n normalization: scale the normal form by lambda^-phi(g) for a
/// supplied n-th root lambda of alpha.
pub fn metabelian_sl(
    presentation: &Presentation,
    alpha: &CyclotomicNumber,
    n: usize,
    z: &CocycleAssignment,
    lambda: &CyclotomicNumber,
) -> Result<Representation, RepError> {
    if &lambda.pow(n as i64) != alpha {
        return Err(RepError::RootMismatch { n });
    }
    let gl = metabelian_normal_form(&build_metabelian(presentation, alpha, n, z)?);
    let images = gl
        .images()
        .iter()
        .enumerate()
        .map(|(g, m)| {
            let phi = presentation
                .abelianize(&Word::generator(g))
                .expect("abelianization checked by the GL builder");
            m.scale(&lambda.pow(-phi))
        })
        .collect();
    Representation::new(presentation, images)
}

/// Basis of the space of generator assignments z with z(r) = 0 on every
/// relator, for the (alpha, J) module action. Computed from the
/// Fox-derivative linearization of the relators.
pub fn solve_metabelian_cocycles(
    presentation: &Presentation,
    alpha: &CyclotomicNumber,
    n: usize,
) -> Result<Vec<CocycleAssignment>, RepError> {
    assert!(n >= 2);
    assert!(!alpha.is_zero());
    if !presentation.has_abelianization() {
        return Err(RepError::MissingAbelianization);
    }
    let d = n - 1;
    let jordan = jordan_block(d);
    let g = presentation.generator_count();
    let r = presentation.relators().len();

    // row convention: z(rel) = sum_i z(x_i) * R_i with
    // R_i = (alpha J)^phi summed over the Fox derivative; transposing
    // turns it into a kernel problem in column convention.
    let mut jacobian = Matrix::zeros(r * d, g * d);
    for (j, relator) in presentation.relators().iter().enumerate() {
        for i in 0..g {
            let deriv = fox_derivative(relator, i);
            let mut block = Matrix::zeros(d, d);
            for (w, c) in deriv.terms() {
                let phi = presentation.abelianize(w).expect("phi present");
                let m = jordan.pow_int(phi).scale(&alpha.pow(phi));
                block = &block + &m.scale(c);
            }
            let block_t = block.transpose();
            for a in 0..d {
                for b in 0..d {
                    jacobian[(j * d + a, i * d + b)] = block_t[(a, b)].clone();
                }
            }
        }
    }
    let basis = jacobian.kernel_basis();
    Ok(basis
        .into_iter()
        .map(|v| (0..g).map(|i| v[i * d..(i + 1) * d].to_vec()).collect())
        .collect())
}
