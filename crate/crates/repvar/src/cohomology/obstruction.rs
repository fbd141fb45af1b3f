//! Formal deformations by truncated power series and the obstruction to
//! extending them one order further.
//!
//! A deformation of order k perturbs each generator image to
//! `exp(t u_1 + ... + t^k u_k) rho(g)` over K[t]/(t^(k+1)). Extending to
//! order k+1 means choosing u_(k+1) killing the t^(k+1) defect of every
//! relator; the linearization of that system is exactly the cocycle
//! Jacobian, so solvability is the coboundary condition on the
//! obstruction class.

use crate::linalg::Matrix;
use crate::numbers::{CyclotomicNumber, Rational};
use crate::reps::{sl_from_coords, Representation};

use super::{cocycle_space, CohomologyError, ModuleSpec};

/// Truncated power-series matrix: coefficient of t^i at index i.
type PolyMatrix = Vec<Matrix>;

fn pm_constant(m: Matrix, trunc: usize) -> PolyMatrix {
    let n = m.rows();
    let mut out = vec![Matrix::zeros(n, n); trunc];
    out[0] = m;
    out
}

fn pm_mul(a: &PolyMatrix, b: &PolyMatrix, trunc: usize) -> PolyMatrix {
    let n = a[0].rows();
    let mut out = vec![Matrix::zeros(n, n); trunc];
    for (i, ai) in a.iter().enumerate().take(trunc) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= trunc {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Inverse of a series whose constant term is invertible.
fn pm_inverse(a: &PolyMatrix, trunc: usize) -> PolyMatrix {
    let n = a[0].rows();
    let c0_inv = a[0].inverse().expect("constant term must be invertible");
    // a = a0 (1 + x) with x of positive t-order; invert by the
    // geometric series
    let mut x = pm_mul(&pm_constant(c0_inv.clone(), trunc), a, trunc);
    x[0] = Matrix::zeros(n, n); // subtract the identity
    let mut geom = pm_constant(Matrix::identity(n), trunc);
    let mut power = pm_constant(Matrix::identity(n), trunc);
    for _ in 1..trunc {
        power = pm_mul(&power, &x, trunc);
        for (g, p) in geom.iter_mut().zip(&power) {
            *g = &*g - p;
        }
        // alternate signs by negating the accumulated power
        for p in power.iter_mut() {
            *p = -&*p;
        }
    }
    pm_mul(&geom, &pm_constant(c0_inv, trunc), trunc)
}

/// exp of a series with zero constant term: a finite sum here because
/// the argument is nilpotent modulo t^trunc.
fn pm_exp(arg: &PolyMatrix, trunc: usize) -> PolyMatrix {
    let n = arg[0].rows();
    debug_assert!(arg[0].is_zero(), "exp argument must vanish at t = 0");
    let mut out = pm_constant(Matrix::identity(n), trunc);
    let mut power = pm_constant(Matrix::identity(n), trunc);
    let mut factorial = Rational::one();
    for m in 1..trunc {
        power = pm_mul(&power, arg, trunc);
        factorial = &factorial * &Rational::from_int(m as i64);
        let inv = CyclotomicNumber::from_rational(1, factorial.inverse().unwrap());
        for (o, p) in out.iter_mut().zip(&power) {
            *o = &*o + &p.scale(&inv);
        }
    }
    out
}

/// A family exp(sum t^i u_i) rho that is a homomorphism modulo t^(k+1),
/// verified at construction.
#[derive(Debug, Clone)]
pub struct TruncatedDeformation {
    base: Representation,
    /// cochains[i] is u_(i+1): one trace-zero matrix per generator.
    cochains: Vec<Vec<Matrix>>,
}

impl TruncatedDeformation {
    pub fn new(
        base: Representation,
        cochains: Vec<Vec<Matrix>>,
    ) -> Result<Self, CohomologyError> {
        let order = cochains.len();
        let n = base.rank();
        for u in &cochains {
            let ok = u.len() == base.presentation().generator_count()
                && u.iter().all(|m| m.rows() == n && m.is_square() && m.trace().is_zero());
            if !ok {
                return Err(CohomologyError::InvalidTruncation { order });
            }
        }
        let d = TruncatedDeformation { base, cochains };
        // a homomorphism modulo t^(k+1): every relator evaluates to the
        // identity series
        let trunc = order + 1;
        for r in d.base.presentation().relators() {
            let value = d.evaluate_series(r, trunc);
            if !series_is_identity(&value) {
                return Err(CohomologyError::InvalidTruncation { order });
            }
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.cochains.len()
    }

    pub fn base(&self) -> &Representation {
        &self.base
    }

    pub fn cochains(&self) -> &[Vec<Matrix>] {
        &self.cochains
    }

    /// Append the next cochain, re-verifying the new order.
    pub fn extend(&self, next: Vec<Matrix>) -> Result<TruncatedDeformation, CohomologyError> {
        let mut cochains = self.cochains.clone();
        cochains.push(next);
        TruncatedDeformation::new(self.base.clone(), cochains)
    }

    /// The deformed image of one generator over K[t]/(t^trunc).
    fn generator_series(&self, g: usize, trunc: usize) -> PolyMatrix {
        let n = self.base.rank();
        let mut arg = vec![Matrix::zeros(n, n); trunc];
        for (i, u) in self.cochains.iter().enumerate() {
            if i + 1 < trunc {
                arg[i + 1] = u[g].clone();
            }
        }
        let exp = pm_exp(&arg, trunc);
        pm_mul(&exp, &pm_constant(self.base.image(g).clone(), trunc), trunc)
    }

    /// Evaluate a word over the truncated series ring.
    pub(crate) fn evaluate_series(&self, w: &crate::words::Word, trunc: usize) -> PolyMatrix {
        let n = self.base.rank();
        let mut acc = pm_constant(Matrix::identity(n), trunc);
        for &(g, s) in w.letters() {
            let m = self.generator_series(g, trunc);
            let m = if s > 0 { m } else { pm_inverse(&m, trunc) };
            acc = pm_mul(&acc, &m, trunc);
        }
        acc
    }
}

fn series_is_identity(s: &PolyMatrix) -> bool {
    s[0].is_identity() && s[1..].iter().all(Matrix::is_zero)
}

#[derive(Debug, Clone)]
pub enum ObstructionOutcome {
    /// A cochain u_(k+1) extending the deformation one order further.
    Extended { extension: Vec<Matrix> },
    /// The linear system has no solution; the t^(k+1) relator defects
    /// represent the obstruction class.
    Obstructed { defects: Vec<Matrix> },
}

impl ObstructionOutcome {
    pub fn is_extended(&self) -> bool {
        matches!(self, ObstructionOutcome::Extended { .. })
    }
}

/// Try to extend an order-k deformation to order k+1.
///
/// Evaluates every relator over `K[t]/(t^(k+2))`, collects the t^(k+1)
/// defects, and solves for u_(k+1) against the cocycle Jacobian.
pub fn obstruction_step(
    d: &TruncatedDeformation,
) -> Result<ObstructionOutcome, CohomologyError> {
    let k = d.order();
    let trunc = k + 2;
    let base = d.base();
    let n = base.rank();

    let mut defects = vec![];
    for r in base.presentation().relators() {
        let series = d.evaluate_series(r, trunc);
        debug_assert!(series_is_identity(&series[..trunc - 1].to_vec()));
        let defect = series[trunc - 1].clone();
        debug_assert!(defect.trace().is_zero(), "defect lies in sl(n)");
        defects.push(defect);
    }

    let space = cocycle_space(base, &ModuleSpec::AdjointSl)?;
    let rhs: Vec<CyclotomicNumber> = defects
        .iter()
        .flat_map(|m| crate::reps::sl_coords(m).into_iter().map(|c| -c))
        .collect();
    match space
        .relator_jacobian()
        .solve(&rhs)
        .expect("jacobian rows match defect vector")
    {
        Some(u) => {
            let d_sl = n * n - 1;
            let extension = (0..base.presentation().generator_count())
                .map(|g| sl_from_coords(n, &u[g * d_sl..(g + 1) * d_sl]))
                .collect();
            Ok(ObstructionOutcome::Extended { extension })
        }
        None => Ok(ObstructionOutcome::Obstructed { defects }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::CyclotomicNumber as Cyc;
    use crate::words::parse_presentation;

    fn dyck_rho0() -> Representation {
        let p = parse_presentation("gens a,b; rel a^3, b^3, (a b)^3;").unwrap();
        let omega = Cyc::root_of_unity(3, 1);
        let a = Matrix::diagonal(&[omega.clone(), omega.conj()]);
        Representation::new(&p, vec![a.clone(), a]).unwrap()
    }

    fn z1() -> Vec<Matrix> {
        vec![Matrix::zeros(2, 2), Matrix::from_int_rows(&[&[0, 1], &[0, 0]])]
    }

    fn z2() -> Vec<Matrix> {
        vec![Matrix::zeros(2, 2), Matrix::from_int_rows(&[&[0, 0], &[1, 0]])]
    }

    #[test]
    fn cocycles_are_order_one_deformations() {
        let rho = dyck_rho0();
        assert!(TruncatedDeformation::new(rho.clone(), vec![z1()]).is_ok());
        assert!(TruncatedDeformation::new(rho.clone(), vec![z2()]).is_ok());
        // non-cocycles are rejected
        let bad = vec![vec![
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            Matrix::zeros(2, 2),
        ]];
        assert_eq!(
            TruncatedDeformation::new(rho, bad).unwrap_err(),
            CohomologyError::InvalidTruncation { order: 1 }
        );
    }

    #[test]
    fn nilpotent_directions_integrate_exactly() {
        // (I + t z1) rho is an exact family; with nilpotent values the
        // exponential is the same thing, so [z1, 0] verifies at order 2
        let rho = dyck_rho0();
        let zero = vec![Matrix::zeros(2, 2); 2];
        assert!(TruncatedDeformation::new(rho, vec![z1(), zero]).is_ok());
    }

    #[test]
    fn pure_directions_extend() {
        let rho = dyck_rho0();
        for u1 in [z1(), z2()] {
            let d = TruncatedDeformation::new(rho.clone(), vec![u1]).unwrap();
            let outcome = obstruction_step(&d).unwrap();
            match outcome {
                ObstructionOutcome::Extended { extension } => {
                    assert!(d.extend(extension).is_ok(), "extension verifies");
                }
                ObstructionOutcome::Obstructed { .. } => panic!("should extend"),
            }
        }
    }

    #[test]
    fn mixed_direction_is_obstructed_at_order_two() {
        let rho = dyck_rho0();
        let mixed = vec![
            Matrix::zeros(2, 2),
            Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
        ];
        let d = TruncatedDeformation::new(rho, vec![mixed]).unwrap();
        let outcome = obstruction_step(&d).unwrap();
        match outcome {
            ObstructionOutcome::Obstructed { defects } => {
                assert!(defects.iter().any(|m| !m.is_zero()));
            }
            ObstructionOutcome::Extended { .. } => {
                panic!("mixed direction must be obstructed")
            }
        }
    }

    #[test]
    fn coboundary_directions_always_extend() {
        let rho = dyck_rho0();
        let b = super::super::coboundary_of(&rho, &Matrix::from_int_rows(&[&[0, 1], &[0, 0]]))
            .unwrap();
        let d = TruncatedDeformation::new(rho, vec![b]).unwrap();
        assert!(obstruction_step(&d).unwrap().is_extended());
    }
}
