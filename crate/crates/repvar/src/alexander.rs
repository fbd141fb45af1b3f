//! Twisted Alexander polynomials from Fox matrices over K[t, t^-1], and
//! the deformation-condition evaluators built on them.
//!
//! For a representation rho and the abelianization phi, the twisted Fox
//! matrix has block (j, i) equal to the Fox derivative dr_j/dx_i
//! evaluated under w -> rho(w) t^phi(w). The order ideals of the twisted
//! chain complex give Delta_0 (from the degree-zero homology, presented
//! by the stacked blocks rho(x_i) t^phi(x_i) - 1) and Delta_1. For a
//! deficiency-one presentation, deleting the column block of a generator
//! g whose block determinant is nonzero leaves a square matrix, and
//!
//! ```text
//! Delta_1 = det(reduced) * Delta_0 / det(rho(g) t^phi(g) - 1)
//! ```
//!
//! up to units. This is the torsion form of the order-ideal computation;
//! it is independent of the deleted column, which the plain gcd of
//! maximal minors of the reduced matrix alone is not.

use crate::linalg::LaurentMatrix;
use crate::numbers::{CyclotomicNumber, LaurentPoly, NumberError};
use crate::reps::{RepError, Representation};
use crate::words::{fox_derivative, Word};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlexanderError {
    #[error("presentation has no abelianization data")]
    MissingAbelianization,
    #[error("every generator block is singular; no deletable column")]
    NoDeletableColumn,
    #[error("order-ideal computation needs a deficiency-one presentation, found deficiency {0}")]
    DeficiencyNotOne(i64),
    #[error("representations must be over the same presentation")]
    PresentationMismatch,
    #[error("input representation is not certified irreducible")]
    NotIrreducible,
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// The Fox matrix of a presentation twisted by rho tensor t^phi.
#[derive(Debug, Clone)]
pub struct TwistedFoxMatrix {
    base: Representation,
    matrix: LaurentMatrix,
    generator_blocks: Vec<LaurentMatrix>,
}

impl TwistedFoxMatrix {
    pub fn base(&self) -> &Representation {
        &self.base
    }

    /// The full (r d) x (g d) matrix of twisted Fox derivatives.
    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    /// The d x d block rho(x_i) t^phi(x_i) - 1 of one generator.
    pub fn generator_block(&self, i: usize) -> &LaurentMatrix {
        &self.generator_blocks[i]
    }

    /// Columns with the block of one generator removed.
    pub fn delete_column_block(&self, generator: usize) -> LaurentMatrix {
        let d = self.base.rank();
        let cols: Vec<usize> = (0..self.matrix.cols())
            .filter(|c| c / d != generator)
            .collect();
        self.matrix.select_columns(&cols)
    }
}

/// Evaluate a group-ring element under w -> rho(w) t^phi(w), as a d x d
/// Laurent matrix.
fn twisted_value(
    rep: &Representation,
    x: &crate::words::GroupRingElement,
) -> Result<LaurentMatrix, AlexanderError> {
    let d = rep.rank();
    let mut out = LaurentMatrix::zeros(d, d);
    for (w, c) in x.terms() {
        let phi = rep
            .presentation()
            .abelianize(w)
            .map_err(|_| AlexanderError::MissingAbelianization)?;
        let m = rep.evaluate(w).scale(c);
        for a in 0..d {
            for b in 0..d {
                if m[(a, b)].is_zero() {
                    continue;
                }
                let term = LaurentPoly::monomial(phi, m[(a, b)].clone());
                out[(a, b)] = &out[(a, b)] + &term;
            }
        }
    }
    Ok(out)
}

/// Assemble the twisted Fox matrix of a representation.
pub fn twisted_fox_matrix(rep: &Representation) -> Result<TwistedFoxMatrix, AlexanderError> {
    let p = rep.presentation();
    if !p.has_abelianization() {
        return Err(AlexanderError::MissingAbelianization);
    }
    let d = rep.rank();
    let g = p.generator_count();
    let relators = p.relators();
    let mut matrix = LaurentMatrix::zeros(relators.len() * d, g * d);
    for (j, r) in relators.iter().enumerate() {
        for i in 0..g {
            let block = twisted_value(rep, &fox_derivative(r, i))?;
            for a in 0..d {
                for b in 0..d {
                    matrix[(j * d + a, i * d + b)] = block[(a, b)].clone();
                }
            }
        }
    }
    let mut generator_blocks = vec![];
    for i in 0..g {
        let deriv = crate::words::GroupRingElement::from_word(Word::generator(i));
        let mut block = twisted_value(rep, &deriv)?;
        for a in 0..d {
            block[(a, a)] = &block[(a, a)] - &LaurentPoly::one();
        }
        generator_blocks.push(block);
    }
    Ok(TwistedFoxMatrix {
        base: rep.clone(),
        matrix,
        generator_blocks,
    })
}

/// Normalized generators of the order ideals in degrees 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderData {
    pub delta0: LaurentPoly,
    pub delta1: LaurentPoly,
    /// Which generator's column block was deleted for Delta_1.
    pub column_deleted: usize,
}

/// Twisted Alexander polynomials of a representation over a
/// deficiency-one presentation.
///
/// The deleted column is the smallest-index generator whose twisted
/// block has nonzero determinant; the result does not depend on the
/// choice.
pub fn alexander_polynomials(rep: &Representation) -> Result<AlexanderData, AlexanderError> {
    let fox = twisted_fox_matrix(rep)?;
    let g = rep.presentation().generator_count();
    let column = (0..g)
        .find(|&i| !fox.generator_block(i).det().is_zero())
        .ok_or(AlexanderError::NoDeletableColumn)?;
    alexander_polynomials_with_column(&fox, column)
}

/// Same computation with an explicit deleted column; used to check
/// column independence.
pub fn alexander_polynomials_with_column(
    fox: &TwistedFoxMatrix,
    column: usize,
) -> Result<AlexanderData, AlexanderError> {
    let rep = fox.base();
    let p = rep.presentation();
    if p.deficiency() != 1 {
        return Err(AlexanderError::DeficiencyNotOne(p.deficiency()));
    }
    let d = rep.rank();
    let g = p.generator_count();
    let block_det = fox.generator_block(column).det();
    if block_det.is_zero() {
        return Err(AlexanderError::NoDeletableColumn);
    }

    // Delta_0: order ideal of the degree-zero module, presented by the
    // stacked generator blocks
    let mut stack = LaurentMatrix::zeros(g * d, d);
    for i in 0..g {
        let block = fox.generator_block(i);
        for a in 0..d {
            for b in 0..d {
                stack[(i * d + a, b)] = block[(a, b)].clone();
            }
        }
    }
    let delta0 = stack.minors_gcd(d);

    let reduced = fox.delete_column_block(column);
    debug_assert_eq!(reduced.rows(), reduced.cols());
    let numerator = reduced.det();
    let delta1 = if numerator.is_zero() {
        LaurentPoly::zero()
    } else {
        (&numerator * &delta0)
            .div_exact(&block_det)
            .expect("torsion quotient divides exactly")
            .normalize()
    };
    Ok(AlexanderData {
        delta0,
        delta1,
        column_deleted: column,
    })
}

/// Root data of the untwisted Alexander polynomial at lambda^2: the
/// necessary condition for deforming the diagonal representation
/// diag(lambda^phi, lambda^-phi) into irreducibles, with simplicity
/// (the sufficient-condition hypothesis) tested by the formal
/// derivative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationVerdict {
    pub delta1: LaurentPoly,
    pub value: CyclotomicNumber,
    pub is_root: bool,
    pub is_simple_root: bool,
}

pub fn deformation_condition_n2(
    presentation: &crate::words::Presentation,
    lambda: &CyclotomicNumber,
) -> Result<DeformationVerdict, AlexanderError> {
    assert!(!lambda.is_zero(), "lambda must be a unit");
    let trivial = Representation::trivial(presentation, 1);
    let data = alexander_polynomials(&trivial)?;
    let at = lambda.pow(2);
    let value = data.delta1.eval(&at)?;
    let is_root = value.is_zero();
    let derivative_value = data.delta1.derivative().eval(&at)?;
    Ok(DeformationVerdict {
        delta1: data.delta1,
        value,
        is_root,
        is_simple_root: is_root && !derivative_value.is_zero(),
    })
}

/// The two-sided evaluation of the block-twist deformation condition:
/// Delta_1 of alpha (x) beta-dual at lambda^n and of beta (x) alpha-dual
/// at lambda^-n, where n = rank alpha + rank beta, together with the
/// duality identity relating the two polynomials.
#[derive(Debug, Clone)]
pub struct GeneralDeformationVerdict {
    pub delta_plus: LaurentPoly,
    pub delta_minus: LaurentPoly,
    pub value_plus: CyclotomicNumber,
    pub value_minus: CyclotomicNumber,
    pub is_root_plus: bool,
    pub is_root_minus: bool,
    /// Delta_1^(a (x) b*) (t) associated to Delta_1^(b (x) a*) (t^-1).
    pub duality_holds: bool,
    /// The necessary condition for deformability holds on both sides.
    pub deformable_necessary: bool,
}

pub fn deformation_condition_general(
    alpha: &Representation,
    beta: &Representation,
    lambda: &CyclotomicNumber,
) -> Result<GeneralDeformationVerdict, AlexanderError> {
    assert!(!lambda.is_zero());
    if alpha.presentation() != beta.presentation() {
        return Err(AlexanderError::PresentationMismatch);
    }
    for r in [alpha, beta] {
        if r.is_irreducible().as_bool() != Some(true) {
            return Err(AlexanderError::NotIrreducible);
        }
    }
    let n = (alpha.rank() + beta.rank()) as i64;
    let hom_plus = alpha.tensor(&beta.dual())?;
    let hom_minus = beta.tensor(&alpha.dual())?;
    let delta_plus = alexander_polynomials(&hom_plus)?.delta1;
    let delta_minus = alexander_polynomials(&hom_minus)?.delta1;
    let value_plus = delta_plus.eval(&lambda.pow(n))?;
    let value_minus = delta_minus.eval(&lambda.pow(-n))?;
    let duality_holds = delta_plus.associated(&delta_minus.reversed());
    Ok(GeneralDeformationVerdict {
        is_root_plus: value_plus.is_zero(),
        is_root_minus: value_minus.is_zero(),
        deformable_necessary: value_plus.is_zero() && value_minus.is_zero(),
        delta_plus,
        delta_minus,
        value_plus,
        value_minus,
        duality_holds,
    })
}

/// Rank of the twisted Fox matrix specialized at t = t0; equals the rank
/// of the relator Jacobian of the module twisted by t0^phi.
pub fn specialized_rank(
    fox: &TwistedFoxMatrix,
    t0: &CyclotomicNumber,
) -> Result<usize, AlexanderError> {
    Ok(fox.matrix().eval(t0)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::numbers::{parse_laurent, CyclotomicNumber as Cyc};
    use crate::words::{parse_presentation, Presentation};

    fn trefoil() -> Presentation {
        parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;").unwrap()
    }

    fn figure8() -> Presentation {
        parse_presentation(
            "gens t,a,b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;",
        )
        .unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        parse_laurent(s, 24).unwrap()
    }

    #[test]
    fn trefoil_untwisted_fox_matrix() {
        // oracle by hand on x^2 y^-3: entries 1 + t^3 and -(t^4 + t^2 + 1)
        let rep = Representation::trivial(&trefoil(), 1);
        let fox = twisted_fox_matrix(&rep).unwrap();
        assert_eq!(fox.matrix().rows(), 1);
        assert_eq!(fox.matrix().cols(), 2);
        assert_eq!(fox.matrix()[(0, 0)], lp("1 + t^3"));
        assert_eq!(fox.matrix()[(0, 1)], lp("-(t^4 + t^2 + 1)"));
    }

    #[test]
    fn figure8_untwisted_fox_matrix() {
        // oracle by hand on the two relators
        let rep = Representation::trivial(&figure8(), 1);
        let fox = twisted_fox_matrix(&rep).unwrap();
        assert_eq!(fox.matrix().rows(), 2);
        assert_eq!(fox.matrix().cols(), 3);
        assert!(fox.matrix()[(0, 0)].is_zero());
        assert_eq!(fox.matrix()[(0, 1)], lp("t - 1"));
        assert_eq!(fox.matrix()[(0, 2)], lp("-1"));
        assert!(fox.matrix()[(1, 0)].is_zero());
        assert_eq!(fox.matrix()[(1, 1)], lp("-1"));
        assert_eq!(fox.matrix()[(1, 2)], lp("t - 2"));
    }

    #[test]
    fn specialization_at_one_recovers_the_jacobian() {
        let p = trefoil();
        let eta = Cyc::root_of_unity(12, 2);
        let rep = Representation::trivial(&p, 1)
            .twist_by_character(&eta, 1)
            .unwrap();
        let fox = twisted_fox_matrix(&rep).unwrap();
        let space = crate::cohomology::cocycle_space(
            &rep,
            &crate::cohomology::ModuleSpec::MatrixRep(rep.clone()),
        )
        .unwrap();
        assert_eq!(
            fox.matrix().eval(&Cyc::int(1)).unwrap(),
            *space.relator_jacobian()
        );
    }

    #[test]
    fn trefoil_alexander_polynomial() {
        let rep = Representation::trivial(&trefoil(), 1);
        let data = alexander_polynomials(&rep).unwrap();
        assert_eq!(data.delta1, lp("t^2 - t + 1"));
        assert_eq!(data.delta0, lp("t - 1"));
        assert_eq!(data.column_deleted, 0);
        // root fact: the polynomial vanishes at the primitive 6th root
        let eta = Cyc::root_of_unity(12, 2);
        assert!(data.delta1.eval(&eta).unwrap().is_zero());
        // knot polynomial symmetry
        assert!(data.delta1.associated(&data.delta1.reversed()));
    }

    #[test]
    fn figure8_alexander_polynomial() {
        let rep = Representation::trivial(&figure8(), 1);
        let data = alexander_polynomials(&rep).unwrap();
        assert_eq!(data.delta1, lp("t^2 - 3*t + 1"));
        // symmetry under t -> t^-1
        assert!(data.delta1.associated(&data.delta1.reversed()));
    }

    #[test]
    fn full_matrix_minor_gcd_agrees_for_the_trefoil() {
        // dual route: for the one-relator trefoil presentation, the gcd
        // of the 1 x 1 minors of the full Fox matrix is the Alexander
        // polynomial directly
        let rep = Representation::trivial(&trefoil(), 1);
        let fox = twisted_fox_matrix(&rep).unwrap();
        let via_minors = fox.matrix().minors_gcd(1);
        let via_order_ideal = alexander_polynomials(&rep).unwrap().delta1;
        assert!(via_minors.associated(&via_order_ideal));
    }

    #[test]
    fn unknot_like_presentation() {
        let p = parse_presentation("gens x; rel ; ab x=1;").unwrap();
        let rep = Representation::trivial(&p, 1);
        let data = alexander_polynomials(&rep).unwrap();
        assert_eq!(data.delta1, LaurentPoly::one());
    }

    #[test]
    fn column_deletion_independence() {
        // untwisted and alpha_1-twisted trefoil: both generator blocks
        // are nonsingular, so both deletions must agree up to units
        let p = trefoil();
        let i12 = Cyc::root_of_unity(12, 3);
        let eta = Cyc::root_of_unity(12, 2);
        let x = Matrix::from_rows(vec![
            vec![i12.clone(), Cyc::int(0)],
            vec![Cyc::int(1), -&i12],
        ]);
        let y = Matrix::from_rows(vec![
            vec![eta.clone(), eta.conj() - &eta],
            vec![Cyc::int(0), eta.conj()],
        ]);
        let alpha1 = Representation::new(&p, vec![x, y]).unwrap();
        for rep in [Representation::trivial(&p, 1), alpha1] {
            let fox = twisted_fox_matrix(&rep).unwrap();
            let deletable: Vec<usize> = (0..p.generator_count())
                .filter(|&i| !fox.generator_block(i).det().is_zero())
                .collect();
            assert!(deletable.len() >= 2);
            let results: Vec<_> = deletable
                .iter()
                .map(|&c| alexander_polynomials_with_column(&fox, c).unwrap())
                .collect();
            for w in results.windows(2) {
                assert!(w[0].delta1.associated(&w[1].delta1));
            }
        }
    }

    #[test]
    fn deficiency_gate() {
        // deficiency zero: the same commutator relator listed twice
        let p = parse_presentation("gens x,y; rel [x,y], [x,y]; ab x=1, y=1;").unwrap();
        let rep = Representation::trivial(&p, 1);
        assert_eq!(
            alexander_polynomials(&rep).unwrap_err(),
            AlexanderError::DeficiencyNotOne(0)
        );
    }

    #[test]
    fn trefoil_deformation_condition() {
        let p = trefoil();
        // lambda = zeta_12: lambda^2 = zeta_6 is a simple root
        let lambda = Cyc::root_of_unity(12, 1);
        let verdict = deformation_condition_n2(&p, &lambda).unwrap();
        assert!(verdict.is_root);
        assert!(verdict.is_simple_root);
        // lambda = 1: Delta(1) = 1, not a root
        let verdict = deformation_condition_n2(&p, &Cyc::int(1)).unwrap();
        assert!(!verdict.is_root);
        assert_eq!(verdict.value, Cyc::int(1));
    }

    #[test]
    fn rank_one_general_condition_reduces_to_untwisted() {
        let p = trefoil();
        let trivial = Representation::trivial(&p, 1);
        let lambda = Cyc::root_of_unity(12, 1);
        let general = deformation_condition_general(&trivial, &trivial, &lambda).unwrap();
        let untwisted = deformation_condition_n2(&p, &lambda).unwrap();
        assert!(general.delta_plus.associated(&untwisted.delta1));
        assert_eq!(general.is_root_plus, untwisted.is_root);
        assert!(general.duality_holds);
        assert!(general.deformable_necessary);
    }

    #[test]
    fn twisted_duality_for_an_irreducible() {
        // alpha_1 on the trefoil against the trivial rank-1 representation
        let p = trefoil();
        let i12 = Cyc::root_of_unity(12, 3);
        let eta = Cyc::root_of_unity(12, 2);
        let x = Matrix::from_rows(vec![
            vec![i12.clone(), Cyc::int(0)],
            vec![Cyc::int(1), -&i12],
        ]);
        let y = Matrix::from_rows(vec![
            vec![eta.clone(), eta.conj() - &eta],
            vec![Cyc::int(0), eta.conj()],
        ]);
        let alpha1 = Representation::new(&p, vec![x, y]).unwrap();
        let trivial = Representation::trivial(&p, 1);
        let verdict =
            deformation_condition_general(&alpha1, &trivial, &Cyc::root_of_unity(24, 1))
                .unwrap();
        assert!(verdict.duality_holds);

        // dual-representation duality on the same instance
        let d_plus = alexander_polynomials(&alpha1).unwrap().delta1;
        let d_dual = alexander_polynomials(&alpha1.dual()).unwrap().delta1;
        assert!(d_dual.associated(&d_plus.reversed()));
    }

    #[test]
    fn specialization_rank_consistency() {
        let p = trefoil();
        let rep = Representation::trivial(&p, 1);
        let fox = twisted_fox_matrix(&rep).unwrap();
        for t0 in [Cyc::int(2), Cyc::root_of_unity(12, 2), Cyc::int(-1)] {
            let twisted = Representation::trivial(&p, 1)
                .twist_by_character(&t0, 1)
                .unwrap();
            let space = crate::cohomology::cocycle_space(
                &twisted,
                &crate::cohomology::ModuleSpec::MatrixRep(twisted.clone()),
            )
            .unwrap();
            assert_eq!(
                specialized_rank(&fox, &t0).unwrap(),
                space.relator_jacobian().rank()
            );
        }
    }

    #[test]
    fn reducible_inputs_are_rejected() {
        let p = trefoil();
        let eta = Cyc::root_of_unity(12, 2);
        let diag = Representation::trivial(&p, 1)
            .twist_by_character(&eta, 1)
            .unwrap()
            .direct_sum(
                &Representation::trivial(&p, 1)
                    .twist_by_character(&eta, -1)
                    .unwrap(),
            )
            .unwrap();
        let trivial = Representation::trivial(&p, 1);
        assert_eq!(
            deformation_condition_general(&diag, &trivial, &Cyc::int(1)).unwrap_err(),
            AlexanderError::NotIrreducible
        );
    }
}
