//! Representations of finitely presented groups and the constructions on
//! them: direct sum, tensor, dual, character twists, symmetric powers,
//! metabelian builders, characters and irreducibility.

mod irreducibility;
mod metabelian;
mod sl;

pub use irreducibility::{subspace_is_invariant, Irreducibility};
pub use metabelian::{
    build_metabelian, jordan_block, metabelian_normal_form, metabelian_sl,
    pascal_conjugator, solve_metabelian_cocycles,
};
pub use sl::{adjoint_on_sl, sl_basis, sl_coords, sl_dim, sl_from_coords};

use crate::linalg::Matrix;
use crate::numbers::CyclotomicNumber;
use crate::words::{Presentation, Word};

#[derive(Debug, Clone, thiserror::Error)]
pub enum RepError {
    #[error("relator {relator} does not map to the identity")]
    RelationViolated { relator: usize, defect: Matrix },
    #[error("generator {generator} has determinant {found}, expected {expected}")]
    DeterminantMismatch {
        generator: usize,
        found: String,
        expected: String,
    },
    #[error("representations live over different presentations")]
    PresentationMismatch,
    #[error("operation requires a rank-2 representation")]
    RankNotTwo,
    #[error("presentation has no abelianization data")]
    MissingAbelianization,
    #[error("cocycle condition fails on relator {relator}")]
    CocycleConditionViolated { relator: usize },
    #[error("lambda^{n} differs from alpha")]
    RootMismatch { n: usize },
    #[error("representation is not irreducible")]
    NotIrreducible,
    #[error("matrix has nonzero trace")]
    NonzeroTrace,
    #[error("images must be square matrices of equal size")]
    BadImageShape,
}

impl PartialEq for RepError {
    fn eq(&self, other: &Self) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(other)
    }
}

/// A verified homomorphism into GL_n over the context field.
///
/// Every image has determinant `determinant_target^phi(g)`; for SL_n the
/// target is 1 and no abelianization is needed. Construction checks all
/// relators, so a value of this type is a homomorphism by fiat.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    presentation: Presentation,
    rank: usize,
    images: Vec<Matrix>,
    inverses: Vec<Matrix>,
    determinant_target: CyclotomicNumber,
}

impl Representation {
    /// An SL_n representation: verifies relators and unit determinants.
    pub fn new(presentation: &Presentation, images: Vec<Matrix>) -> Result<Self, RepError> {
        Self::with_determinant(presentation, images, CyclotomicNumber::int(1))
    }

    /// A GL_n representation whose determinant character is
    /// `target^phi(g)` on each generator.
    pub fn with_determinant(
        presentation: &Presentation,
        images: Vec<Matrix>,
        target: CyclotomicNumber,
    ) -> Result<Self, RepError> {
        assert_eq!(
            images.len(),
            presentation.generator_count(),
            "one image per generator"
        );
        let rank = images.first().map_or(0, Matrix::rows);
        if images
            .iter()
            .any(|m| !m.is_square() || m.rows() != rank)
        {
            return Err(RepError::BadImageShape);
        }
        let target_is_one = target.is_one();
        for (i, m) in images.iter().enumerate() {
            let det = m.det();
            let expected = if target_is_one {
                CyclotomicNumber::int(1)
            } else {
                let phi = presentation
                    .abelianize(&Word::generator(i))
                    .map_err(|_| RepError::MissingAbelianization)?;
                target.pow(phi)
            };
            if det != expected {
                return Err(RepError::DeterminantMismatch {
                    generator: i,
                    found: det.to_string(),
                    expected: expected.to_string(),
                });
            }
        }
        let inverses: Vec<Matrix> = images
            .iter()
            .map(|m| m.inverse().expect("nonzero determinant"))
            .collect();
        let rep = Representation {
            presentation: presentation.clone(),
            rank,
            images,
            inverses,
            determinant_target: target,
        };
        for (i, r) in presentation.relators().iter().enumerate() {
            let value = rep.evaluate(r);
            if !value.is_identity() {
                return Err(RepError::RelationViolated {
                    relator: i,
                    defect: value,
                });
            }
        }
        Ok(rep)
    }

    /// The trivial rank-d representation.
    pub fn trivial(presentation: &Presentation, d: usize) -> Self {
        Self::new(
            presentation,
            vec![Matrix::identity(d); presentation.generator_count()],
        )
        .expect("trivial representation always verifies")
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &Matrix {
        &self.images[generator]
    }

    pub fn determinant_target(&self) -> &CyclotomicNumber {
        &self.determinant_target
    }

    /// Product of generator images along a word.
    pub fn evaluate(&self, w: &Word) -> Matrix {
        let mut acc = Matrix::identity(self.rank);
        for &(g, s) in w.letters() {
            let m = if s > 0 { &self.images[g] } else { &self.inverses[g] };
            acc = &acc * m;
        }
        acc
    }

    pub fn trace_of(&self, w: &Word) -> CyclotomicNumber {
        self.evaluate(w).trace()
    }

    fn same_presentation(&self, other: &Self) -> Result<(), RepError> {
        if self.presentation == other.presentation {
            Ok(())
        } else {
            Err(RepError::PresentationMismatch)
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        self.same_presentation(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Self::with_determinant(
            &self.presentation,
            images,
            &self.determinant_target * &other.determinant_target,
        )
    }

    /// Kronecker-product tensor representation.
    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        self.same_presentation(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        let target = self.determinant_target.pow(other.rank as i64)
            * other.determinant_target.pow(self.rank as i64);
        Self::with_determinant(&self.presentation, images, target)
    }

    /// The dual (contragredient) representation, g -> transpose(g)^-1.
    pub fn dual(&self) -> Self {
        let images = self.inverses.iter().map(Matrix::transpose).collect();
        Self::with_determinant(
            &self.presentation,
            images,
            self.determinant_target
                .inverse()
                .expect("determinant target is nonzero"),
        )
        .expect("dual of a homomorphism is a homomorphism")
    }

    /// Conjugate representation g -> S g S^-1.
    pub fn conjugate(&self, s: &Matrix) -> Self {
        let s_inv = s.inverse().expect("conjugator must be invertible");
        let images = self.images.iter().map(|m| &(s * m) * &s_inv).collect();
        Self::with_determinant(&self.presentation, images, self.determinant_target.clone())
            .expect("conjugation preserves relations")
    }

    /// Multiply every image by lambda^(weight * phi(g)).
    ///
    /// This realizes the one-dimensional character twists used to deform
    /// block-diagonal representations.
    pub fn twist_by_character(
        &self,
        lambda: &CyclotomicNumber,
        weight: i64,
    ) -> Result<Self, RepError> {
        assert!(!lambda.is_zero(), "twist by zero");
        if weight == 0 {
            return Ok(self.clone());
        }
        if !self.presentation.has_abelianization() {
            return Err(RepError::MissingAbelianization);
        }
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let phi = self
                    .presentation
                    .abelianize(&Word::generator(i))
                    .expect("abelianization present");
                m.scale(&lambda.pow(weight * phi))
            })
            .collect();
        let target = &self.determinant_target * &lambda.pow(weight * self.rank as i64);
        Self::with_determinant(&self.presentation, images, target)
    }

    /// The rank-n symmetric-power representation of a rank-2 input,
    /// acting on degree-(n-1) homogeneous polynomials in two variables
    /// with the monomial basis in degree-descending order.
    pub fn sym_power(&self, n: usize) -> Result<Self, RepError> {
        if self.rank != 2 {
            return Err(RepError::RankNotTwo);
        }
        assert!(n >= 1, "symmetric power rank must be at least 1");
        let m = n - 1;
        let images = self.images.iter().map(|a| sym_power_matrix(a, m)).collect();
        let e = (m * (m + 1) / 2) as i64;
        Self::with_determinant(&self.presentation, images, self.determinant_target.pow(e))
    }

    /// Matrix of X -> rho(w) X rho(w)^-1 on sl(n) in the fixed basis.
    pub fn adjoint_module_action(&self, w: &Word) -> Matrix {
        adjoint_on_sl(&self.evaluate(w))
    }

    /// Exact traces over a list of words.
    pub fn character_of(&self, words: &[Word]) -> Character {
        Character {
            base_words: words.to_vec(),
            values: words.iter().map(|w| self.trace_of(w)).collect(),
        }
    }

    /// Burnside-style irreducibility test with certificates; see
    /// [`Irreducibility`].
    pub fn is_irreducible(&self) -> Irreducibility {
        irreducibility::decide(self)
    }
}

/// Binomial coefficient as a field element.
fn binomial(n: usize, k: usize) -> CyclotomicNumber {
    if k > n {
        return CyclotomicNumber::int(0);
    }
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..k.min(n - k) {
        num *= (n - i) as i64;
        den *= (i + 1) as i64;
    }
    CyclotomicNumber::int(num / den)
}

/// Action of a 2x2 matrix on binary forms of degree m, basis
/// u^m, u^(m-1) v, ..., v^m.
fn sym_power_matrix(a: &Matrix, m: usize) -> Matrix {
    let n = m + 1;
    let (a11, a21) = (a[(0, 0)].clone(), a[(1, 0)].clone());
    let (a12, a22) = (a[(0, 1)].clone(), a[(1, 1)].clone());
    let mut out = Matrix::zeros(n, n);
    for j in 0..n {
        // image of u^(m-j) v^j = (a11 u + a21 v)^(m-j) (a12 u + a22 v)^j
        for p in 0..=(m - j) {
            for q in 0..=j {
                let coeff = binomial(m - j, p)
                    * binomial(j, q)
                    * a11.pow((m - j - p) as i64)
                    * a21.pow(p as i64)
                    * a12.pow((j - q) as i64)
                    * a22.pow(q as i64);
                out[(p + q, j)] += &coeff;
            }
        }
    }
    out
}

/// Trace coordinates of a representation over a chosen word list.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    base_words: Vec<Word>,
    values: Vec<CyclotomicNumber>,
}

impl Character {
    pub fn base_words(&self) -> &[Word] {
        &self.base_words
    }

    pub fn values(&self) -> &[CyclotomicNumber] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &CyclotomicNumber {
        &self.values[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::CyclotomicNumber as Cyc;
    use crate::words::parse_presentation;

    fn trefoil() -> Presentation {
        parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;").unwrap()
    }

    fn dyck333() -> Presentation {
        parse_presentation("gens a,b; rel a^3, b^3, (a b)^3;").unwrap()
    }

    /// rho_0(a) = rho_0(b) = diag(omega, conj(omega)).
    fn dyck_rho0() -> Representation {
        let omega = Cyc::root_of_unity(3, 1);
        let a = Matrix::diagonal(&[omega.clone(), omega.conj()]);
        Representation::new(&dyck333(), vec![a.clone(), a]).unwrap()
    }

    /// The standard irreducible family on the trefoil.
    fn trefoil_alpha(s: &Cyc) -> Result<Representation, RepError> {
        let i = Cyc::root_of_unity(12, 3);
        let eta = Cyc::root_of_unity(12, 2);
        let x = Matrix::from_rows(vec![
            vec![i.clone(), Cyc::int(0)],
            vec![s.clone(), -&i],
        ]);
        let y = Matrix::from_rows(vec![
            vec![eta.clone(), eta.conj() - &eta],
            vec![Cyc::int(0), eta.conj()],
        ]);
        Representation::new(&trefoil(), vec![x, y])
    }

    #[test]
    fn dyck_rho0_verifies() {
        let r = dyck_rho0();
        assert_eq!(r.rank(), 2);
        // a^3 evaluates to the identity
        assert!(r.evaluate(&Word::generator(0).pow(3)).is_identity());
    }

    #[test]
    fn trefoil_family_verifies_for_all_s() {
        for s in [Cyc::int(0), Cyc::int(1), Cyc::int(-3)] {
            assert!(trefoil_alpha(&s).is_ok());
        }
        let two_i = Cyc::int(2) * Cyc::root_of_unity(12, 3);
        assert!(trefoil_alpha(&two_i).is_ok());
    }

    #[test]
    fn deliberate_violation_is_reported() {
        // x -> I, y -> diag(eta, conj(eta)) violates x^2 = y^3 because
        // eta^3 = -1
        let p = trefoil();
        let eta = Cyc::root_of_unity(12, 2);
        let bad = Representation::new(
            &p,
            vec![
                Matrix::identity(2),
                Matrix::diagonal(&[eta.clone(), eta.conj()]),
            ],
        );
        assert!(matches!(bad, Err(RepError::RelationViolated { relator: 0, .. })));
    }

    #[test]
    fn determinant_gate() {
        let p = parse_presentation("gens a; rel ;").unwrap();
        let bad = Representation::new(&p, vec![Matrix::from_int_rows(&[&[2, 0], &[0, 1]])]);
        assert!(matches!(bad, Err(RepError::DeterminantMismatch { .. })));
    }

    #[test]
    fn evaluate_identities() {
        let r = dyck_rho0();
        assert!(r.evaluate(&Word::identity()).is_identity());
        let ab = Word::generator(0).mul(&Word::generator(1));
        assert_eq!(r.evaluate(&ab), r.image(0) * r.image(1));
    }

    #[test]
    fn dual_is_an_involution() {
        let r = trefoil_alpha(&Cyc::int(1)).unwrap();
        assert_eq!(r.dual().dual(), r);
    }

    #[test]
    fn sum_and_tensor_characters() {
        let r1 = trefoil_alpha(&Cyc::int(1)).unwrap();
        let r2 = trefoil_alpha(&Cyc::int(0)).unwrap();
        let m = Word::generator(0).mul(&Word::generator(1).inverse());
        let words = [Word::generator(0), Word::generator(1), m];
        let sum = r1.direct_sum(&r2).unwrap();
        let tensor = r1.tensor(&r2).unwrap();
        for w in &words {
            assert_eq!(sum.trace_of(w), r1.trace_of(w) + r2.trace_of(w));
            assert_eq!(tensor.trace_of(w), r1.trace_of(w) * r2.trace_of(w));
        }
    }

    #[test]
    fn presentation_mismatch_detected() {
        let r1 = dyck_rho0();
        let r2 = trefoil_alpha(&Cyc::int(1)).unwrap();
        assert_eq!(
            r1.direct_sum(&r2).unwrap_err(),
            RepError::PresentationMismatch
        );
    }

    #[test]
    fn twist_builds_diagonal_blocks() {
        // twisting the pair of trivial rank-1 representations gives
        // diag(lambda^phi, lambda^-phi)
        let p = trefoil();
        let lambda = Cyc::root_of_unity(12, 1);
        let plus = Representation::trivial(&p, 1)
            .twist_by_character(&lambda, 1)
            .unwrap();
        let minus = Representation::trivial(&p, 1)
            .twist_by_character(&lambda, -1)
            .unwrap();
        let rho = plus.direct_sum(&minus).unwrap();
        assert!(rho.determinant_target().is_one());
        // phi(x) = 3
        assert_eq!(rho.image(0)[(0, 0)], lambda.pow(3));
        assert_eq!(rho.image(0)[(1, 1)], lambda.pow(-3));
        // weight 0 leaves the representation unchanged
        assert_eq!(plus.twist_by_character(&lambda, 0).unwrap(), plus);
    }

    #[test]
    fn block_twist_construction_has_unit_determinant() {
        // (lambda^(b phi) (x) alpha) (+) (lambda^(-a phi) (x) beta) lands
        // in SL_n when alpha and beta do
        let alpha = trefoil_alpha(&Cyc::int(1)).unwrap(); // a = 2
        let beta = Representation::trivial(&trefoil(), 1); // b = 1
        let lambda = Cyc::root_of_unity(24, 1);
        let left = alpha.twist_by_character(&lambda, 1).unwrap();
        let right = beta.twist_by_character(&lambda, -2).unwrap();
        let rho = left.direct_sum(&right).unwrap();
        assert!(rho.determinant_target().is_one());
        for m in rho.images() {
            assert!(m.det().is_one());
        }
    }

    #[test]
    fn sym_power_small_cases() {
        let r = trefoil_alpha(&Cyc::int(1)).unwrap();
        // n = 1 is trivial
        let r1 = r.sym_power(1).unwrap();
        assert!(r1.images().iter().all(Matrix::is_identity));
        // n = 2 equals the input in the chosen basis
        assert_eq!(r.sym_power(2).unwrap().images(), r.images());
        assert_eq!(
            Representation::trivial(&trefoil(), 3).sym_power(3).unwrap_err(),
            RepError::RankNotTwo
        );
    }

    #[test]
    fn sym_power_on_diagonal() {
        // oracle: action on u^2, uv, v^2 scales by l^2, 1, l^-2
        let p = parse_presentation("gens a; rel ;").unwrap();
        let l = Cyc::root_of_unity(12, 1);
        let r = Representation::new(
            &p,
            vec![Matrix::diagonal(&[l.clone(), l.inverse().unwrap()])],
        )
        .unwrap();
        let r3 = r.sym_power(3).unwrap();
        assert_eq!(
            r3.image(0),
            &Matrix::diagonal(&[l.pow(2), Cyc::int(1), l.pow(-2)])
        );
        // trace of the n-th symmetric power of diag(l, 1/l)
        for n in 1..=5usize {
            let rn = r.sym_power(n).unwrap();
            let mut expect = Cyc::int(0);
            for i in 0..n {
                expect += &l.pow(n as i64 - 1 - 2 * i as i64);
            }
            assert_eq!(rn.image(0).trace(), expect);
        }
    }

    #[test]
    fn adjoint_action_facts() {
        let r = dyck_rho0();
        assert!(r.adjoint_module_action(&Word::identity()).is_identity());
        // central image acts trivially on sl(n)
        let p = trefoil();
        let omega = Cyc::root_of_unity(3, 1);
        let central = Representation::new(
            &p,
            vec![
                Matrix::identity(3).scale(&omega.pow(3)),
                Matrix::identity(3).scale(&omega.pow(2)),
            ],
        )
        .unwrap();
        for g in 0..2 {
            assert!(central
                .adjoint_module_action(&Word::generator(g))
                .is_identity());
        }
        // diagonal rank-2 rep twisted by phi acts with eigenvalues
        // (l^2, l^-2, 1) on sl(2) for a word with phi = 1
        let l = Cyc::root_of_unity(24, 1);
        let plus = Representation::trivial(&p, 1)
            .twist_by_character(&l, 1)
            .unwrap();
        let minus = Representation::trivial(&p, 1)
            .twist_by_character(&l, -1)
            .unwrap();
        let rho = plus.direct_sum(&minus).unwrap();
        let m = Word::generator(0).mul(&Word::generator(1).inverse());
        let ad = rho.adjoint_module_action(&m);
        assert_eq!(
            ad,
            Matrix::diagonal(&[l.pow(2), l.pow(-2), Cyc::int(1)])
        );
    }

    #[test]
    fn character_conjugation_invariance() {
        let r = trefoil_alpha(&Cyc::int(1)).unwrap();
        let words = [
            Word::generator(0),
            Word::generator(1),
            Word::generator(0).mul(&Word::generator(1)),
        ];
        let mut rng = crate::util::SplitMix64::new(11);
        for _ in 0..5 {
            let s = crate::util::random_sl(2, &mut rng);
            let conj = r.conjugate(&s);
            assert_eq!(conj.character_of(&words), r.character_of(&words));
        }
    }

    #[test]
    fn dual_character_inverts_words() {
        let r = trefoil_alpha(&Cyc::int(1)).unwrap();
        let words = [
            Word::generator(0),
            Word::generator(1).inverse(),
            Word::generator(0).mul(&Word::generator(1)),
        ];
        let dual = r.dual();
        for w in &words {
            assert_eq!(dual.trace_of(w), r.trace_of(&w.inverse()));
        }
    }

    #[test]
    fn x3_of_z_style_traces() {
        // t(A) = (tr A, tr A^-1) for A = diag(1, omega, conj(omega)):
        // oracle gives (0, 0)
        let p = parse_presentation("gens a; rel ;").unwrap();
        let omega = Cyc::root_of_unity(3, 1);
        let a = Matrix::diagonal(&[Cyc::int(1), omega.clone(), omega.conj()]);
        let r = Representation::new(&p, vec![a]).unwrap();
        let words = [Word::generator(0), Word::generator(0).inverse()];
        let ch = r.character_of(&words);
        assert!(ch.value(0).is_zero());
        assert!(ch.value(1).is_zero());
    }
}
