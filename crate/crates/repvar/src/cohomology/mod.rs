//! Twisted group cohomology in degrees 0-2 from a presentation, the
//! regularity predicates, and formal-deformation obstructions.
//!
//! A cocycle z is determined by its values on generators; the relator
//! equations `sum_i action(dr/dx_i) z(x_i) = 0` obtained from Fox
//! derivatives cut out Z^1 as the kernel of one exact matrix, the
//! relator Jacobian. H^2 is computed from the presentation 2-complex and
//! reported as `h2_complex`: for aspherical presentations (knot
//! exteriors in particular) it agrees with group cohomology, and the
//! Euler-characteristic identity h2 = h1 - h0 for deficiency-one knot
//! presentations is the trusted cross-check.

mod obstruction;

pub use obstruction::{obstruction_step, ObstructionOutcome, TruncatedDeformation};

use crate::linalg::Matrix;
use crate::numbers::CyclotomicNumber;
use crate::reps::{
    adjoint_on_sl, jordan_block, sl_coords, sl_dim, RepError, Representation,
};
use crate::words::{fox_derivative, Presentation, Word};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CohomologyError {
    #[error("module action undefined: {0}")]
    ModuleActionUndefined(String),
    #[error("cochain data is not a deformation of order {order}")]
    InvalidTruncation { order: usize },
    #[error("coboundary direction must have trace zero")]
    NonzeroTrace,
    #[error("module lives over a different presentation")]
    PresentationMismatch,
}

/// Which coefficient module a cohomology computation runs over.
#[derive(Debug, Clone)]
pub enum ModuleSpec {
    /// sl(n) with the conjugation action of the base representation, in
    /// the fixed basis.
    AdjointSl,
    /// gl(n) (all n x n matrices, row-major coordinates) with the
    /// conjugation action.
    AdjointGl,
    /// K^d with a group action given by an auxiliary matrix
    /// representation over the same presentation.
    MatrixRep(Representation),
}

impl ModuleSpec {
    /// One-dimensional twist gamma -> lambda^phi(gamma).
    pub fn one_dim_twist(
        presentation: &Presentation,
        lambda: &CyclotomicNumber,
    ) -> Result<Self, RepError> {
        let rep = Representation::trivial(presentation, 1).twist_by_character(lambda, 1)?;
        Ok(ModuleSpec::MatrixRep(rep))
    }

    /// Hom-module M_{a,b} with X -> alpha(g) X beta(g)^-1, realized on
    /// row-major coordinates as alpha tensor beta-dual.
    pub fn hom_module(alpha: &Representation, beta: &Representation) -> Result<Self, RepError> {
        Ok(ModuleSpec::MatrixRep(alpha.tensor(&beta.dual())?))
    }

    /// The (alpha, J) torsion-module action of the metabelian theory on
    /// K^(n-1), in column convention.
    pub fn metabelian(
        presentation: &Presentation,
        alpha: &CyclotomicNumber,
        n: usize,
    ) -> Result<Self, RepError> {
        assert!(n >= 2);
        if !presentation.has_abelianization() {
            return Err(RepError::MissingAbelianization);
        }
        let step = jordan_block(n - 1).transpose().scale(alpha);
        let images = (0..presentation.generator_count())
            .map(|g| {
                let phi = presentation
                    .abelianize(&Word::generator(g))
                    .expect("abelianization present");
                step.pow_int(phi)
            })
            .collect();
        let target = alpha.pow(n as i64 - 1);
        Ok(ModuleSpec::MatrixRep(Representation::with_determinant(
            presentation,
            images,
            target,
        )?))
    }

    /// The matrices of the module action on the base representation's
    /// generators.
    fn realize(&self, base: &Representation) -> Result<GroupModule, CohomologyError> {
        match self {
            ModuleSpec::AdjointSl => {
                let images = base.images().iter().map(adjoint_on_sl).collect();
                Ok(GroupModule {
                    presentation: base.presentation().clone(),
                    dim: sl_dim(base.rank()),
                    images,
                    description: format!("sl({}) with the adjoint action", base.rank()),
                })
            }
            ModuleSpec::AdjointGl => {
                let n = base.rank();
                let images = base
                    .images()
                    .iter()
                    .map(|m| m.kronecker(&m.inverse().expect("invertible image").transpose()))
                    .collect();
                Ok(GroupModule {
                    presentation: base.presentation().clone(),
                    dim: n * n,
                    images,
                    description: format!("gl({n}) with the conjugation action"),
                })
            }
            ModuleSpec::MatrixRep(rep) => {
                if rep.presentation() != base.presentation() {
                    return Err(CohomologyError::PresentationMismatch);
                }
                Ok(GroupModule {
                    presentation: rep.presentation().clone(),
                    dim: rep.rank(),
                    images: rep.images().to_vec(),
                    description: format!("K^{} via a matrix representation", rep.rank()),
                })
            }
        }
    }
}

/// A concrete module: one invertible matrix per generator.
#[derive(Debug, Clone)]
pub struct GroupModule {
    presentation: Presentation,
    dim: usize,
    images: Vec<Matrix>,
    description: String,
}

impl GroupModule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Matrix of the action of a word.
    pub fn action_of_word(&self, w: &Word) -> Matrix {
        let mut acc = Matrix::identity(self.dim);
        for &(g, s) in w.letters() {
            let m = if s > 0 {
                self.images[g].clone()
            } else {
                self.images[g].inverse().expect("invertible action")
            };
            acc = &acc * &m;
        }
        acc
    }

    /// Linear extension of the action to a group-ring element.
    pub fn action_of_group_ring(&self, x: &crate::words::GroupRingElement) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (w, c) in x.terms() {
            acc = &acc + &self.action_of_word(w).scale(c);
        }
        acc
    }
}

/// The space Z^1 of cocycles for one module, cut out by the relator
/// Jacobian.
#[derive(Debug, Clone)]
pub struct CocycleSpace {
    module: GroupModule,
    relator_jacobian: Matrix,
    basis: Vec<Vec<CyclotomicNumber>>,
}

impl CocycleSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module.dim
    }

    pub fn generator_count(&self) -> usize {
        self.module.presentation.generator_count()
    }

    /// Basis vectors, each a concatenation of one module vector per
    /// generator, in reduced echelon order.
    pub fn basis(&self) -> &[Vec<CyclotomicNumber>] {
        &self.basis
    }

    pub fn relator_jacobian(&self) -> &Matrix {
        &self.relator_jacobian
    }

    pub fn module(&self) -> &GroupModule {
        &self.module
    }

    /// The generator block of a stacked cocycle vector.
    pub fn generator_block<'a>(
        &self,
        z: &'a [CyclotomicNumber],
        generator: usize,
    ) -> &'a [CyclotomicNumber] {
        let d = self.module.dim;
        &z[generator * d..(generator + 1) * d]
    }

    /// Exact membership: z is a cocycle iff the Jacobian kills it.
    pub fn contains(&self, z: &[CyclotomicNumber]) -> bool {
        assert_eq!(z.len(), self.generator_count() * self.module.dim);
        self.relator_jacobian
            .mul_vec(z)
            .iter()
            .all(CyclotomicNumber::is_zero)
    }

    /// Extend a cocycle from generator values to any word by
    /// z(uv) = z(u) + u z(v).
    pub fn evaluate_cocycle(
        &self,
        z: &[CyclotomicNumber],
        w: &Word,
    ) -> Vec<CyclotomicNumber> {
        let d = self.module.dim;
        let mut acc = vec![CyclotomicNumber::int(0); d];
        let mut prefix = Word::identity();
        for &(g, s) in w.letters() {
            let letter = Word::from_letters([(g, s)]);
            let value = if s > 0 {
                self.generator_block(z, g).to_vec()
            } else {
                // z(g^-1) = -g^-1 z(g)
                let inv = self.module.action_of_word(&letter);
                inv.mul_vec(self.generator_block(z, g))
                    .iter()
                    .map(|c| -c)
                    .collect()
            };
            let moved = self.module.action_of_word(&prefix).mul_vec(&value);
            for (a, m) in acc.iter_mut().zip(&moved) {
                *a += m;
            }
            prefix = prefix.mul(&letter);
        }
        acc
    }
}

/// Assemble the relator Jacobian of a module: block (j, i) is the action
/// of the Fox derivative of relator j with respect to generator i.
fn relator_jacobian(module: &GroupModule) -> Matrix {
    let d = module.dim;
    let g = module.presentation.generator_count();
    let relators = module.presentation.relators();
    let mut jac = Matrix::zeros(relators.len() * d, g * d);
    for (j, r) in relators.iter().enumerate() {
        for i in 0..g {
            let block = module.action_of_group_ring(&fox_derivative(r, i));
            for a in 0..d {
                for b in 0..d {
                    jac[(j * d + a, i * d + b)] = block[(a, b)].clone();
                }
            }
        }
    }
    jac
}

/// Exact basis and dimension of Z^1 for the given module.
pub fn cocycle_space(
    base: &Representation,
    spec: &ModuleSpec,
) -> Result<CocycleSpace, CohomologyError> {
    let module = spec.realize(base)?;
    let jac = relator_jacobian(&module);
    let basis = jac.kernel_basis();
    Ok(CocycleSpace {
        module,
        relator_jacobian: jac,
        basis,
    })
}

/// Dimensions of the cochain complex of the presentation 2-complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub h0: usize,
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
    /// H^2 of the presentation 2-complex; agrees with group cohomology
    /// for aspherical presentations.
    pub h2_complex: usize,
    pub module_dim: usize,
    pub module_description: String,
}

/// Full degree 0-2 dimension report for one module.
pub fn cohomology_dims(
    base: &Representation,
    spec: &ModuleSpec,
) -> Result<CohomologyReport, CohomologyError> {
    let module = spec.realize(base)?;
    let d = module.dim;
    let g = module.presentation.generator_count();
    let r = module.presentation.relators().len();

    // H^0: common kernel of (action(g) - 1)
    let mut stacked = Matrix::zeros(g * d, d);
    for (i, m) in module.images.iter().enumerate() {
        for a in 0..d {
            for b in 0..d {
                let mut e = m[(a, b)].clone();
                if a == b {
                    e -= &CyclotomicNumber::int(1);
                }
                stacked[(i * d + a, b)] = e;
            }
        }
    }
    let h0 = stacked.nullity();
    // independent route: B^1 is the image of the coboundary map
    debug_assert_eq!(stacked.rank(), d - h0);

    let jac = relator_jacobian(&module);
    let rank = jac.rank();
    let z1 = g * d - rank;
    let b1 = d - h0;
    assert!(z1 >= b1, "coboundaries are cocycles");
    let h1 = z1 - b1;
    let h2_complex = r * d - rank;

    Ok(CohomologyReport {
        h0,
        z1,
        b1,
        h1,
        h2_complex,
        module_dim: d,
        module_description: module.description,
    })
}

/// Smoothness criterion for a manifold group with k torus boundary
/// components: the representation is infinitesimally regular when
/// dim H^1 = k(n-1), and then it sits on a unique component of dimension
/// n^2 - 1 + k(n-1) - h0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub h1: usize,
    pub expected_h1: usize,
    pub predicted_component_dim: usize,
    pub report: CohomologyReport,
}

pub fn check_infinitesimal_regularity(
    base: &Representation,
    boundary_tori: usize,
) -> Result<RegularityVerdict, CohomologyError> {
    assert!(boundary_tori >= 1);
    let n = base.rank();
    let report = cohomology_dims(base, &ModuleSpec::AdjointSl)?;
    let expected = boundary_tori * (n - 1);
    Ok(RegularityVerdict {
        regular: report.h1 == expected,
        h1: report.h1,
        expected_h1: expected,
        predicted_component_dim: n * n - 1 + expected - report.h0,
        report,
    })
}

/// The principal derivation u(g) = X - Ad_rho(g) X attached to a
/// trace-zero matrix, as values on the generators.
pub fn coboundary_of(
    base: &Representation,
    x: &Matrix,
) -> Result<Vec<Matrix>, CohomologyError> {
    if !x.trace().is_zero() {
        return Err(CohomologyError::NonzeroTrace);
    }
    Ok(base
        .images()
        .iter()
        .map(|m| {
            let conj = &(m * x) * &m.inverse().expect("invertible image");
            x - &conj
        })
        .collect())
}

/// Concatenated module coordinates of an sl(n)-valued generator
/// assignment, matching the cocycle-space layout for `AdjointSl`.
pub fn sl_assignment_coords(assignment: &[Matrix]) -> Vec<CyclotomicNumber> {
    assignment.iter().flat_map(sl_coords).collect()
}

/// Upper bound bookkeeping for dim_rho R vs dim Z^1: a strict gap between
/// a known local dimension and the cocycle dimension is evidence of a
/// singular point or a non-reduced scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentGapReport {
    pub z1: usize,
    pub known_local_dim: Option<usize>,
    pub gap: Option<usize>,
    /// True when the supplied local dimension is strictly below dim Z^1.
    pub strict: bool,
    /// dim Z^1; when the point is regular this is its component
    /// dimension.
    pub component_dim_if_regular: usize,
}

pub fn tangent_gap_report(
    base: &Representation,
    known_local_dim: Option<usize>,
) -> Result<TangentGapReport, CohomologyError> {
    let report = cohomology_dims(base, &ModuleSpec::AdjointSl)?;
    let z1 = report.z1;
    let gap = known_local_dim.map(|d| z1.saturating_sub(d));
    Ok(TangentGapReport {
        z1,
        known_local_dim,
        gap,
        strict: gap.is_some_and(|g| g > 0),
        component_dim_if_regular: z1,
    })
}
