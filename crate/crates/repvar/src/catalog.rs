//! A library of worked examples, each with its constructions and an
//! executable assertion suite: the trefoil and figure-eight knot groups,
//! the triangle groups D(3,3,3) and D(3,3,4), the Lubotzky-Magid group
//! with its non-reduced representation scheme, and torus-knot
//! presentations T(p,2).

use crate::alexander::{alexander_polynomials, deformation_condition_n2};
use crate::cohomology::{
    cocycle_space, cohomology_dims, obstruction_step, sl_assignment_coords, tangent_gap_report,
    ModuleSpec, TruncatedDeformation,
};
use crate::linalg::{LaurentMatrix, Matrix};
use crate::numbers::{CyclotomicNumber, LaurentPoly};
use crate::reps::{solve_metabelian_cocycles, Representation};
use crate::words::{parse_presentation, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
}

/// One named check inside an entry's assertion suite.
#[derive(Debug, Clone)]
pub struct AssertionResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(out: &mut Vec<AssertionResult>, name: &str, passed: bool, detail: impl Into<String>) {
    out.push(AssertionResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    });
}

/// A catalog entry: presentation, field context, and a runnable
/// assertion suite that re-derives the facts the entry is known for.
pub struct CatalogEntry {
    pub id: &'static str,
    pub summary: &'static str,
    pub field_order: u32,
    presentation: Presentation,
    runner: fn() -> Vec<AssertionResult>,
}

impl CatalogEntry {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn run(&self) -> Vec<AssertionResult> {
        (self.runner)()
    }
}

pub fn entry_ids() -> &'static [&'static str] {
    &[
        "trefoil",
        "figure8",
        "dyck333",
        "dyck334",
        "lubotzky_magid",
        "torus_knot_3_2",
        "torus_knot_5_2",
    ]
}

pub fn entry(id: &str) -> Result<CatalogEntry, CatalogError> {
    match id {
        "trefoil" => Ok(CatalogEntry {
            id: "trefoil",
            summary: "trefoil knot group: SL(2) family, Alexander data, SL(3) family",
            field_order: 12,
            presentation: trefoil_presentation(),
            runner: run_trefoil,
        }),
        "figure8" => Ok(CatalogEntry {
            id: "figure8",
            summary: "figure-eight knot group: Alexander data and the component hypersurface",
            field_order: 3,
            presentation: figure8_presentation(),
            runner: run_figure8,
        }),
        "dyck333" => Ok(CatalogEntry {
            id: "dyck333",
            summary: "triangle group D(3,3,3): cocycles, coboundaries, obstructions",
            field_order: 12,
            presentation: dyck333_presentation(),
            runner: run_dyck333,
        }),
        "dyck334" => Ok(CatalogEntry {
            id: "dyck334",
            summary: "triangle group D(3,3,4) and the pulled-back figure-eight components",
            field_order: 24,
            presentation: dyck334_presentation(),
            runner: run_dyck334,
        }),
        "lubotzky_magid" => Ok(CatalogEntry {
            id: "lubotzky_magid",
            summary: "a representation with non-reduced scheme structure",
            field_order: 12,
            presentation: lubotzky_magid_presentation(),
            runner: run_lubotzky_magid,
        }),
        "torus_knot_3_2" => Ok(CatalogEntry {
            id: "torus_knot_3_2",
            summary: "torus knot T(3,2): eigenvalue-pattern component count (experimental)",
            field_order: 12,
            presentation: torus_knot_p2_presentation(3),
            runner: || run_torus_knot(3),
        }),
        "torus_knot_5_2" => Ok(CatalogEntry {
            id: "torus_knot_5_2",
            summary: "torus knot T(5,2): eigenvalue-pattern component count (experimental)",
            field_order: 12,
            presentation: torus_knot_p2_presentation(5),
            runner: || run_torus_knot(5),
        }),
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

// ---------------------------------------------------------------------
// presentations
// ---------------------------------------------------------------------

pub fn trefoil_presentation() -> Presentation {
    parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;").unwrap()
}

pub fn figure8_presentation() -> Presentation {
    parse_presentation("gens t,a,b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;")
        .unwrap()
}

pub fn dyck333_presentation() -> Presentation {
    parse_presentation("gens a,b; rel a^3, b^3, (a b)^3;").unwrap()
}

pub fn dyck334_presentation() -> Presentation {
    parse_presentation("gens k,l; rel l^3, k^3, (k l)^4;").unwrap()
}

pub fn lubotzky_magid_presentation() -> Presentation {
    parse_presentation(
        "gens a,s,t1,t2; \
         rel a^6, s^2 = a^3, s a s^-1 = a^-1, [t1,t2], \
             s t1 s^-1 = t2, s t2 s^-1 = t1, \
             a t1 a^-1 = t2^-1, a t2 a^-1 = t1 t2^-1;",
    )
    .unwrap()
}

/// T(p,2) for odd p: one relator x^p = y^2 with phi(x) = 2, phi(y) = p.
pub fn torus_knot_p2_presentation(p: i64) -> Presentation {
    assert!(p >= 3 && p % 2 == 1, "T(p,2) needs odd p >= 3");
    parse_presentation(&format!("gens x,y; rel x^{p} = y^2; ab x=2, y={p};")).unwrap()
}

// ---------------------------------------------------------------------
// representations
// ---------------------------------------------------------------------

fn omega12() -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(12, 4)
}

fn eta12() -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(12, 2)
}

fn i12() -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(12, 3)
}

/// The standard SL(2) family on the trefoil: every irreducible SL(2)
/// representation is equivalent to exactly one member, and alpha_s is
/// irreducible iff s is neither 0 nor 2i.
pub fn trefoil_alpha(s: &CyclotomicNumber) -> Representation {
    let i = i12();
    let eta = eta12();
    let x = Matrix::from_rows(vec![
        vec![i.clone(), CyclotomicNumber::int(0)],
        vec![s.clone(), -&i],
    ]);
    let y = Matrix::from_rows(vec![
        vec![eta.clone(), eta.conj() - &eta],
        vec![CyclotomicNumber::int(0), eta.conj()],
    ]);
    Representation::new(&trefoil_presentation(), vec![x, y])
        .expect("alpha_s is a homomorphism for every s")
}

/// The central representation zeta^phi Id_n on the trefoil (zeta^n = 1).
pub fn trefoil_central(n: usize) -> Representation {
    let zeta = CyclotomicNumber::root_of_unity(n as u32, 1);
    let images = vec![
        Matrix::identity(n).scale(&zeta.pow(3)),
        Matrix::identity(n).scale(&zeta.pow(2)),
    ];
    Representation::new(&trefoil_presentation(), images).unwrap()
}

/// The diagonal representation diag(lambda^phi, lambda^-phi).
pub fn trefoil_diagonal(lambda: &CyclotomicNumber) -> Representation {
    let p = trefoil_presentation();
    let plus = Representation::trivial(&p, 1)
        .twist_by_character(lambda, 1)
        .unwrap();
    let minus = Representation::trivial(&p, 1)
        .twist_by_character(lambda, -1)
        .unwrap();
    plus.direct_sum(&minus).unwrap()
}

/// The two-parameter SL(3) family on the trefoil. Every (s, t) yields a
/// homomorphism; it is reducible exactly on the lines s = 0, t = 0 and
/// s + t = 2.
pub fn trefoil_rho_st(s: &CyclotomicNumber, t: &CyclotomicNumber) -> Representation {
    let omega = omega12();
    let one = CyclotomicNumber::int(1);
    let zero = CyclotomicNumber::int(0);
    let x = Matrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![s.clone(), -&one, zero.clone()],
        vec![t.clone(), zero.clone(), -&one],
    ]);
    let y = Matrix::from_rows(vec![
        vec![one.clone(), &omega - &one, omega.pow(2) - &one],
        vec![zero.clone(), omega.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), omega.pow(2)],
    ]);
    Representation::new(&trefoil_presentation(), vec![x, y])
        .expect("rho_(s,t) is a homomorphism for every (s, t)")
}

/// Reducibility locus of `trefoil_rho_st`.
pub fn trefoil_rho_st_reducible(s: &CyclotomicNumber, t: &CyclotomicNumber) -> bool {
    s.is_zero() || t.is_zero() || (s + t) == CyclotomicNumber::int(2)
}

/// rho_0 on D(3,3,3): both generators map to diag(omega, conj omega).
pub fn dyck333_rho0() -> Representation {
    let omega = omega12();
    let a = Matrix::diagonal(&[omega.clone(), omega.conj()]);
    Representation::new(&dyck333_presentation(), vec![a.clone(), a]).unwrap()
}

/// The two non-principal derivation directions at rho_0 (values on the
/// generators a, b as sl(2) matrices).
pub fn dyck333_z1() -> Vec<Matrix> {
    vec![Matrix::zeros(2, 2), Matrix::from_int_rows(&[&[0, 1], &[0, 0]])]
}

pub fn dyck333_z2() -> Vec<Matrix> {
    vec![Matrix::zeros(2, 2), Matrix::from_int_rows(&[&[0, 0], &[1, 0]])]
}

/// The integrated family rho_1(t) at parameter value 1: a stays
/// diagonal, b becomes upper triangular.
pub fn dyck333_rho1_at_one() -> Representation {
    let rho0 = dyck333_rho0();
    let shear = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
    let images = vec![rho0.image(0).clone(), &shear * rho0.image(1)];
    Representation::new(&dyck333_presentation(), images).unwrap()
}

/// The Lubotzky-Magid representation with non-reduced scheme point:
/// a -> diag(eta, conj eta), s -> rotation, translations -> identity.
pub fn lubotzky_magid_rho() -> Representation {
    let eta = eta12();
    let a = Matrix::diagonal(&[eta.clone(), eta.conj()]);
    let s = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    let id = Matrix::identity(2);
    Representation::new(&lubotzky_magid_presentation(), vec![a, s, id.clone(), id]).unwrap()
}

/// The quotient-compatible deformation target: the translations map to
/// diag(omega, conj omega) and its swap.
pub fn lubotzky_magid_rho_prime() -> Representation {
    let eta = eta12();
    let omega = omega12();
    let a = Matrix::diagonal(&[eta.clone(), eta.conj()]);
    let s = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
    let t1 = Matrix::diagonal(&[omega.clone(), omega.conj()]);
    let t2 = Matrix::diagonal(&[omega.conj(), omega.clone()]);
    Representation::new(&lubotzky_magid_presentation(), vec![a, s, t1, t2]).unwrap()
}

/// The explicit non-principal derivation at `lubotzky_magid_rho`:
/// zero on a and s, off-diagonal values on the translations.
pub fn lubotzky_magid_derivation() -> Vec<Matrix> {
    let eta = eta12();
    let one = CyclotomicNumber::int(1);
    let zero = CyclotomicNumber::int(0);
    let z_t1 = Matrix::from_rows(vec![
        vec![zero.clone(), &one + &eta],
        vec![-(&one + &eta.conj()), zero.clone()],
    ]);
    let z_t2 = Matrix::from_rows(vec![
        vec![zero.clone(), &one + &eta.conj()],
        vec![-(&one + &eta), zero.clone()],
    ]);
    vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2), z_t1, z_t2]
}

/// sqrt(2) inside Q(zeta_24), as zeta_8 + zeta_8^-1.
pub fn sqrt2_in_q24() -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(24, 3) + CyclotomicNumber::root_of_unity(24, 21)
}

/// An SL(3) representation of D(3,3,4) with chi(k) = chi(l) = 0 and
/// chi(kl) = 1: the symmetric square of an SL(2) pair with traces
/// (1, 1, tau) where tau^2 = 2. The `sign` picks tau = +-sqrt(2).
pub fn dyck334_rep(sign: i64) -> Representation {
    let eta = CyclotomicNumber::root_of_unity(24, 4); // primitive 6th root
    let tau = if sign >= 0 {
        sqrt2_in_q24()
    } else {
        -sqrt2_in_q24()
    };
    let u = CyclotomicNumber::int(1) + &tau;
    let zero = CyclotomicNumber::int(0);
    // trace-1 order-6 elements of SL(2); k l has trace tau, so (kl)^4 = -1
    let k2 = Matrix::from_rows(vec![
        vec![eta.clone(), CyclotomicNumber::int(1)],
        vec![zero.clone(), eta.conj()],
    ]);
    let l2 = Matrix::from_rows(vec![
        vec![eta.clone(), zero.clone()],
        vec![u, eta.conj()],
    ]);
    // free-group carrier for the symmetric square
    let free2 = parse_presentation("gens k,l; rel ;").unwrap();
    let pair = Representation::new(&free2, vec![k2, l2]).unwrap();
    let sym = pair.sym_power(3).unwrap();
    Representation::new(
        &dyck334_presentation(),
        vec![sym.image(0).clone(), sym.image(1).clone()],
    )
    .expect("the symmetric square kills the central defects")
}

/// The hypersurface cut out by the non-distinguished figure-eight
/// components: F(nu, nubar, zeta) =
/// zeta^2 - (nu nubar - 2) zeta + nu^3 + nubar^3 - 5 nu nubar + 5.
pub fn figure8_hypersurface(
    nu: &CyclotomicNumber,
    nubar: &CyclotomicNumber,
    zeta: &CyclotomicNumber,
) -> CyclotomicNumber {
    let two = CyclotomicNumber::int(2);
    let five = CyclotomicNumber::int(5);
    zeta.pow(2) - (nu * nubar - two) * zeta + nu.pow(3) + nubar.pow(3) - &five * &(nu * nubar)
        + five
}

/// The surjection of the figure-eight group onto D(3,3,4):
/// a -> k^-1 l^-1 k l, b -> k l, t -> k l k.
pub fn figure8_to_dyck334_words() -> Vec<Word> {
    let k = Word::generator(0);
    let l = Word::generator(1);
    let a = k
        .inverse()
        .mul(&l.inverse())
        .mul(&k)
        .mul(&l);
    let b = k.mul(&l);
    let t = k.mul(&l).mul(&k);
    vec![t, a, b]
}

/// Pull back a D(3,3,4) representation along the surjection, verifying
/// the figure-eight relations.
pub fn figure8_from_dyck334(
    rep: &Representation,
) -> Result<Representation, crate::reps::RepError> {
    let images = figure8_to_dyck334_words()
        .iter()
        .map(|w| rep.evaluate(w))
        .collect();
    Representation::new(&figure8_presentation(), images)
}

/// The peripheral-system-reversing endomorphism of the figure-eight
/// group: t -> t a^-1 t^-1 a t^-1, a -> a^-1 t a b^-1 a^-1 t^-1 a,
/// b -> a^-1 t a t^-1 a.
pub fn figure8_automorphism_words() -> Vec<Word> {
    let t = Word::generator(0);
    let a = Word::generator(1);
    let b = Word::generator(2);
    let h_t = t
        .mul(&a.inverse())
        .mul(&t.inverse())
        .mul(&a)
        .mul(&t.inverse());
    let h_a = a
        .inverse()
        .mul(&t)
        .mul(&a)
        .mul(&b.inverse())
        .mul(&a.inverse())
        .mul(&t.inverse())
        .mul(&a);
    let h_b = a
        .inverse()
        .mul(&t)
        .mul(&a)
        .mul(&t.inverse())
        .mul(&a);
    vec![h_t, h_a, h_b]
}

/// Substitute the endomorphism into a word.
pub fn figure8_apply_automorphism(w: &Word) -> Word {
    let images = figure8_automorphism_words();
    let mut out = Word::identity();
    for &(g, s) in w.letters() {
        let piece = if s > 0 {
            images[g].clone()
        } else {
            images[g].inverse()
        };
        out = out.mul(&piece);
    }
    out
}

/// Necessary-condition checks for the peripheral-reversing endomorphism
/// under one verified figure-eight representation.
pub fn figure8_automorphism_check(rep: &Representation) -> Vec<AssertionResult> {
    let mut out = vec![];
    let p = figure8_presentation();
    for (i, r) in p.relators().iter().enumerate() {
        let image = rep.evaluate(&figure8_apply_automorphism(r));
        check(
            &mut out,
            &format!("h(relator_{i}) maps to the identity"),
            image.is_identity(),
            String::new(),
        );
    }
    let m = Word::generator(0);
    let l = Word::commutator(&Word::generator(1), &Word::generator(2));
    let chi_hm = rep.trace_of(&figure8_apply_automorphism(&m));
    let chi_m_inv = rep.trace_of(&m.inverse());
    check(
        &mut out,
        "chi(h(m)) = chi(m^-1)",
        chi_hm == chi_m_inv,
        format!("{chi_hm} vs {chi_m_inv}"),
    );
    let chi_hl = rep.trace_of(&figure8_apply_automorphism(&l));
    let chi_l = rep.trace_of(&l);
    check(
        &mut out,
        "chi(h(l)) = chi(l)",
        chi_hl == chi_l,
        format!("{chi_hl} vs {chi_l}"),
    );
    out
}

/// Count eigenvalue patterns for irreducible SL(3) representations of
/// T(p,2): 3-subsets of the p-th roots of a cube root of unity with
/// product 1, summed over the three central characters. Experimental:
/// the count is the component tally predicted for the variety of
/// irreducible SL(3) characters.
pub fn torus_knot_sl3_pattern_count(p: i64) -> usize {
    assert!(p >= 3 && p % 2 == 1);
    let modulus = 3 * p;
    let mut count = 0;
    for j in 0..3 {
        // exponents of the p-th roots of zeta_3^j inside mu_(3p)
        let roots: Vec<i64> = (0..p).map(|m| j + 3 * m).collect();
        let n = roots.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if (roots[a] + roots[b] + roots[c]) % modulus == 0 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

// ---------------------------------------------------------------------
// assertion suites
// ---------------------------------------------------------------------

fn run_trefoil() -> Vec<AssertionResult> {
    let mut out = vec![];
    let p = trefoil_presentation();

    let data = alexander_polynomials(&Representation::trivial(&p, 1)).unwrap();
    let expected = crate::numbers::parse_laurent("t^2 - t + 1", 12).unwrap();
    check(
        &mut out,
        "alexander polynomial is t^2 - t + 1",
        data.delta1 == expected,
        format!("computed {}", data.delta1),
    );
    let eta = eta12();
    check(
        &mut out,
        "alexander polynomial vanishes at the primitive 6th root",
        data.delta1.eval(&eta).unwrap().is_zero(),
        String::new(),
    );
    let verdict = deformation_condition_n2(&p, &CyclotomicNumber::root_of_unity(12, 1)).unwrap();
    check(
        &mut out,
        "lambda = zeta_12 gives a simple root at lambda^2",
        verdict.is_root && verdict.is_simple_root,
        String::new(),
    );

    // the alpha family: homomorphism everywhere, irreducible off {0, 2i}
    let two_i = CyclotomicNumber::int(2) * i12();
    let samples = [
        (CyclotomicNumber::int(1), true),
        (CyclotomicNumber::int(-2), true),
        (CyclotomicNumber::int(0), false),
        (two_i, false),
    ];
    let mut family_ok = true;
    for (s, expect_irr) in &samples {
        let rep = trefoil_alpha(s);
        family_ok &= rep.is_irreducible().as_bool() == Some(*expect_irr);
    }
    check(
        &mut out,
        "alpha_s irreducible exactly off s = 0 and s = 2i",
        family_ok,
        String::new(),
    );

    // degeneration of alpha_0: conjugate by diag(t, 1/t) inside Laurent
    // matrices and take the constant term
    let alpha0 = trefoil_alpha(&CyclotomicNumber::int(0));
    let limit = laurent_scaling_limit(&alpha0);
    match limit {
        Some(images) => {
            let zeta = i12() * eta12().conj();
            check(
                &mut out,
                "(+-zeta)^2 = eta for the limit parameter",
                zeta.pow(2) == eta12(),
                String::new(),
            );
            let diag = trefoil_diagonal(&zeta);
            check(
                &mut out,
                "limit of alpha_0 is the diagonal representation",
                images == diag.images(),
                String::new(),
            );
        }
        None => check(&mut out, "limit of alpha_0 exists", false, "limit diverges"),
    }

    // SL(3) family spot checks
    let one = CyclotomicNumber::int(1);
    let rho11 = trefoil_rho_st(&one, &one);
    let x2 = rho11.evaluate(&Word::generator(0).pow(2));
    let y3 = rho11.evaluate(&Word::generator(1).pow(3));
    check(
        &mut out,
        "rho_(1,1): x^2 = y^3 = id",
        x2.is_identity() && y3.is_identity(),
        String::new(),
    );
    let grid = [
        (CyclotomicNumber::int(1), CyclotomicNumber::int(3), true),
        (CyclotomicNumber::int(0), CyclotomicNumber::int(0), false),
        (CyclotomicNumber::int(0), CyclotomicNumber::int(2), false),
        (CyclotomicNumber::int(2), CyclotomicNumber::int(0), false),
        (CyclotomicNumber::int(1), CyclotomicNumber::int(1), false), // s + t = 2
    ];
    let mut criterion_ok = true;
    for (s, t, expect_irr) in &grid {
        let rep = trefoil_rho_st(s, t);
        criterion_ok &= rep.is_irreducible().as_bool() == Some(*expect_irr);
        criterion_ok &= trefoil_rho_st_reducible(s, t) != *expect_irr;
    }
    check(
        &mut out,
        "rho_(s,t) verdicts match the three-line criterion",
        criterion_ok,
        String::new(),
    );

    // metabelian cocycles at the Alexander root
    let dim_at_root = solve_metabelian_cocycles(&p, &eta, 2).unwrap().len();
    let dim_generic = solve_metabelian_cocycles(&p, &CyclotomicNumber::int(2), 2)
        .unwrap()
        .len();
    check(
        &mut out,
        "metabelian cocycle space jumps at the Alexander root",
        dim_at_root == 2 && dim_generic == 1,
        format!("dim at root {dim_at_root}, generic {dim_generic}"),
    );
    out
}

/// Conjugate a rank-2 representation by diag(t, 1/t) and take t -> 0;
/// `None` when an entry has a pole.
pub fn laurent_scaling_limit(rep: &Representation) -> Option<Vec<Matrix>> {
    let mut out = vec![];
    for m in rep.images() {
        let lm = LaurentMatrix::from_fn(2, 2, |i, j| {
            let exp = match (i, j) {
                (0, 1) => 2,
                (1, 0) => -2,
                _ => 0,
            };
            LaurentPoly::monomial(exp, m[(i, j)].clone())
        });
        let mut constant = Matrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                let e = &lm[(i, j)];
                if !e.is_zero() && e.lowest_exponent() < 0 {
                    return None;
                }
                constant[(i, j)] = e.coeff(0);
            }
        }
        out.push(constant);
    }
    Some(out)
}

fn run_figure8() -> Vec<AssertionResult> {
    let mut out = vec![];
    let p = figure8_presentation();
    let data = alexander_polynomials(&Representation::trivial(&p, 1)).unwrap();
    let expected = crate::numbers::parse_laurent("t^2 - 3*t + 1", 3).unwrap();
    check(
        &mut out,
        "alexander polynomial is t^2 - 3t + 1",
        data.delta1 == expected,
        format!("computed {}", data.delta1),
    );
    check(
        &mut out,
        "alexander polynomial is symmetric",
        data.delta1.associated(&data.delta1.reversed()),
        String::new(),
    );

    let omega = CyclotomicNumber::root_of_unity(3, 1);
    let two = CyclotomicNumber::int(2);
    let one = CyclotomicNumber::int(1);
    let singular = [
        (two.clone(), two.clone(), one.clone()),
        (&two * &omega, &two * &omega.pow(2), one.clone()),
        (&two * &omega.pow(2), &two * &omega, one.clone()),
    ];
    let mut on_surface = true;
    for (nu, nubar, zeta) in &singular {
        on_surface &= figure8_hypersurface(nu, nubar, zeta).is_zero();
    }
    check(
        &mut out,
        "the three singular points lie on the hypersurface",
        on_surface,
        String::new(),
    );
    check(
        &mut out,
        "F(0,0,0) = 5",
        figure8_hypersurface(
            &CyclotomicNumber::int(0),
            &CyclotomicNumber::int(0),
            &CyclotomicNumber::int(0),
        ) == CyclotomicNumber::int(5),
        String::new(),
    );
    out
}

fn run_dyck333() -> Vec<AssertionResult> {
    let mut out = vec![];
    let rho0 = dyck333_rho0();
    let report = cohomology_dims(&rho0, &ModuleSpec::AdjointSl).unwrap();
    check(
        &mut out,
        "dim Z1 = 4, dim B1 = 2, dim H1 = 2",
        report.z1 == 4 && report.b1 == 2 && report.h1 == 2,
        format!("z1={} b1={} h1={}", report.z1, report.b1, report.h1),
    );
    let space = cocycle_space(&rho0, &ModuleSpec::AdjointSl).unwrap();
    let z1_in = space.contains(&sl_assignment_coords(&dyck333_z1()));
    let z2_in = space.contains(&sl_assignment_coords(&dyck333_z2()));
    check(&mut out, "z1 and z2 are cocycles", z1_in && z2_in, String::new());

    for (name, u1) in [("z1", dyck333_z1()), ("z2", dyck333_z2())] {
        let d = TruncatedDeformation::new(rho0.clone(), vec![u1]).unwrap();
        check(
            &mut out,
            &format!("{name} extends to order 2"),
            obstruction_step(&d).unwrap().is_extended(),
            String::new(),
        );
    }
    let mixed = vec![
        Matrix::zeros(2, 2),
        Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
    ];
    let d = TruncatedDeformation::new(rho0.clone(), vec![mixed]).unwrap();
    check(
        &mut out,
        "z1 + z2 is obstructed at order 2",
        !obstruction_step(&d).unwrap().is_extended(),
        String::new(),
    );

    // triangular lemma: traces (-1,-1,-1) force reducibility
    let rho1 = dyck333_rho1_at_one();
    let a = Word::generator(0);
    let b = Word::generator(1);
    let ab = a.mul(&b);
    let minus_one = CyclotomicNumber::int(-1);
    let traces_ok = rho1.trace_of(&a) == minus_one
        && rho1.trace_of(&b) == minus_one
        && rho1.trace_of(&ab) == minus_one;
    let verdict = rho1.is_irreducible();
    check(
        &mut out,
        "deformed representation has traces (-1,-1,-1) and an invariant line",
        traces_ok
            && verdict.as_bool() == Some(false)
            && verdict.invariant_subspace().is_some_and(|w| w.len() == 1),
        String::new(),
    );
    out
}

fn run_lubotzky_magid() -> Vec<AssertionResult> {
    let mut out = vec![];
    let rho = lubotzky_magid_rho();
    let report = cohomology_dims(&rho, &ModuleSpec::AdjointSl).unwrap();
    check(
        &mut out,
        "h1 = 1 at the non-reduced point",
        report.h1 == 1,
        format!("h0={} z1={} b1={} h1={}", report.h0, report.z1, report.b1, report.h1),
    );
    let space = cocycle_space(&rho, &ModuleSpec::AdjointSl).unwrap();
    check(
        &mut out,
        "the explicit derivation is a cocycle",
        space.contains(&sl_assignment_coords(&lubotzky_magid_derivation())),
        String::new(),
    );
    let rho_prime = lubotzky_magid_rho_prime();
    let report_prime = cohomology_dims(&rho_prime, &ModuleSpec::AdjointSl).unwrap();
    check(
        &mut out,
        "h1 = 0 after imposing the extra relation",
        report_prime.h1 == 0,
        format!("h1={}", report_prime.h1),
    );
    // z1 = 4 strictly exceeds the local dimension 3 (the orbit of an
    // isolated character): non-reducedness evidence
    let gap = tangent_gap_report(&rho, Some(3)).unwrap();
    check(
        &mut out,
        "tangent gap: z1 = 4 against local dimension 3",
        gap.z1 == 4 && gap.strict,
        format!("z1={} gap={:?}", gap.z1, gap.gap),
    );
    out
}

fn run_dyck334() -> Vec<AssertionResult> {
    let mut out = vec![];
    for sign in [1i64, -1] {
        let rep = dyck334_rep(sign);
        let k = Word::generator(0);
        let l = Word::generator(1);
        let kl = k.mul(&l);
        let zero = CyclotomicNumber::int(0);
        let one = CyclotomicNumber::int(1);
        let traces_ok = rep.trace_of(&k) == zero
            && rep.trace_of(&k.inverse()) == zero
            && rep.trace_of(&l) == zero
            && rep.trace_of(&l.inverse()) == zero
            && rep.trace_of(&kl) == one
            && rep.trace_of(&kl.inverse()) == one;
        check(
            &mut out,
            &format!("sign {sign}: chi(k) = chi(l) = 0 and chi(kl) = 1"),
            traces_ok,
            String::new(),
        );
        let nu = rep.trace_of(&k.inverse().mul(&l));
        let nubar = rep.trace_of(&k.mul(&l.inverse()));
        let zeta = rep.trace_of(&Word::commutator(&k, &l));
        check(
            &mut out,
            &format!("sign {sign}: triangle-group coordinates satisfy the hypersurface"),
            figure8_hypersurface(&nu, &nubar, &zeta).is_zero(),
            format!("F({nu}, {nubar}, {zeta})"),
        );

        match figure8_from_dyck334(&rep) {
            Ok(pulled) => {
                check(
                    &mut out,
                    &format!("sign {sign}: pullback satisfies the figure-eight relations"),
                    true,
                    String::new(),
                );
                // phi(b)^4 = 1 and phi(m^3 l) = 1
                let b4 = pulled.evaluate(&Word::generator(2).pow(4));
                let m3l = pulled.evaluate(
                    &Word::generator(0)
                        .pow(3)
                        .mul(&Word::commutator(&Word::generator(1), &Word::generator(2))),
                );
                check(
                    &mut out,
                    &format!("sign {sign}: phi(b)^4 = 1 and phi(m^3 l) = 1"),
                    b4.is_identity() && m3l.is_identity(),
                    String::new(),
                );
                // character coordinates of the pulled-back representation
                let nu_f = pulled.trace_of(&Word::generator(0).inverse());
                let nubar_f = pulled.trace_of(&Word::generator(0));
                let zeta_f = pulled.trace_of(&Word::generator(1));
                check(
                    &mut out,
                    &format!("sign {sign}: pulled-back character lies on the hypersurface"),
                    figure8_hypersurface(&nu_f, &nubar_f, &zeta_f).is_zero(),
                    format!("F({nu_f}, {nubar_f}, {zeta_f})"),
                );
                check(
                    &mut out,
                    &format!("sign {sign}: pullback is irreducible"),
                    pulled.is_irreducible().as_bool() == Some(true),
                    String::new(),
                );
                for r in figure8_automorphism_check(&pulled) {
                    check(
                        &mut out,
                        &format!("sign {sign}: {}", r.name),
                        r.passed,
                        r.detail,
                    );
                }
            }
            Err(e) => check(
                &mut out,
                &format!("sign {sign}: pullback satisfies the figure-eight relations"),
                false,
                format!("{e}"),
            ),
        }
    }
    out
}

fn run_torus_knot(p: i64) -> Vec<AssertionResult> {
    let mut out = vec![];
    let pres = torus_knot_p2_presentation(p);
    check(
        &mut out,
        "presentation parses with a valid abelianization",
        pres.has_abelianization(),
        String::new(),
    );
    let count = torus_knot_sl3_pattern_count(p);
    let expected = ((p - 1) * (p - 2) / 2) as usize;
    check(
        &mut out,
        "eigenvalue-pattern count matches (p-1)(p-2)/2 (experimental)",
        count == expected,
        format!("counted {count}, expected {expected}"),
    );
    // the Alexander polynomial of T(p,2) has degree p - 1
    let data = alexander_polynomials(&Representation::trivial(&pres, 1)).unwrap();
    check(
        &mut out,
        "alexander polynomial has degree p - 1",
        data.delta1.highest_exponent() == p - 1,
        format!("computed {}", data.delta1),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_run_clean() {
        for id in entry_ids() {
            let e = entry(id).unwrap();
            let results = e.run();
            assert!(!results.is_empty());
            for r in &results {
                assert!(r.passed, "entry {id}: `{}` failed: {}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn unknown_entry_is_an_error() {
        let err = match entry("unknown") {
            Err(e) => e,
            Ok(_) => panic!("expected an error"),
        };
        assert_eq!(err, CatalogError::UnknownEntry("unknown".into()));
    }

    #[test]
    fn lubotzky_magid_presentation_has_eight_relators() {
        let p = lubotzky_magid_presentation();
        assert_eq!(p.generator_count(), 4);
        assert_eq!(p.relator_count(), 8);
    }

    #[test]
    fn dyck334_rep_is_a_homomorphism() {
        let rep = dyck334_rep(1);
        assert_eq!(rep.rank(), 3);
        let k3 = rep.evaluate(&Word::generator(0).pow(3));
        let l3 = rep.evaluate(&Word::generator(1).pow(3));
        let kl4 = rep.evaluate(&Word::generator(0).mul(&Word::generator(1)).pow(4));
        assert!(k3.is_identity() && l3.is_identity() && kl4.is_identity());
    }

    #[test]
    fn rho_st_double_points_fix_a_flag() {
        // at the pairwise intersections of the reducibility lines, the
        // representation has the character of a diagonal representation
        let zero = CyclotomicNumber::int(0);
        let two = CyclotomicNumber::int(2);
        for (s, t) in [(zero.clone(), zero.clone()), (zero.clone(), two.clone()), (two, zero)] {
            let rep = trefoil_rho_st(&s, &t);
            let verdict = rep.is_irreducible();
            assert_eq!(verdict.as_bool(), Some(false));
            assert!(verdict.invariant_subspace().is_some());
        }
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(sqrt2_in_q24().pow(2), CyclotomicNumber::int(2));
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(torus_knot_sl3_pattern_count(3), 1);
        assert_eq!(torus_knot_sl3_pattern_count(5), 6);
        assert_eq!(torus_knot_sl3_pattern_count(7), 15);
    }
}
