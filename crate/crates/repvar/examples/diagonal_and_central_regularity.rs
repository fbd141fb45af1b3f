//! Smoothness tests on the trefoil: central representations sit on the
//! abelian component, and diagonal representations are infinitesimally
//! regular exactly when no eigenvalue ratio hits an Alexander root.
//!
//! ```bash
//! cargo run --example diagonal_and_central_regularity
//! ```

use repvar::catalog::{trefoil_central, trefoil_presentation};
use repvar::cohomology::{
    check_infinitesimal_regularity, cohomology_dims, tangent_gap_report, ModuleSpec,
};
use repvar::linalg::Matrix;
use repvar::numbers::{CyclotomicNumber, Rational};
use repvar::reps::Representation;

fn diagonal_rep(eigs: &[CyclotomicNumber]) -> Representation {
    let p = trefoil_presentation();
    let x = Matrix::diagonal(&eigs.iter().map(|l| l.pow(3)).collect::<Vec<_>>());
    let y = Matrix::diagonal(&eigs.iter().map(|l| l.pow(2)).collect::<Vec<_>>());
    Representation::new(&p, vec![x, y]).unwrap()
}

fn main() {
    // central representations: Z^1 has dimension n^2 - 1 and the
    // abelian component exhausts it
    for n in 2..=4 {
        let rho = trefoil_central(n);
        let report = cohomology_dims(&rho, &ModuleSpec::AdjointSl).unwrap();
        let gap = tangent_gap_report(&rho, Some(n * n - 1)).unwrap();
        println!(
            "central, n = {n}: z1 = {} = n^2 - 1, gap over the abelian component = {:?}",
            report.z1,
            gap.gap.unwrap()
        );
    }

    // diagonal with eigenvalue ratios off the Alexander roots
    let good = diagonal_rep(&[
        CyclotomicNumber::int(2),
        CyclotomicNumber::int(3),
        CyclotomicNumber::rational(Rational::new(1, 6)),
    ]);
    let verdict = check_infinitesimal_regularity(&good, 1).unwrap();
    println!(
        "\ndiag(2, 3, 1/6): h1 = {} (expected {}), regular = {}, component dim = {}",
        verdict.h1, verdict.expected_h1, verdict.regular, verdict.predicted_component_dim
    );

    // one ratio equal to zeta_6, a root of t^2 - t + 1
    let eta = CyclotomicNumber::root_of_unity(24, 4);
    let bad = diagonal_rep(&[eta.clone(), CyclotomicNumber::int(1), eta.inverse().unwrap()]);
    let verdict = check_infinitesimal_regularity(&bad, 1).unwrap();
    println!(
        "diag(eta, 1, eta^-1): h1 = {} (expected {}), regular = {}",
        verdict.h1, verdict.expected_h1, verdict.regular
    );
}
