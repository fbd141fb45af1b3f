//! Reducible metabelian representations from torsion-module cocycles,
//! and the cohomology that makes them smooth points.
//!
//! ```bash
//! cargo run --example metabelian_deformations
//! ```

use repvar::catalog::trefoil_presentation;
use repvar::cohomology::{check_infinitesimal_regularity, cohomology_dims, ModuleSpec};
use repvar::numbers::CyclotomicNumber;
use repvar::reps::{
    build_metabelian, jordan_block, metabelian_normal_form, metabelian_sl, pascal_conjugator,
    solve_metabelian_cocycles,
};
use repvar::words::Word;

fn main() {
    // the involution conjugating the Jordan block to its inverse
    for n in 2..=5 {
        let j = jordan_block(n);
        let p = pascal_conjugator(n);
        let ok = &(&p * &j) * &p.inverse().unwrap() == j.inverse().unwrap();
        println!("P_{n} J_{n} P_{n}^-1 = J_{n}^-1: {ok}");
    }

    let p = trefoil_presentation();
    let eta = CyclotomicNumber::root_of_unity(12, 2); // Alexander root
    let lambda = CyclotomicNumber::root_of_unity(12, 1); // lambda^2 = eta

    for alpha in [CyclotomicNumber::int(2), eta.clone()] {
        let dim = solve_metabelian_cocycles(&p, &alpha, 2).unwrap().len();
        println!("\nalpha = {alpha}: cocycle solution space has dimension {dim}");
    }

    // a cocycle that is not a coboundary gives a nonabelian
    // representation
    let z = vec![vec![CyclotomicNumber::int(1)], vec![CyclotomicNumber::int(0)]];
    let gl = build_metabelian(&p, &eta, 2, &z).unwrap();
    println!("\nGL form image of x:  {:?}", gl.image(0));
    let nf = metabelian_normal_form(&gl);
    println!("normal form of x:    {:?}", nf.image(0));

    let sl = metabelian_sl(&p, &eta, 2, &z, &lambda).unwrap();
    println!("SL form image of x:  {:?}", sl.image(0));
    let c = sl.evaluate(&Word::commutator(&Word::generator(0), &Word::generator(1)));
    println!("nonabelian: {}", !c.is_identity());

    // the cohomology behind the smoothness statement: h1 = n - 1 and the
    // representation sits on a unique component of dimension n^2 + n - 2
    let report = cohomology_dims(&sl, &ModuleSpec::AdjointSl).unwrap();
    println!(
        "\nAd cohomology of the SL form: h0 = {}, h1 = {}, h2_complex = {}",
        report.h0, report.h1, report.h2_complex
    );
    let verdict = check_infinitesimal_regularity(&sl, 1).unwrap();
    println!(
        "infinitesimally regular: {} (component dimension {})",
        verdict.regular, verdict.predicted_component_dim
    );
}
