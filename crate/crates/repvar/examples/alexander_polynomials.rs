//! Twisted Alexander polynomials from Fox matrices, with the root
//! conditions that control deformations of diagonal representations.
//!
//! ```bash
//! cargo run --example alexander_polynomials
//! ```

use repvar::alexander::{alexander_polynomials, deformation_condition_n2, twisted_fox_matrix};
use repvar::catalog::{figure8_presentation, trefoil_presentation};
use repvar::numbers::CyclotomicNumber;
use repvar::reps::Representation;

fn main() {
    let trefoil = trefoil_presentation();
    let trivial = Representation::trivial(&trefoil, 1);

    let fox = twisted_fox_matrix(&trivial).unwrap();
    println!("trefoil Fox matrix (1 x 2): {:?}", fox.matrix());

    let data = alexander_polynomials(&trivial).unwrap();
    println!("delta0 = {}", data.delta0);
    println!("delta1 = {}", data.delta1);

    let eta = CyclotomicNumber::root_of_unity(12, 2);
    println!("delta1(zeta_6) = {}", data.delta1.eval(&eta).unwrap());

    // the deformation condition at lambda = zeta_12: lambda^2 = zeta_6
    // is a simple root, so the diagonal representation deforms
    let verdict =
        deformation_condition_n2(&trefoil, &CyclotomicNumber::root_of_unity(12, 1)).unwrap();
    println!(
        "\nlambda = zeta_12: root {} / simple {}",
        verdict.is_root, verdict.is_simple_root
    );
    let verdict = deformation_condition_n2(&trefoil, &CyclotomicNumber::int(1)).unwrap();
    println!(
        "lambda = 1:       root {} (delta1(1) = {})",
        verdict.is_root, verdict.value
    );

    let figure8 = figure8_presentation();
    let data = alexander_polynomials(&Representation::trivial(&figure8, 1)).unwrap();
    println!("\nfigure-eight delta1 = {}", data.delta1);
    println!(
        "symmetric under t -> 1/t: {}",
        data.delta1.associated(&data.delta1.reversed())
    );
}
