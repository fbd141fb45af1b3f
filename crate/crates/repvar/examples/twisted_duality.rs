//! Duality identities for twisted Alexander polynomials: the dual
//! representation reverses the variable, and the two hom-module twists
//! of a block pair are reversals of each other.
//!
//! ```bash
//! cargo run --example twisted_duality
//! ```

use repvar::alexander::{alexander_polynomials, deformation_condition_general};
use repvar::catalog::{dyck334_rep, figure8_from_dyck334, trefoil_alpha, trefoil_presentation};
use repvar::numbers::CyclotomicNumber;
use repvar::reps::Representation;

fn main() {
    // instance one: the irreducible SL(2) family member alpha_1
    let alpha1 = trefoil_alpha(&CyclotomicNumber::int(1));
    let d = alexander_polynomials(&alpha1).unwrap().delta1;
    let d_dual = alexander_polynomials(&alpha1.dual()).unwrap().delta1;
    println!("trefoil alpha_1:");
    println!("  delta1            = {d}");
    println!("  delta1 of dual    = {d_dual}");
    println!("  reversal identity = {}", d_dual.associated(&d.reversed()));

    // instance two: the SL(3) representation pulled back from D(3,3,4)
    let fig8 = figure8_from_dyck334(&dyck334_rep(1)).unwrap();
    let d = alexander_polynomials(&fig8).unwrap().delta1;
    let d_dual = alexander_polynomials(&fig8.dual()).unwrap().delta1;
    println!("\nfigure-eight pullback (rank 3):");
    println!("  delta1            = {d}");
    println!("  reversal identity = {}", d_dual.associated(&d.reversed()));

    // the two-block condition couples alpha tensor beta-dual with
    // beta tensor alpha-dual
    let trivial = Representation::trivial(&trefoil_presentation(), 1);
    let lambda = CyclotomicNumber::root_of_unity(24, 1);
    let verdict = deformation_condition_general(&alpha1, &trivial, &lambda).unwrap();
    println!("\nblock pair (alpha_1, trivial) at lambda = zeta_24:");
    println!("  delta+ = {}", verdict.delta_plus);
    println!("  delta- = {}", verdict.delta_minus);
    println!("  duality holds      = {}", verdict.duality_holds);
    println!("  value at lambda^3  = {}", verdict.value_plus);
    println!("  necessary condition= {}", verdict.deformable_necessary);
}
