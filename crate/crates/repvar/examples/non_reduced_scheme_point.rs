//! A representation whose cocycle space strictly exceeds the local
//! dimension of the representation variety: evidence of nilpotents in
//! the coordinate ring of the representation scheme.
//!
//! ```bash
//! cargo run --example non_reduced_scheme_point
//! ```

use repvar::catalog::{
    lubotzky_magid_derivation, lubotzky_magid_presentation, lubotzky_magid_rho,
    lubotzky_magid_rho_prime,
};
use repvar::cohomology::{
    cocycle_space, cohomology_dims, sl_assignment_coords, tangent_gap_report, ModuleSpec,
};

fn main() {
    let p = lubotzky_magid_presentation();
    println!("group: {p}");

    let rho = lubotzky_magid_rho();
    let report = cohomology_dims(&rho, &ModuleSpec::AdjointSl).unwrap();
    println!(
        "\nat rho (translations -> identity): h0 = {}, z1 = {}, b1 = {}, h1 = {}",
        report.h0, report.z1, report.b1, report.h1
    );

    let space = cocycle_space(&rho, &ModuleSpec::AdjointSl).unwrap();
    let z = lubotzky_magid_derivation();
    println!(
        "the explicit derivation (supported on the translations) is a cocycle: {}",
        space.contains(&sl_assignment_coords(&z))
    );

    // every SL(2)-representation of this group factors through a finite
    // quotient, so the character is isolated and the local dimension is
    // the orbit dimension 3; the cocycle space sees 4
    let gap = tangent_gap_report(&rho, Some(3)).unwrap();
    println!(
        "\ntangent gap report: z1 = {}, known local dim = {:?}, gap = {:?}",
        gap.z1, gap.known_local_dim, gap.gap
    );
    println!("strict gap (non-reducedness evidence): {}", gap.strict);

    let rho_prime = lubotzky_magid_rho_prime();
    let report = cohomology_dims(&rho_prime, &ModuleSpec::AdjointSl).unwrap();
    println!(
        "\nat rho' (translations -> diag(omega, conj omega)): h1 = {}",
        report.h1
    );
}
