//! Twisted cohomology of the triangle group D(3,3,3) at the diagonal
//! representation: a four-dimensional cocycle space over a
//! two-dimensional coboundary space.
//!
//! ```bash
//! cargo run --example triangle_group_cohomology
//! ```

use repvar::catalog::{dyck333_rho0, dyck333_z1, dyck333_z2};
use repvar::cohomology::{
    cocycle_space, cohomology_dims, coboundary_of, sl_assignment_coords, ModuleSpec,
};
use repvar::linalg::Matrix;

fn main() {
    let rho0 = dyck333_rho0();
    println!("rho_0(a) = rho_0(b) = {:?}", rho0.image(0));

    let report = cohomology_dims(&rho0, &ModuleSpec::AdjointSl).unwrap();
    println!(
        "sl(2) with the adjoint action: h0 = {}, z1 = {}, b1 = {}, h1 = {}",
        report.h0, report.z1, report.b1, report.h1
    );

    let space = cocycle_space(&rho0, &ModuleSpec::AdjointSl).unwrap();
    println!(
        "relator Jacobian is {} x {} of rank {}",
        space.relator_jacobian().rows(),
        space.relator_jacobian().cols(),
        space.relator_jacobian().rank(),
    );

    // the two derivations that integrate to the upper and lower
    // triangular families
    for (name, z) in [("z1", dyck333_z1()), ("z2", dyck333_z2())] {
        let coords = sl_assignment_coords(&z);
        println!("{name} is a cocycle: {}", space.contains(&coords));
    }

    // principal derivations from the off-diagonal directions
    for (name, x) in [
        ("E12", Matrix::from_int_rows(&[&[0, 1], &[0, 0]])),
        ("E21", Matrix::from_int_rows(&[&[0, 0], &[1, 0]])),
    ] {
        let b = coboundary_of(&rho0, &x).unwrap();
        println!(
            "coboundary of {name}: value on both generators = {:?}",
            b[0]
        );
    }

    // the diagonal direction lies in the centralizer: zero coboundary
    let h = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
    let b = coboundary_of(&rho0, &h).unwrap();
    println!(
        "centralizer direction H gives the zero coboundary: {}",
        b.iter().all(Matrix::is_zero)
    );
}
