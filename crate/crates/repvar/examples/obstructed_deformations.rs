//! Formal deformations and their obstructions: at the diagonal
//! representation of D(3,3,3), the pure directions z1 and z2 integrate
//! but their sum dies at the second order.
//!
//! ```bash
//! cargo run --example obstructed_deformations
//! ```

use repvar::catalog::{dyck333_rho0, dyck333_z1, dyck333_z2};
use repvar::cohomology::{obstruction_step, ObstructionOutcome, TruncatedDeformation};
use repvar::linalg::Matrix;

fn drive(label: &str, base: &repvar::reps::Representation, direction: Vec<Matrix>, target: usize) {
    let mut d = match TruncatedDeformation::new(base.clone(), vec![direction]) {
        Ok(d) => d,
        Err(e) => {
            println!("{label}: not a first-order deformation ({e})");
            return;
        }
    };
    while d.order() < target {
        match obstruction_step(&d).unwrap() {
            ObstructionOutcome::Extended { extension } => {
                d = d.extend(extension).unwrap();
                println!("{label}: extended to order {}", d.order());
            }
            ObstructionOutcome::Obstructed { defects } => {
                let nonzero = defects.iter().filter(|m| !m.is_zero()).count();
                println!(
                    "{label}: obstructed at order {} ({nonzero} relator defect(s))",
                    d.order() + 1
                );
                return;
            }
        }
    }
}

fn main() {
    let rho0 = dyck333_rho0();
    drive("u1 = z1      ", &rho0, dyck333_z1(), 4);
    drive("u1 = z2      ", &rho0, dyck333_z2(), 4);

    let mixed: Vec<Matrix> = dyck333_z1()
        .iter()
        .zip(&dyck333_z2())
        .map(|(a, b)| a + b)
        .collect();
    drive("u1 = z1 + z2 ", &rho0, mixed, 4);
}
