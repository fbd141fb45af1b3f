//! The two-parameter family of SL(3) representations of the trefoil
//! group: irreducible exactly off three affine lines.
//!
//! ```bash
//! cargo run --example trefoil_sl3_family
//! ```

use repvar::catalog::{trefoil_rho_st, trefoil_rho_st_reducible};
use repvar::numbers::{CyclotomicNumber, Rational};
use repvar::words::Word;

fn main() {
    let grid: Vec<CyclotomicNumber> = [-1, 0, 1, 2, 3]
        .into_iter()
        .map(CyclotomicNumber::int)
        .chain([
            CyclotomicNumber::rational(Rational::new(1, 2)),
            CyclotomicNumber::rational(Rational::new(3, 2)),
        ])
        .collect();

    println!("verdicts on a 7 x 7 grid ('.' irreducible, 'R' reducible):\n");
    print!("      ");
    for t in &grid {
        print!("{:>4} ", t.to_string());
    }
    println!();
    for s in &grid {
        print!("{:>5} ", s.to_string());
        for t in &grid {
            let rep = trefoil_rho_st(s, t);
            let irreducible = rep.is_irreducible().as_bool() == Some(true);
            let predicted = !trefoil_rho_st_reducible(s, t);
            assert_eq!(irreducible, predicted, "criterion mismatch at ({s}, {t})");
            print!("{:>4} ", if irreducible { "." } else { "R" });
        }
        println!();
    }
    println!("\nreducible exactly on the lines s = 0, t = 0 and s + t = 2");

    // at a double point the representation fixes a complete flag and
    // carries a diagonal character
    let rep = trefoil_rho_st(&CyclotomicNumber::int(0), &CyclotomicNumber::int(2));
    let verdict = rep.is_irreducible();
    let witness = verdict.invariant_subspace().unwrap();
    println!(
        "\nat (0, 2): invariant subspace of dimension {} found",
        witness.len()
    );
    let m = Word::generator(0).mul(&Word::generator(1).inverse());
    println!("character at the meridian: {}", rep.trace_of(&m));
}
