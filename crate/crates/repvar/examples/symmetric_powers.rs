//! Symmetric powers of rank-2 representations: the irreducible rational
//! representations of SL(2) composed with a knot-group representation.
//!
//! ```bash
//! cargo run --example symmetric_powers
//! ```

use repvar::catalog::{trefoil_alpha, trefoil_diagonal};
use repvar::numbers::CyclotomicNumber;
use repvar::words::Word;

fn main() {
    let alpha1 = trefoil_alpha(&CyclotomicNumber::int(1));

    // n = 1 is trivial, n = 2 is the representation itself
    let r1 = alpha1.sym_power(1).unwrap();
    println!("rank of Sym^0 composition: {} (trivial)", r1.rank());
    let r2 = alpha1.sym_power(2).unwrap();
    println!("Sym^1 equals the input: {}", r2.images() == alpha1.images());

    // n = 3 realizes the adjoint representation; higher n keep the
    // relations automatically
    for n in 3..=5usize {
        let rn = alpha1.sym_power(n).unwrap();
        let relator_ok = rn
            .presentation()
            .relators()
            .iter()
            .all(|r| rn.evaluate(r).is_identity());
        println!(
            "Sym^{} -> rank {}: relations hold {}, irreducible {}",
            n - 1,
            rn.rank(),
            relator_ok,
            rn.is_irreducible().as_bool() == Some(true),
        );
    }

    // on the diagonal representation the symmetric power has the
    // expected eigenvalue ladder
    let lambda = CyclotomicNumber::root_of_unity(24, 1);
    let diag = trefoil_diagonal(&lambda);
    let r3 = diag.sym_power(3).unwrap();
    let m = Word::generator(0).mul(&Word::generator(1).inverse());
    println!(
        "\nSym^2 of diag(lambda^phi, lambda^-phi) at the meridian: {:?}",
        r3.evaluate(&m)
    );
    let mut ladder = CyclotomicNumber::int(0);
    for i in 0..3i64 {
        ladder += &lambda.pow(2 - 2 * i);
    }
    println!("trace matches lambda^2 + 1 + lambda^-2: {}", r3.trace_of(&m) == ladder);
}
