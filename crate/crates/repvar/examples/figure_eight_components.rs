//! The non-distinguished SL(3) character components of the figure-eight
//! knot: representations pulled back from the triangle group D(3,3,4)
//! land on an explicit cubic hypersurface.
//!
//! ```bash
//! cargo run --example figure_eight_components
//! ```

use repvar::catalog::{
    dyck334_rep, figure8_apply_automorphism, figure8_automorphism_check, figure8_from_dyck334,
    figure8_hypersurface,
};
use repvar::numbers::CyclotomicNumber;
use repvar::words::Word;

fn main() {
    // the three singular points of the hypersurface
    let omega = CyclotomicNumber::root_of_unity(3, 1);
    let two = CyclotomicNumber::int(2);
    let one = CyclotomicNumber::int(1);
    for (nu, nubar) in [
        (two.clone(), two.clone()),
        (&two * &omega, &two * &omega.pow(2)),
        (&two * &omega.pow(2), &two * &omega),
    ] {
        println!(
            "F({nu}, {nubar}, 1) = {}",
            figure8_hypersurface(&nu, &nubar, &one)
        );
    }

    for sign in [1, -1] {
        println!("\n--- triangle-group representation with trace {}sqrt(2) on kl ---",
            if sign > 0 { "+" } else { "-" });
        let rep = dyck334_rep(sign);
        let k = Word::generator(0);
        let l = Word::generator(1);
        println!(
            "chi(k) = {}, chi(l) = {}, chi(kl) = {}",
            rep.trace_of(&k),
            rep.trace_of(&l),
            rep.trace_of(&k.mul(&l))
        );

        let pulled = figure8_from_dyck334(&rep).unwrap();
        println!("pullback verifies the figure-eight relations: rank {}", pulled.rank());
        println!(
            "pullback is irreducible: {}",
            pulled.is_irreducible().as_bool() == Some(true)
        );

        let nu = pulled.trace_of(&Word::generator(0).inverse());
        let nubar = pulled.trace_of(&Word::generator(0));
        let zeta = pulled.trace_of(&Word::generator(1));
        println!("character coordinates: nu = {nu}, nubar = {nubar}, zeta = {zeta}");
        println!(
            "F(nu, nubar, zeta) = {}",
            figure8_hypersurface(&nu, &nubar, &zeta)
        );

        // the peripheral-reversing endomorphism: relators map to the
        // identity and the meridian trace flips
        for r in figure8_automorphism_check(&pulled) {
            println!("  [{}] {}", if r.passed { "ok" } else { "FAIL" }, r.name);
        }
        let m = Word::generator(0);
        println!(
            "  chi(h(m)) = {} = chi(m^-1) = {}",
            pulled.trace_of(&figure8_apply_automorphism(&m)),
            pulled.trace_of(&m.inverse())
        );
    }
}
