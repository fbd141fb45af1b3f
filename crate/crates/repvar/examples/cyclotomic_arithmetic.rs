//! Exact arithmetic in cyclotomic fields and Laurent polynomial rings.
//!
//! ```bash
//! cargo run --example cyclotomic_arithmetic
//! ```

use repvar::numbers::{laurent_gcd, parse_field_element, parse_laurent, CyclotomicNumber};

fn main() {
    // the classical relations satisfied by small roots of unity
    let omega = CyclotomicNumber::root_of_unity(3, 1);
    println!("omega^2 + omega + 1 = {}", omega.pow(2) + &omega + CyclotomicNumber::int(1));

    let eta = CyclotomicNumber::root_of_unity(6, 1);
    println!("eta^2 - eta + 1   = {}", eta.pow(2) - &eta + CyclotomicNumber::int(1));

    let zeta = CyclotomicNumber::root_of_unity(12, 1);
    println!("zeta^4 - zeta^2 + 1 = {}", zeta.pow(4) - zeta.pow(2) + CyclotomicNumber::int(1));

    // inverses come from the extended euclidean algorithm against Phi_N
    let x = parse_field_element("1/2 - 3*zeta(12)^2 + zeta(12)^3", 12).unwrap();
    let inv = x.inverse().unwrap();
    println!("\nx       = {x}");
    println!("x^-1    = {inv}");
    println!("x * x^-1 = {}", &x * &inv);

    // subfields embed along divisibility of the orders
    let via_24 = CyclotomicNumber::root_of_unity(24, 8);
    println!("\nzeta_24^8 equals zeta_3: {}", via_24 == omega);

    // Laurent polynomials over the field form a PID; gcds are computed
    // on normalized associate-class representatives
    let p = parse_laurent("t^2 - 1", 12).unwrap();
    let q = parse_laurent("t^3 - 1", 12).unwrap();
    println!("\ngcd(t^2 - 1, t^3 - 1) = {}", laurent_gcd(&[p, q]));

    let sym = parse_laurent("t^-1 - 3 + t", 12).unwrap();
    println!("t^-1 - 3 + t is associated to its reversal: {}", sym.associated(&sym.reversed()));

    let delta = parse_laurent("t^2 - t + 1", 12).unwrap();
    println!("\n(t^2 - t + 1)(zeta_6) = {}", delta.eval(&eta).unwrap());
    println!("(t^2 - t + 1)(2)      = {}", delta.eval(&CyclotomicNumber::int(2)).unwrap());
}
