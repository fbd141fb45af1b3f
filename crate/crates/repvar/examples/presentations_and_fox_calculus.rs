//! Group presentations, free-group words and Fox derivatives.
//!
//! ```bash
//! cargo run --example presentations_and_fox_calculus
//! ```

use repvar::words::{fox_derivative, parse_presentation, GroupRingElement, Word};

fn main() {
    let trefoil = parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;").unwrap();
    println!("trefoil group: {trefoil}");
    println!("deficiency: {}", trefoil.deficiency());

    // the meridian x y^-1 has linking number one
    let m = Word::generator(0).mul(&Word::generator(1).inverse());
    println!(
        "phi({}) = {}",
        trefoil.word_to_string(&m),
        trefoil.abelianize(&m).unwrap()
    );

    let figure8 = parse_presentation(
        "gens t,a,b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;",
    )
    .unwrap();
    let longitude = Word::commutator(&Word::generator(1), &Word::generator(2));
    println!(
        "figure-eight longitude {} has phi = {}",
        figure8.word_to_string(&longitude),
        figure8.abelianize(&longitude).unwrap()
    );

    // Fox derivatives with the left product rule
    let a = Word::generator(0);
    let a3 = a.pow(3);
    println!("\nd(a^3)/da = {}", fox_derivative(&a3, 0));

    let aba = Word::from_letters([(0, 1), (1, 1), (0, -1)]);
    println!("d(aba^-1)/da = {}", fox_derivative(&aba, 0));
    println!("d(aba^-1)/db = {}", fox_derivative(&aba, 1));

    // the fundamental identity w - 1 = sum_i dw/dx_i (x_i - 1)
    let w = Word::from_letters([(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)]);
    let lhs = &GroupRingElement::from_word(w.clone()) - &GroupRingElement::one();
    let mut rhs = GroupRingElement::zero();
    for x in 0..2 {
        let xi = &GroupRingElement::from_word(Word::generator(x)) - &GroupRingElement::one();
        rhs = &rhs + &(&fox_derivative(&w, x) * &xi);
    }
    println!("\nfundamental identity on x^2 y^-3: {}", lhs == rhs);
}
