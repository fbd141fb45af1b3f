//! Formal K-linear combinations of free-group words and the Fox
//! derivative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::numbers::CyclotomicNumber;

use super::Word;

/// An element of the group ring `K[F]`: a finite K-linear combination of
/// words. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, CyclotomicNumber>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, CyclotomicNumber::int(1));
        GroupRingElement { terms }
    }

    pub fn term(w: Word, c: CyclotomicNumber) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> CyclotomicNumber {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| CyclotomicNumber::int(0))
    }

    fn add_term(&mut self, w: Word, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Left translation by a word.
    pub fn translate(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(w.mul(v), c.clone());
        }
        out
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{w:?}")?;
        }
        Ok(())
    }
}

/// The Fox derivative of a word with respect to one generator.
///
/// Uses the left product rule d(uv)/dx = du/dx + u dv/dx, together with
/// dx/dx = 1 and d(x^-1)/dx = -x^-1.
pub fn fox_derivative(w: &Word, gen: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &(g, s) in w.letters() {
        if g == gen {
            if s > 0 {
                out.add_term(prefix.clone(), CyclotomicNumber::int(1));
            } else {
                // prefix * x^-1 with coefficient -1
                out.add_term(
                    prefix.mul(&Word::from_letters([(g, -1)])),
                    CyclotomicNumber::int(-1),
                );
            }
        }
        prefix = prefix.mul(&Word::from_letters([(g, s)]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[(usize, i8)]) -> Word {
        Word::from_letters(letters.iter().copied())
    }

    #[test]
    fn fox_axioms() {
        let a = Word::generator(0);
        // da/da = 1, db/da = 0
        assert_eq!(fox_derivative(&a, 0), GroupRingElement::one());
        assert!(fox_derivative(&Word::generator(1), 0).is_zero());
        // d(a^-1)/da = -a^-1
        assert_eq!(
            fox_derivative(&a.inverse(), 0),
            GroupRingElement::term(a.inverse(), CyclotomicNumber::int(-1))
        );
    }

    #[test]
    fn cube_derivative() {
        // d(a^3)/da = 1 + a + a^2
        let a3 = Word::generator(0).pow(3);
        let d = fox_derivative(&a3, 0);
        let expected = &(&GroupRingElement::one()
            + &GroupRingElement::from_word(Word::generator(0)))
            + &GroupRingElement::from_word(Word::generator(0).pow(2));
        assert_eq!(d, expected);
    }

    #[test]
    fn conjugate_derivative() {
        // oracle by the product rule: d(aba^-1)/da = 1 - aba^-1
        let w = word(&[(0, 1), (1, 1), (0, -1)]);
        let d = fox_derivative(&w, 0);
        let expected =
            &GroupRingElement::one() - &GroupRingElement::from_word(w.clone());
        assert_eq!(d, expected);
    }

    #[test]
    fn product_rule_on_random_words() {
        let samples = [
            word(&[(0, 1), (1, -1)]),
            word(&[(1, 1), (1, 1), (0, -1)]),
            word(&[(0, -1), (1, 1), (0, 1), (1, 1)]),
            Word::identity(),
        ];
        for u in &samples {
            for v in &samples {
                for x in 0..2 {
                    let lhs = fox_derivative(&u.mul(v), x);
                    let rhs = &fox_derivative(u, x)
                        + &fox_derivative(v, x).translate(u);
                    assert_eq!(lhs, rhs, "product rule for {u:?} * {v:?}");
                }
            }
        }
    }

    #[test]
    fn fundamental_identity() {
        // w - 1 = sum_i (dw/dx_i) (x_i - 1) in the group ring
        let samples = [
            word(&[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)]),
            word(&[(0, 1), (1, 1), (0, -1), (1, -1)]),
            word(&[(2, -1), (0, 1), (2, 1)]),
        ];
        for w in &samples {
            let lhs = &GroupRingElement::from_word(w.clone()) - &GroupRingElement::one();
            let mut rhs = GroupRingElement::zero();
            for x in 0..3 {
                let xi = &GroupRingElement::from_word(Word::generator(x))
                    - &GroupRingElement::one();
                rhs = &rhs + &(&fox_derivative(w, x) * &xi);
            }
            assert_eq!(lhs, rhs);
        }
    }
}
