//! Laurent polynomials over a cyclotomic field.
//!
//! These carry Alexander polynomials and the entries of twisted Fox
//! matrices. The ring K[t, t^-1] is a PID whose units are c*t^k, so
//! equality of invariants is tested on a normalized associate-class
//! representative: lowest exponent zero and monic top coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CyclotomicNumber;
use super::rational::forward_owned_binop;
use super::NumberError;

/// Element of K[t, t^-1]; `coeffs[i]` is the coefficient of
/// `t^(lowest + i)`. The zero polynomial stores no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    lowest: i64,
    coeffs: Vec<CyclotomicNumber>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            lowest: 0,
            coeffs: vec![],
        }
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::int(1))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(CyclotomicNumber::int(n))
    }

    /// c * t^exp
    pub fn monomial(exp: i64, c: CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lowest: exp,
            coeffs: vec![c],
        }
    }

    pub fn variable() -> Self {
        Self::monomial(1, CyclotomicNumber::int(1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, CyclotomicNumber)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out = &out + &Self::monomial(e, c);
        }
        out
    }

    fn trimmed(lowest: i64, mut coeffs: Vec<CyclotomicNumber>) -> Self {
        let mut low = lowest;
        while coeffs.first().is_some_and(CyclotomicNumber::is_zero) {
            coeffs.remove(0);
            low += 1;
        }
        while coeffs.last().is_some_and(CyclotomicNumber::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            Self::zero()
        } else {
            LaurentPoly {
                lowest: low,
                coeffs,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    pub fn highest_exponent(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> CyclotomicNumber {
        let idx = exp - self.lowest;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            CyclotomicNumber::int(0)
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicNumber)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.lowest + i as i64, c))
    }

    /// `c * t^k` for nonzero `c`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> Option<&CyclotomicNumber> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The normalized associate-class representative: lowest exponent 0,
    /// monic leading coefficient. Zero normalizes to zero.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead_inv = self
            .coeffs
            .last()
            .unwrap()
            .inverse()
            .expect("nonzero leading coefficient");
        LaurentPoly {
            lowest: 0,
            coeffs: self.coeffs.iter().map(|c| c * &lead_inv).collect(),
        }
    }

    /// Associate-class equality, the `p` and `q` differ by a unit relation.
    pub fn associated(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Substitute t -> t^-1.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::trimmed(-self.highest_exponent(), coeffs)
    }

    /// Formal derivative d/dt.
    pub fn derivative(&self) -> Self {
        let terms: Vec<(i64, CyclotomicNumber)> = self
            .terms()
            .map(|(e, c)| (e - 1, c * CyclotomicNumber::int(e)))
            .collect();
        Self::from_terms(terms)
    }

    /// Exact evaluation at a nonzero field element.
    pub fn eval(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber, NumberError> {
        if x.is_zero() {
            return Err(NumberError::EvalAtZero);
        }
        if self.is_zero() {
            return Ok(CyclotomicNumber::int(0));
        }
        // Horner on the polynomial part, then shift by x^lowest
        let mut acc = CyclotomicNumber::int(0);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        Ok(&acc * &x.pow(self.lowest))
    }

    /// Quotient when `divisor` divides exactly, as Laurent polynomials.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let lead_inv = divisor.coeffs.last().unwrap().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let mut quot = vec![CyclotomicNumber::int(0); rem.len() - dlen + 1];
        for i in (dlen - 1..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &q * d;
                rem[i - (dlen - 1) + j] -= &t;
            }
            quot[i - (dlen - 1)] = q;
        }
        if rem.iter().all(CyclotomicNumber::is_zero) {
            Some(Self::trimmed(self.lowest - divisor.lowest, quot))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn euclid_rem(a: &Self, b: &Self) -> Self {
        // remainder of the polynomial parts; b nonzero
        let blen = b.coeffs.len();
        let lead_inv = b.coeffs.last().unwrap().inverse().unwrap();
        let mut rem = a.coeffs.clone();
        for i in (blen - 1..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for (j, d) in b.coeffs.iter().enumerate() {
                let t = &q * d;
                rem[i - (blen - 1) + j] -= &t;
            }
        }
        Self::trimmed(0, rem)
    }

    /// Greatest common divisor in K[t, t^-1], returned normalized.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalize();
        let mut b = other.normalize();
        while !b.is_zero() {
            let r = if a.coeffs.len() >= b.coeffs.len() {
                Self::euclid_rem(&a, &b)
            } else {
                a.clone()
            };
            a = b;
            b = r.normalize();
        }
        a.normalize()
    }
}

/// Normalized gcd of a list; the empty or all-zero list has gcd 0.
pub fn laurent_gcd(ps: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for p in ps {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() {
            p.normalize()
        } else {
            acc.gcd(p)
        };
        if acc.is_unit() {
            return LaurentPoly::one();
        }
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.lowest.min(rhs.lowest);
        let high = self.highest_exponent().max(rhs.highest_exponent());
        let mut coeffs = vec![CyclotomicNumber::int(0); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly::trimmed(low, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            vec![CyclotomicNumber::int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        LaurentPoly::trimmed(self.lowest + rhs.lowest, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(LaurentPoly, Add, add);
forward_owned_binop!(LaurentPoly, Sub, sub);
forward_owned_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let (lead, body) = match c.as_rational() {
                Some(r) if r < &super::Rational::zero() => (" - ", format!("{}", r.abs())),
                Some(r) => (" + ", format!("{r}")),
                None => (" + ", format!("({c})")),
            };
            if first {
                if lead == " - " {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{lead}")?;
            }
            let coeff_is_one = body == "1";
            match (e, coeff_is_one) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{body}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{body}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::CyclotomicNumber as Cyc;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Cyc::int(c))))
    }

    #[test]
    fn textbook_gcd() {
        // gcd(t^2 - 1, t^3 - 1) = t - 1
        let a = poly(&[(2, 1), (0, -1)]);
        let b = poly(&[(3, 1), (0, -1)]);
        assert_eq!(laurent_gcd(&[a, b]), poly(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn gcd_of_single_poly_is_its_normalization() {
        let p = poly(&[(3, 2), (1, -2)]);
        // 2t^3 - 2t = 2t(t^2 - 1): normalized representative is t^2 - 1
        assert_eq!(laurent_gcd(&[p]), poly(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn gcd_of_associates() {
        // oracle: euclidean step on 2t^2 - 2t + 2 leaves t^2 - t + 1
        let p = poly(&[(2, 1), (1, -1), (0, 1)]);
        let q = poly(&[(2, 2), (1, -2), (0, 2)]);
        assert_eq!(laurent_gcd(&[p.clone(), q]), p);
        assert!(laurent_gcd(&[]).is_zero());
        assert!(laurent_gcd(&[LaurentPoly::zero()]).is_zero());
    }

    #[test]
    fn gcd_divides_inputs() {
        let inputs = [
            poly(&[(4, 1), (2, 1), (0, 1)]),
            poly(&[(3, 1), (0, 1)]),
            poly(&[(-1, 1), (1, 1)]),
        ];
        let g = laurent_gcd(&inputs);
        for p in &inputs {
            assert!(g.divides(p));
        }
    }

    #[test]
    fn eval_matches_oracle() {
        // t^2 - t + 1 vanishes at the primitive 6th root of unity
        let p = poly(&[(2, 1), (1, -1), (0, 1)]);
        let eta = Cyc::root_of_unity(6, 1);
        assert!(p.eval(&eta).unwrap().is_zero());
        // evaluation at 1 sums the coefficients
        assert_eq!(p.eval(&Cyc::int(1)).unwrap(), Cyc::int(1));
        // t^2 - 3t + 1 at zeta_6: oracle value in the power basis
        let q = poly(&[(2, 1), (1, -3), (0, 1)]);
        let expected = eta.pow(2) - Cyc::int(3) * &eta + Cyc::int(1);
        assert_eq!(q.eval(&eta).unwrap(), expected);
        assert!(!q.eval(&eta).unwrap().is_zero());
        assert!(p.eval(&Cyc::int(0)).is_err());
    }

    #[test]
    fn normalization_idempotent() {
        let p = poly(&[(-2, 3), (0, -6), (1, 3)]);
        let n = p.normalize();
        assert_eq!(n.lowest_exponent(), 0);
        assert!(n.leading_coeff().unwrap().is_one());
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn reversal_and_derivative() {
        let p = poly(&[(2, 1), (1, -3), (0, 1)]);
        // symmetric polynomial: p(t^-1) is associated to p(t)
        assert!(p.reversed().associated(&p));
        assert_eq!(p.derivative(), poly(&[(1, 2), (0, -3)]));
    }

    #[test]
    fn exact_division() {
        let p = poly(&[(2, 1), (1, -1), (0, 1)]);
        let q = poly(&[(1, 1), (0, 1)]);
        let prod = &p * &q;
        assert_eq!(prod.div_exact(&p).unwrap(), q);
        assert!(p.div_exact(&q).is_none());
    }
}
