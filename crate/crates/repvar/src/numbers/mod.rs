//! Exact arithmetic: big rationals, cyclotomic fields Q(zeta_N), and
//! Laurent polynomials over them.
//!
//! Everything downstream (linear algebra, cohomology, Alexander
//! polynomials) runs on these types; there is no floating point anywhere
//! in the math core. All values are immutable after construction and all
//! operations are pure, so they can be shared freely across threads.

mod cyclotomic;
mod laurent;
mod parse;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use laurent::{laurent_gcd, LaurentPoly};
pub use parse::{parse_field_element, parse_laurent};
pub use rational::Rational;

/// Default cyclotomic context: Q(zeta_24) contains i, omega, eta and the
/// primitive 12th roots that the catalog entries use.
pub const DEFAULT_FIELD_ORDER: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation of a Laurent polynomial at zero")]
    EvalAtZero,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zeta({found}) does not embed into the context field Q(zeta_{context})")]
    UnrepresentableInput { found: u32, context: u32 },
}
