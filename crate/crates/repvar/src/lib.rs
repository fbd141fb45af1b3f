//! Exact computations on representation varieties of finitely presented
//! groups into SL(n) and GL(n).
//!
//! Everything runs over cyclotomic fields Q(zeta_N) with big-rational
//! coordinates, so ranks, kernels and polynomial identities are exact:
//! there is no floating point anywhere in the math core.
//!
//! The main capabilities, bottom up:
//!
//! - [`numbers`]: big rationals, cyclotomic field arithmetic, Laurent
//!   polynomials with gcds over K[t, t^-1], and the text grammar for
//!   field elements.
//! - [`words`]: free-group words, presentations with optional
//!   abelianization data, the presentation parser, and Fox free
//!   differential calculus.
//! - [`linalg`]: fraction-free exact linear algebra (rank, kernel,
//!   solve, determinants) over the field and over Laurent polynomials,
//!   plus Kronecker products and minor gcds.
//! - [`reps`]: verified representations and their constructions (direct
//!   sum, tensor, dual, character twists, symmetric powers, metabelian
//!   builders), characters, and Burnside irreducibility tests with
//!   certificates.
//! - [`cohomology`]: twisted group cohomology in degrees 0-2 from a
//!   presentation, infinitesimal regularity, coboundaries, and the
//!   obstruction calculus for formal deformations.
//! - [`alexander`]: twisted Alexander polynomials from Fox matrices and
//!   the root conditions governing deformations of reducible
//!   representations.
//! - [`catalog`]: an executable library of worked examples (trefoil,
//!   figure-eight, triangle groups, the Lubotzky-Magid group, torus
//!   knots), each with an assertion suite.
//! - [`cli`]: the `repvar` command-line front end.
//!
//! The `examples/` directory has one runnable program per capability;
//! start with `cargo run --example triangle_group_cohomology`.

pub mod alexander;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod linalg;
pub mod numbers;
pub mod reps;
pub mod util;
pub mod words;
