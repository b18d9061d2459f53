//! Exact generalized hypergeometric Bernoulli numbers `B_{N,n,χ}` and
//! polynomials `B_{N,n,χ}(x)` attached to Dirichlet characters.
//!
//! Everything is computed over `Q` or a cyclotomic field `Q(ζ_m)` with no
//! rounding, so independent formulas for the same quantity can be compared
//! with plain equality.
//!
//! * [`exactnum`]: rationals, cyclotomic fields, the [`Ring`] trait.
//! * [`polynomial`]: dense polynomials over any [`Ring`].
//! * [`powerseries`]: truncated power series and the generating-function oracle.
//! * [`dirichlet`]: unit groups, character enumeration, twisted power sums.
//! * [`hyperbernoulli`]: the character-free numbers `B_{N,n}` and helpers.
//! * [`genbernoulli`]: every route to `B_{N,n,χ}` and `B_{N,n,χ}(x)`.
//! * [`closed_forms`]: closed forms for small `n`, used as fixtures.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closed_forms;
pub mod dirichlet;
mod error;
pub mod exactnum;
pub mod genbernoulli;
pub mod hessenberg;
pub mod hyperbernoulli;
pub mod polynomial;
pub mod powerseries;

pub use dirichlet::{enumerate_characters, DirichletCharacter, UnitGroup};
pub use error::Error;
pub use exactnum::{CyclotomicField, CyclotomicNumber, Rational, Ring};
pub use genbernoulli::{GHBPolynomial, NumberMethod, PolyMethod};
pub use polynomial::Polynomial;
pub use powerseries::TruncatedSeries;
