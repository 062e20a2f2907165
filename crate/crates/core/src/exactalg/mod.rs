//! Exact multivariate arithmetic over the integers.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod rational;

pub use gcd::gcd;
pub use monomial::Monomial;
pub use parse::parse_rational;
pub use polynomial::Polynomial;
pub use rational::{poly_sqrt, rf_canonicalize, RationalFunction};

/// Shorthand for the variable `u_v` as a rational function.
pub fn u(v: usize) -> RationalFunction {
    RationalFunction::var(v)
}
