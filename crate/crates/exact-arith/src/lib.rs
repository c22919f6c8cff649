//! Exact rational arithmetic, sparse multivariate polynomials in grevlex order,
//! and Laurent polynomials in one distinguished variable.

mod error;
mod laurent;
mod monomial;
mod parse;
mod poly;
mod rational;
mod ring;

pub use error::ArithError;
pub use laurent::{laurent_substitute, LaurentPolynomial};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::{poly_arith, Accumulator, ArithOp, Polynomial};
pub use rational::Rational;
pub use ring::{Ring, RingContext};

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// Shorthand for `n/d`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}
