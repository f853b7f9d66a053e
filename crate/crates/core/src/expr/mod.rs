//! Exact rational polynomials: arithmetic, parsing and printing, bivariate
//! gcd, and Sylvester resultants.

mod gcd;
mod parse;
mod poly;
mod resultant;
pub(crate) mod univariate;

use thiserror::Error;

pub use gcd::gcd;
pub use parse::parse;
pub use poly::{arith, AmbientRing, ArithOp, Monomial, Polynomial, MAX_EXPONENT};
pub(crate) use poly::fmt_rational;
pub use resultant::{bareiss_determinant, resultant, resultant_in, sylvester_matrix};

/// Reduced fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {position}: expected {expected}, found {found}")]
    Syntax { position: usize, expected: String, found: String },
    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },
    #[error("operands live in different ambient rings")]
    AmbientMismatch,
    #[error("exponent exceeds 2^31")]
    ExponentOverflow,
    #[error("invalid ambient ring: {0}")]
    InvalidAmbient(String),
    #[error("polynomial has degree zero in the eliminated variable")]
    DegreeZero,
    #[error("operation supports at most two variables, got {0}")]
    UnsupportedArity(usize),
}

/// Formats a rational as `p` or `p/q`.
pub fn rational_to_string(c: &Rational) -> String {
    fmt_rational(c)
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d == 0.into() {
        return None;
    }
    Some(Rational::new(n, d))
}
