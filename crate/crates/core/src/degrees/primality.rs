use num_integer::Integer;

use super::DegreeError;
use crate::expr::Polynomial;

/// Decides whether a weighted-homogeneous form in one or two variables
/// generates a prime ideal over the algebraic closure of ℚ.
///
/// After stripping the monomial factor `u^p v^q`, a bivariate form of
/// weights `(a, b)` splits over the closure into factors `u^{b'} − λ v^{a'}`
/// with `a' = a/g`, `b' = b/g`, `g = gcd(a, b)`. It is prime exactly when it
/// is a single variable, or has no monomial factor and exactly one such
/// branch.
pub fn form_is_prime(form: &Polynomial, weights: &[i64]) -> Result<bool, DegreeError> {
    if form.is_zero() {
        return Err(DegreeError::ZeroPolynomial);
    }
    match form.arity() {
        1 => {
            if form.num_terms() != 1 {
                return Err(DegreeError::InvalidWeights("form is not weighted homogeneous".into()));
            }
            let (m, _) = form.leading_term().expect("non-zero");
            Ok(m.exponents()[0] == 1)
        }
        2 => {
            let degs: Vec<i64> = form.terms().map(|(m, _)| m.weighted_degree(weights)).collect();
            if degs.windows(2).any(|w| w[0] != w[1]) {
                return Err(DegreeError::InvalidWeights("form is not weighted homogeneous".into()));
            }
            let min_u = form.terms().map(|(m, _)| m.exponents()[0]).min().expect("non-zero");
            let min_v = form.terms().map(|(m, _)| m.exponents()[1]).min().expect("non-zero");
            if form.num_terms() == 1 {
                return Ok(min_u + min_v == 1);
            }
            if min_u + min_v > 0 {
                return Ok(false);
            }
            let max_u = form.terms().map(|(m, _)| m.exponents()[0]).max().expect("non-zero");
            let b_reduced = weights[1] / weights[0].gcd(&weights[1]);
            Ok(i64::from(max_u) == b_reduced)
        }
        n => Err(DegreeError::UnsupportedArity(n)),
    }
}
