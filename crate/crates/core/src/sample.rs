//! Seeded random polynomials for property checks and oracle probes.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use crate::expr::{AmbientRing, Monomial, Polynomial, Rational};

/// Shape of generated polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleParams {
    pub max_terms: usize,
    pub max_exponent: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams { max_terms: 4, max_exponent: 3, coeff_bound: 5 }
    }
}

fn coefficient<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-bound..=bound);
    }
    Rational::from_integer(BigInt::from(c))
}

/// Sum of up to `max_terms` random monomials; never zero.
pub fn random_polynomial<R: Rng + ?Sized>(ambient: &Arc<AmbientRing>, rng: &mut R, params: SampleParams) -> Polynomial {
    let n = rng.gen_range(1..=params.max_terms.max(1));
    let terms: Vec<(Monomial, Rational)> = (0..n)
        .map(|_| {
            let e = (0..ambient.arity()).map(|_| rng.gen_range(0..=params.max_exponent)).collect();
            (Monomial::new(e), coefficient(rng, params.coeff_bound))
        })
        .collect();
    let mut out = Polynomial::zero(ambient);
    for (m, c) in terms {
        out = &out + &Polynomial::monomial(ambient, m, c);
    }
    if out.is_zero() {
        out = Polynomial::one(ambient);
    }
    out
}

/// Random polynomial in the given generators: a sum of scaled products
/// `g₁^{e₁}⋯gₖ^{eₖ}`. Falls back to a constant if everything cancels.
pub fn random_in_generators<R: Rng + ?Sized>(gens: &[Polynomial], rng: &mut R, params: SampleParams) -> Polynomial {
    assert!(!gens.is_empty(), "need at least one generator");
    let ambient = gens[0].ambient().clone();
    let n = rng.gen_range(1..=params.max_terms.max(1));
    let mut out = Polynomial::zero(&ambient);
    for _ in 0..n {
        let mut t = Polynomial::constant(&ambient, coefficient(rng, params.coeff_bound));
        for g in gens {
            let e = rng.gen_range(0..=params.max_exponent);
            if e > 0 {
                t = &t * &g.pow(e);
            }
        }
        out = &out + &t;
    }
    if out.is_zero() {
        out = Polynomial::one(&ambient);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reproducible_and_non_zero() {
        let r = AmbientRing::new(&["x", "y"]).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| random_polynomial(&r, &mut rng, SampleParams::default())).collect::<Vec<_>>()
        };
        let a = draw(7);
        assert_eq!(a, draw(7));
        assert!(a.iter().all(|p| !p.is_zero()));
        assert!(a.iter().all(|p| p.degree_in(0).unwrap() <= 3));
    }

    #[test]
    fn generator_products() {
        let r = AmbientRing::new(&["x", "y"]).unwrap();
        let h = crate::expr::parse("x^2 - y^3", &r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let params = SampleParams { max_terms: 1, max_exponent: 2, coeff_bound: 1 };
        for _ in 0..10 {
            let p = random_in_generators(&[h.clone()], &mut rng, params);
            let k = p.total_degree().unwrap();
            assert!(k % 3 == 0 && k <= 6);
        }
    }
}
