use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Degree, DegreeError, DegreeLike};
use crate::expr::Polynomial;
use crate::sample::{random_in_generators, random_polynomial, SampleParams};

/// First failing instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: &'static str,
    pub f: String,
    pub g: String,
    pub lhs: Degree,
    pub rhs: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub samples: usize,
    pub sum_violations: usize,
    pub product_violations: usize,
    /// Pairs with `δ(fg) ≠ δf + δg`; only a failure for semidegrees.
    pub multiplicativity_failures: usize,
    /// Pairs with `δ(fg) < δf + δg`.
    pub strict_products: usize,
    pub semidegree: bool,
    pub first_counterexample: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.sum_violations == 0
            && self.product_violations == 0
            && (!self.semidegree || self.multiplicativity_failures == 0)
    }

    fn record(&mut self, axiom: &'static str, f: &Polynomial, g: &Polynomial, lhs: Degree, rhs: Degree) {
        if self.first_counterexample.is_none() {
            self.first_counterexample =
                Some(Counterexample { axiom, f: f.to_string(), g: g.to_string(), lhs, rhs });
        }
    }

    /// Checks one pair.
    pub fn check_pair(&mut self, deg: &dyn DegreeLike, f: &Polynomial, g: &Polynomial) -> Result<(), DegreeError> {
        self.samples += 1;
        let (df, dg) = (deg.degree(f)?, deg.degree(g)?);
        let sum = deg.degree(&(f + g))?;
        if sum > df.max(dg) {
            self.sum_violations += 1;
            self.record("sum", f, g, sum, df.max(dg));
        }
        let prod = deg.degree(&(f * g))?;
        let bound = df.add(dg);
        if prod > bound {
            self.product_violations += 1;
            self.record("product", f, g, prod, bound);
        } else if prod < bound {
            self.strict_products += 1;
            self.multiplicativity_failures += 1;
            if self.semidegree {
                self.record("multiplicativity", f, g, prod, bound);
            }
        }
        Ok(())
    }
}

/// Tests the degree-like axioms on `samples` random pairs of polynomials in
/// the ambient variables.
pub fn axiom_check(deg: &dyn DegreeLike, samples: usize, seed: u64) -> Result<AxiomReport, DegreeError> {
    let a = deg.ambient();
    let gens: Vec<Polynomial> = (0..a.arity()).map(|i| Polynomial::var(a, i)).collect();
    axiom_check_with(deg, &gens, samples, seed)
}

/// Like [`axiom_check`], with half of the samples built from products of
/// `generators` so that cancellation-prone inputs are exercised.
pub fn axiom_check_with(
    deg: &dyn DegreeLike,
    generators: &[Polynomial],
    samples: usize,
    seed: u64,
) -> Result<AxiomReport, DegreeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport { semidegree: deg.is_semidegree(), ..AxiomReport::default() };
    let small = SampleParams { max_terms: 3, max_exponent: 2, coeff_bound: 3 };
    for i in 0..samples {
        let (f, g) = if i % 2 == 0 || generators.is_empty() {
            (
                random_polynomial(deg.ambient(), &mut rng, SampleParams::default()),
                random_polynomial(deg.ambient(), &mut rng, SampleParams::default()),
            )
        } else {
            (
                random_in_generators(generators, &mut rng, small),
                random_in_generators(generators, &mut rng, small),
            )
        };
        report.check_pair(deg, &f, &g)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::{IterationStep, SemidegreeChain, Subdegree, WeightedDegree};
    use crate::expr::{parse, AmbientRing};

    #[test]
    fn weighted_degree_is_a_semidegree() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let d = WeightedDegree::new(&r, vec![3, 2]).unwrap();
        let rep = axiom_check(&d, 200, 1).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.multiplicativity_failures, 0);
        assert_eq!(rep.samples, 200);
    }

    #[test]
    fn baby_chain_is_multiplicative() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let c = SemidegreeChain::new(
            WeightedDegree::new(&r, vec![3, 2]).unwrap(),
            vec![IterationStep::new(parse("x1^2 - x2^3", &r).unwrap(), 1)],
        )
        .unwrap();
        let rep = axiom_check_with(&c, &c.generators(), 200, 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.multiplicativity_failures, 0);
    }

    #[test]
    fn maximum_of_two_weights_is_only_subadditive() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let parts = [vec![1, 2], vec![2, 1]]
            .into_iter()
            .map(|w| SemidegreeChain::weighted(WeightedDegree::new(&r, w).unwrap()))
            .collect();
        let d = Subdegree::new(parts).unwrap();
        let f = parse("x1 + x2", &r).unwrap();
        assert_eq!(d.eval(&(&f * &f)).unwrap(), Degree::Finite(4));
        assert_eq!(d.eval(&f).unwrap(), Degree::Finite(2));

        let mut rep = AxiomReport::default();
        rep.check_pair(&d, &parse("x1^2", &r).unwrap(), &parse("x2^2", &r).unwrap()).unwrap();
        assert_eq!(rep.strict_products, 1);
        assert!(rep.passed());

        let rep = axiom_check(&d, 200, 3).unwrap();
        assert!(rep.passed());
        assert!(rep.strict_products > 0);
    }
}
