use std::sync::Arc;

use super::{form_is_prime, Degree, DegreeError, DegreeLike};
use crate::expr::{AmbientRing, Polynomial};

/// `δ(Σ aₐxᵅ) = max Σ αᵢdᵢ` for positive weights `dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDegree {
    ambient: Arc<AmbientRing>,
    weights: Vec<i64>,
}

/// Top weighted-homogeneous component of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingForm {
    pub form: Polynomial,
    pub degree: i64,
}

impl WeightedDegree {
    pub fn new(ambient: &Arc<AmbientRing>, weights: Vec<i64>) -> Result<Self, DegreeError> {
        if weights.len() != ambient.arity() {
            return Err(DegreeError::InvalidWeights(format!(
                "{} weights for {} variables",
                weights.len(),
                ambient.arity()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w < 1) {
            return Err(DegreeError::InvalidWeights(format!("weight {w} is not positive")));
        }
        Ok(WeightedDegree { ambient: ambient.clone(), weights })
    }

    pub fn ambient(&self) -> &Arc<AmbientRing> {
        &self.ambient
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Same weights multiplied by `p`.
    pub fn scaled(&self, p: i64) -> Result<Self, DegreeError> {
        WeightedDegree::new(&self.ambient, self.weights.iter().map(|w| w * p).collect())
    }

    fn check(&self, p: &Polynomial) -> Result<(), DegreeError> {
        if p.ambient() != &self.ambient {
            return Err(DegreeError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn eval(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        self.check(p)?;
        Ok(p.terms()
            .map(|(m, _)| Degree::Finite(m.weighted_degree(&self.weights)))
            .max()
            .unwrap_or(Degree::NegInf))
    }

    pub fn leading_form(&self, p: &Polynomial) -> Result<LeadingForm, DegreeError> {
        let degree = self.eval(p)?.finite().ok_or(DegreeError::ZeroPolynomial)?;
        let form = Polynomial::from_terms(
            &self.ambient,
            p.terms()
                .filter(|(m, _)| m.weighted_degree(&self.weights) == degree)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        Ok(LeadingForm { form, degree })
    }

    /// Whether `p` is weighted homogeneous.
    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        let mut it = p.terms().map(|(m, _)| m.weighted_degree(&self.weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Whether the leading form of `h` generates a prime ideal of the
    /// associated graded ring (the polynomial ring itself).
    pub fn step_primality(&self, h: &Polynomial) -> Result<bool, DegreeError> {
        let lf = self.leading_form(h)?;
        if lf.degree == 0 {
            return Ok(false);
        }
        form_is_prime(&lf.form, &self.weights)
    }
}

impl DegreeLike for WeightedDegree {
    fn ambient(&self) -> &Arc<AmbientRing> {
        &self.ambient
    }

    fn degree(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        self.eval(p)
    }

    fn is_semidegree(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn setup(w: Vec<i64>) -> (Arc<AmbientRing>, WeightedDegree) {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let d = WeightedDegree::new(&r, w).unwrap();
        (r, d)
    }

    #[test]
    fn eval_examples() {
        let (r, d) = setup(vec![3, 2]);
        assert_eq!(d.eval(&parse("x1^2 - x2^3", &r).unwrap()).unwrap(), Degree::Finite(6));
        assert_eq!(d.eval(&parse("5", &r).unwrap()).unwrap(), Degree::Finite(0));
        assert_eq!(d.eval(&parse("0", &r).unwrap()).unwrap(), Degree::NegInf);
        let (r, d) = setup(vec![1, 1]);
        assert_eq!(d.eval(&parse("x1 + (x1^2 - x2^3)^2", &r).unwrap()).unwrap(), Degree::Finite(6));
    }

    #[test]
    fn leading_form_examples() {
        let (r, d) = setup(vec![3, 2]);
        let lf = d.leading_form(&parse("x1^2 - x2^3", &r).unwrap()).unwrap();
        assert_eq!((lf.form, lf.degree), (parse("x1^2 - x2^3", &r).unwrap(), 6));
        let lf = d.leading_form(&parse("7", &r).unwrap()).unwrap();
        assert_eq!((lf.form, lf.degree), (parse("7", &r).unwrap(), 0));
        assert_eq!(d.leading_form(&parse("0", &r).unwrap()), Err(DegreeError::ZeroPolynomial));

        let (r, d) = setup(vec![1, 1]);
        let lf = d.leading_form(&parse("x1^2 - x2^3 + x1", &r).unwrap()).unwrap();
        assert_eq!((lf.form, lf.degree), (parse("-x2^3", &r).unwrap(), 3));
    }

    #[test]
    fn primality_examples() {
        let (r, d) = setup(vec![3, 2]);
        assert!(d.step_primality(&parse("x1^2 - x2^3", &r).unwrap()).unwrap());
        let (r, d) = setup(vec![1, 1]);
        assert!(!d.step_primality(&parse("x1^2 - x2^2", &r).unwrap()).unwrap());
        assert!(d.step_primality(&parse("x1", &r).unwrap()).unwrap());
        assert!(!d.step_primality(&parse("x1^2 + x2^2", &r).unwrap()).unwrap());
    }

    #[test]
    fn rejects_bad_weights_and_ambients() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        assert!(WeightedDegree::new(&r, vec![1]).is_err());
        assert!(WeightedDegree::new(&r, vec![1, 0]).is_err());
        let d = WeightedDegree::new(&r, vec![1, 1]).unwrap();
        let other = AmbientRing::new(&["y"]).unwrap();
        assert_eq!(d.eval(&parse("y", &other).unwrap()), Err(DegreeError::AmbientMismatch));
    }
}
