//! Degree-like functions on polynomial rings: weighted degrees, iterated
//! semidegrees and their maxima (subdegrees).
//!
//! A degree-like function satisfies `δ(f+g) ≤ max(δf, δg)` and
//! `δ(fg) ≤ δf + δg`; a semidegree makes the second an equality. The zero
//! polynomial has degree [`Degree::NegInf`].

mod axioms;
mod chain;
mod primality;
mod weighted;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::expr::{AmbientRing, ExprError, Polynomial};

pub use axioms::{axiom_check, AxiomReport, Counterexample};
pub use chain::{ChainConfig, IterationStep, SemidegreeChain, StepConfig};
pub use primality::form_is_prime;
pub use weighted::{LeadingForm, WeightedDegree};

/// Value of a degree-like function: an integer or `−∞` (zero polynomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInf => None,
        }
    }

    pub fn plus(self, k: i64) -> Degree {
        match self {
            Degree::Finite(d) => Degree::Finite(d + k),
            Degree::NegInf => Degree::NegInf,
        }
    }

    pub fn add(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("operands live in different ambient rings")]
    AmbientMismatch,
    #[error("the zero polynomial has no leading form")]
    ZeroPolynomial,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("step {step}: iteration polynomial is constant")]
    ConstantStep { step: usize },
    #[error("step {step}: weight {w} must satisfy 0 < w < {stage_degree}")]
    WeightWindowViolation { step: usize, w: i64, stage_degree: i64 },
    #[error("step {step}: leading form {form} does not generate a prime ideal")]
    NonPrimeLeadingForm { step: usize, form: String },
    #[error("primality certificate supports at most two graded variables, got {0}")]
    UnsupportedArity(usize),
    #[error("unsupported chain: {0}")]
    UnsupportedChain(String),
}

/// Common interface of the evaluators, used by the axiom checker and the
/// Okounkov construction.
pub trait DegreeLike {
    fn ambient(&self) -> &Arc<AmbientRing>;
    fn degree(&self, p: &Polynomial) -> Result<Degree, DegreeError>;
    /// Whether the evaluator is certified multiplicative.
    fn is_semidegree(&self) -> bool;
}

/// Maximum of finitely many semidegrees.
#[derive(Debug, Clone)]
pub struct Subdegree {
    parts: Vec<SemidegreeChain>,
}

impl Subdegree {
    pub fn new(parts: Vec<SemidegreeChain>) -> Result<Self, DegreeError> {
        let first = parts
            .first()
            .ok_or_else(|| DegreeError::InvalidWeights("subdegree needs at least one part".into()))?;
        if parts.iter().any(|c| c.ambient() != first.ambient()) {
            return Err(DegreeError::AmbientMismatch);
        }
        Ok(Subdegree { parts })
    }

    pub fn parts(&self) -> &[SemidegreeChain] {
        &self.parts
    }

    pub fn eval(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        let mut best = Degree::NegInf;
        for c in &self.parts {
            best = best.max(c.eval(p)?);
        }
        Ok(best)
    }
}

impl DegreeLike for Subdegree {
    fn ambient(&self) -> &Arc<AmbientRing> {
        self.parts[0].ambient()
    }

    fn degree(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        self.eval(p)
    }

    fn is_semidegree(&self) -> bool {
        self.parts.len() == 1
    }
}

/// `max` of the chain values over all parts.
pub fn subdegree_eval(parts: &[SemidegreeChain], p: &Polynomial) -> Result<Degree, DegreeError> {
    Subdegree::new(parts.to_vec())?.eval(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn degree_order_puts_neg_inf_first() {
        assert!(Degree::NegInf < Degree::Finite(-1000));
        assert_eq!(Degree::NegInf.plus(5), Degree::NegInf);
        assert_eq!(Degree::Finite(2).add(Degree::Finite(3)), Degree::Finite(5));
        assert_eq!(Degree::NegInf.to_string(), "-inf");
    }

    #[test]
    fn subdegree_examples() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let a = SemidegreeChain::weighted(WeightedDegree::new(&r, vec![1, 2]).unwrap());
        let b = SemidegreeChain::weighted(WeightedDegree::new(&r, vec![2, 1]).unwrap());
        let x1x2 = parse("x1*x2", &r).unwrap();
        assert_eq!(subdegree_eval(&[a.clone(), b], &x1x2).unwrap(), Degree::Finite(3));
        let p = parse("x1^3 + x2", &r).unwrap();
        assert_eq!(subdegree_eval(&[a.clone()], &p).unwrap(), a.eval(&p).unwrap());

        let plain = SemidegreeChain::weighted(WeightedDegree::new(&r, vec![1, 1]).unwrap());
        let baby = SemidegreeChain::new(
            WeightedDegree::new(&r, vec![3, 2]).unwrap(),
            vec![IterationStep::new(parse("x1^2 - x2^3", &r).unwrap(), 1)],
        )
        .unwrap();
        let h = parse("x1^2 - x2^3", &r).unwrap();
        assert_eq!(subdegree_eval(&[plain, baby], &h).unwrap(), Degree::Finite(3));
        assert!(subdegree_eval(&[], &h).is_err());
    }
}
