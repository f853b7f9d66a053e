//! Bezout-type bounds on the number of isolated points in a fiber
//! `f⁻¹(a)` of a polynomial map `f = (f₁, …, fₙ)`, and the check deciding
//! whether a bound is attained.
//!
//! For a semidegree `δ` with completion data `D/dⁿ` the bound is
//! `(D/dⁿ)·∏ δ(fᵢ)`. The weighted case has `D/dⁿ = 1/∏ dⱼ`; an iterated
//! semidegree multiplies this by `∏ δᵢ₋₁(hᵢ)/wᵢ`.

mod exactness;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::degrees::{DegreeError, SemidegreeChain, WeightedDegree};
use crate::expr::{rational_to_string, ExprError, Polynomial, Rational};
use crate::polytope::{mixed_volume, newton_polygon, okounkov_polygon, MonomialValuation, PolytopeError};

pub use exactness::{exactness_check, iterated_exactness_check};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("system has {got} polynomials but the ring has {expected} variables")]
    SystemSize { expected: usize, got: usize },
    #[error("component f{index} is constant")]
    ConstantComponent { index: usize },
    #[error("component f{index} has non-positive degree {degree}")]
    NonPositiveDegree { index: usize, degree: String },
    #[error("operands live in different ambient rings")]
    AmbientMismatch,
    #[error("shift has {got} coordinates, expected {expected}")]
    ShiftSize { expected: usize, got: usize },
    #[error("exactness check needs two variables, got {0}")]
    UnsupportedArity(usize),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMethod {
    Weighted,
    Iterated,
    Bkk,
    Okounkov,
}

impl BoundMethod {
    pub const ALL: [BoundMethod; 4] = [BoundMethod::Weighted, BoundMethod::Iterated, BoundMethod::Bkk, BoundMethod::Okounkov];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundMethod::Weighted => "weighted",
            BoundMethod::Iterated => "iterated",
            BoundMethod::Bkk => "bkk",
            BoundMethod::Okounkov => "okounkov",
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BoundMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        BoundMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method `{s}` (expected weighted, iterated, bkk or okounkov)"))
    }
}

/// Whether the bound is known to be attained for generic `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    ProvenExact,
    NotProven,
    ViolatedPrecondition,
}

impl Exactness {
    pub fn as_str(self) -> &'static str {
        match self {
            Exactness::ProvenExact => "proven-exact",
            Exactness::NotProven => "not-proven",
            Exactness::ViolatedPrecondition => "violated-precondition",
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn ser_rational<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_to_string(v))
}

/// Serializes as `{"method", "value", "exact", "trail"}` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub method: BoundMethod,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    pub exact: Exactness,
    pub trail: Vec<String>,
    #[serde(skip)]
    pub system: Vec<Polynomial>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The value as an integer, if it is one.
    pub fn integer_value(&self) -> Option<i64> {
        if self.value.is_integer() {
            i64::try_from(self.value.to_integer()).ok()
        } else {
            None
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "method: {}", self.method)?;
        writeln!(f, "value: {}", rational_to_string(&self.value))?;
        writeln!(f, "exact: {}", self.exact)?;
        for line in &self.trail {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn check_system(ambient: &std::sync::Arc<crate::expr::AmbientRing>, system: &[Polynomial]) -> Result<(), BoundError> {
    if system.len() != ambient.arity() {
        return Err(BoundError::SystemSize { expected: ambient.arity(), got: system.len() });
    }
    for (i, f) in system.iter().enumerate() {
        if f.ambient() != ambient {
            return Err(BoundError::AmbientMismatch);
        }
        if f.is_constant() {
            return Err(BoundError::ConstantComponent { index: i + 1 });
        }
    }
    Ok(())
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// `∏ δ(fᵢ) / ∏ dⱼ`.
pub fn weighted_bound(delta: &WeightedDegree, system: &[Polynomial]) -> Result<BoundReport, BoundError> {
    check_system(delta.ambient(), system)?;
    let mut degs = Vec::with_capacity(system.len());
    for f in system {
        degs.push(delta.eval(f)?.finite().expect("non-zero"));
    }
    let num: i64 = degs.iter().product();
    let den: i64 = delta.weights().iter().product();
    let value = Rational::new(num.into(), den.into());
    let exact = match exactness_check(delta, system) {
        Ok(e) => e,
        Err(BoundError::UnsupportedArity(_)) => Exactness::ViolatedPrecondition,
        Err(e) => return Err(e),
    };
    let trail = vec![
        format!("weights ({})", join(delta.weights(), ", ")),
        format!("degrees ({})", join(&degs, ", ")),
        format!("bound = {} / {} = {}", join(&degs, "*"), join(delta.weights(), "*"), rational_to_string(&value)),
    ];
    Ok(BoundReport { method: BoundMethod::Weighted, value, exact, trail, system: system.to_vec() })
}

/// `D/dⁿ = (1/∏ δ₀(xⱼ))·∏ δᵢ₋₁(hᵢ)/wᵢ`. Step validity (prime leading forms,
/// weight window) is enforced when the chain is built.
pub fn iterated_ratio(chain: &SemidegreeChain) -> Rational {
    let base: i64 = chain.base().weights().iter().product();
    let mut r = Rational::new(1.into(), base.into());
    for (e, step) in chain.stage_degrees().into_iter().zip(chain.steps()) {
        r *= Rational::new(e.into(), step.w.into());
    }
    r
}

fn chain_degrees(chain: &SemidegreeChain, system: &[Polynomial]) -> Result<Vec<i64>, BoundError> {
    check_system(chain.ambient(), system)?;
    let mut degs = Vec::with_capacity(system.len());
    for (i, f) in system.iter().enumerate() {
        let d = chain.eval(f)?;
        match d.finite() {
            Some(v) if v > 0 => degs.push(v),
            _ => return Err(BoundError::NonPositiveDegree { index: i + 1, degree: d.to_string() }),
        }
    }
    Ok(degs)
}

fn chain_exactness(chain: &SemidegreeChain, system: &[Polynomial]) -> Result<Exactness, BoundError> {
    match iterated_exactness_check(chain, system) {
        Err(BoundError::UnsupportedArity(_)) => Ok(Exactness::ViolatedPrecondition),
        other => other,
    }
}

/// `iterated_ratio(chain)·∏ δ(fᵢ)`.
pub fn iterated_bound(chain: &SemidegreeChain, system: &[Polynomial]) -> Result<BoundReport, BoundError> {
    let degs = chain_degrees(chain, system)?;
    let ratio = iterated_ratio(chain);
    let value = &ratio * int(degs.iter().product());
    let mut trail = vec![format!("base weights ({})", join(chain.base().weights(), ", "))];
    for (i, (e, step)) in chain.stage_degrees().into_iter().zip(chain.steps()).enumerate() {
        trail.push(format!("step {}: h = {}, previous degree {e}, weight {}", i + 1, step.h, step.w));
    }
    trail.push(format!("D/d^n = {}", rational_to_string(&ratio)));
    trail.push(format!("degrees ({})", join(&degs, ", ")));
    trail.push(format!("bound = {} * {} = {}", rational_to_string(&ratio), join(&degs, "*"), rational_to_string(&value)));
    let exact = chain_exactness(chain, system)?;
    Ok(BoundReport { method: BoundMethod::Iterated, value, exact, trail, system: system.to_vec() })
}

/// Mixed area of the Newton polygons of `fᵢ − aᵢ`.
pub fn bkk_bound(system: &[Polynomial], shift: &[Rational]) -> Result<BoundReport, BoundError> {
    let ambient = system.first().map(|f| f.ambient().clone()).ok_or(BoundError::SystemSize { expected: 2, got: 0 })?;
    if ambient.arity() != 2 {
        return Err(BoundError::UnsupportedArity(ambient.arity()));
    }
    check_system(&ambient, system)?;
    if shift.len() != 2 {
        return Err(BoundError::ShiftSize { expected: 2, got: shift.len() });
    }
    let mut trail = Vec::new();
    if shift.iter().any(Zero::is_zero) {
        trail.push("shift has a zero coordinate; polygons taken from the resulting supports".to_string());
    }
    let mut polys = Vec::with_capacity(2);
    for (i, (f, a)) in system.iter().zip(shift).enumerate() {
        let g = f - &Polynomial::constant(&ambient, a.clone());
        let p = newton_polygon(&g)?;
        trail.push(format!("P{} area {}: {}", i + 1, rational_to_string(&p.area()), p.vertices().iter().map(|v| format!("({v})")).collect::<Vec<_>>().join(" ")));
        polys.push(p);
    }
    let value = mixed_volume(&polys[0], &polys[1]);
    trail.push(format!("mixed area = {}", rational_to_string(&value)));
    Ok(BoundReport { method: BoundMethod::Bkk, value, exact: Exactness::NotProven, trail, system: system.to_vec() })
}

/// `(2·area(Δ)/d²)·∏ δ(fᵢ)`, with `Δ` the Okounkov polygon of the chain.
pub fn okounkov_bound(
    chain: &SemidegreeChain,
    system: &[Polynomial],
    nu: &MonomialValuation,
    d: i64,
    cutoff: u32,
) -> Result<BoundReport, BoundError> {
    let degs = chain_degrees(chain, system)?;
    let ok = okounkov_polygon(chain, nu, d, cutoff)?;
    let twice = ok.twice_area();
    let ratio = &twice / int(d * d);
    let value = &ratio * int(degs.iter().product());
    let trail = vec![
        format!("polygon {}", ok.polygon.vertices().iter().map(|v| format!("({v})")).collect::<Vec<_>>().join(" ")),
        format!("2*area = {} at d = {d}, stable at cutoff {}", rational_to_string(&twice), ok.cutoff),
        format!("D/d^n = {}", rational_to_string(&ratio)),
        format!("bound = {} * {} = {}", rational_to_string(&ratio), join(&degs, "*"), rational_to_string(&value)),
    ];
    let exact = chain_exactness(chain, system)?;
    debug_assert!(!value.is_negative());
    Ok(BoundReport { method: BoundMethod::Okounkov, value, exact, trail, system: system.to_vec() })
}

/// `f_k = (x1 + (x1² − x2³)², (x1² − x2³)^k)` over `x1, x2`.
pub fn fk_system(k: u32) -> Vec<Polynomial> {
    let r = crate::expr::AmbientRing::new(&["x1", "x2"]).expect("valid names");
    let h = crate::expr::parse("x1^2 - x2^3", &r).expect("valid");
    let x1 = Polynomial::var(&r, 0);
    vec![&x1 + &h.pow(2), h.pow(k)]
}

/// Weighted degree `(3, 2)` followed by `x1² − x2³` with weight 1.
pub fn baby_chain() -> SemidegreeChain {
    let r = crate::expr::AmbientRing::new(&["x1", "x2"]).expect("valid names");
    let h = crate::expr::parse("x1^2 - x2^3", &r).expect("valid");
    SemidegreeChain::new(
        WeightedDegree::new(&r, vec![3, 2]).expect("positive weights"),
        vec![crate::degrees::IterationStep::new(h, 1)],
    )
    .expect("valid chain")
}

impl BoundReport {
    /// Whether `count` is consistent with the report: never above the
    /// bound, and equal to it when exactness is proven.
    pub fn admits(&self, count: u64) -> bool {
        let c = Rational::from_integer(count.into());
        c <= self.value && (self.exact != Exactness::ProvenExact || c == self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::IterationStep;
    use crate::expr::{parse, AmbientRing};

    fn ring() -> std::sync::Arc<AmbientRing> {
        AmbientRing::new(&["x1", "x2"]).unwrap()
    }

    fn sys(a: &str, b: &str) -> Vec<Polynomial> {
        vec![parse(a, &ring()).unwrap(), parse(b, &ring()).unwrap()]
    }

    #[test]
    fn weighted_examples() {
        let d32 = WeightedDegree::new(&ring(), vec![3, 2]).unwrap();
        for k in 1..=5 {
            let rep = weighted_bound(&d32, &fk_system(k)).unwrap();
            assert_eq!(rep.value, int(12 * i64::from(k)));
            assert_eq!(rep.exact, Exactness::NotProven);
        }
        let d11 = WeightedDegree::new(&ring(), vec![1, 1]).unwrap();
        let rep = weighted_bound(&d11, &sys("x1", "x2")).unwrap();
        assert_eq!((rep.value, rep.exact), (int(1), Exactness::ProvenExact));
        assert_eq!(weighted_bound(&d11, &sys("x1", "4")), Err(BoundError::ConstantComponent { index: 2 }));
        assert!(matches!(weighted_bound(&d11, &sys("x1", "x2")[..1]), Err(BoundError::SystemSize { .. })));
    }

    #[test]
    fn weighted_scaling_invariance() {
        let base = WeightedDegree::new(&ring(), vec![3, 2]).unwrap();
        for p in 1..=3 {
            let rep = weighted_bound(&base.scaled(p).unwrap(), &fk_system(2)).unwrap();
            assert_eq!(rep.value, int(24));
        }
    }

    #[test]
    fn iterated_ratio_examples() {
        assert_eq!(iterated_ratio(&baby_chain()), int(1));
        let plain = SemidegreeChain::weighted(WeightedDegree::new(&ring(), vec![2, 5]).unwrap());
        assert_eq!(iterated_ratio(&plain), Rational::new(1.into(), 10.into()));
        let err = SemidegreeChain::new(
            WeightedDegree::new(&ring(), vec![1, 1]).unwrap(),
            vec![IterationStep::new(parse("x1^2 - x2^2", &ring()).unwrap(), 1)],
        )
        .unwrap_err();
        assert!(matches!(err, DegreeError::NonPrimeLeadingForm { .. }));
    }

    #[test]
    fn iterated_examples() {
        let c = baby_chain();
        for k in 1..=5 {
            let rep = iterated_bound(&c, &fk_system(k)).unwrap();
            assert_eq!(rep.value, int(3 * i64::from(k)));
            assert_eq!(rep.exact, Exactness::ProvenExact);
        }
        let d = WeightedDegree::new(&ring(), vec![3, 2]).unwrap();
        let plain = SemidegreeChain::weighted(d.clone());
        assert_eq!(iterated_bound(&plain, &fk_system(2)).unwrap().value, weighted_bound(&d, &fk_system(2)).unwrap().value);
    }

    #[test]
    fn bkk_examples() {
        let one = [int(1), int(1)];
        assert_eq!(bkk_bound(&fk_system(1), &one).unwrap().value, int(12));
        assert_eq!(bkk_bound(&fk_system(2), &one).unwrap().value, int(24));
        assert_eq!(bkk_bound(&sys("x1 - 2", "x2 - 3"), &one).unwrap().value, int(1));
        for shift in [[int(1), int(0)], [int(0), int(1)]] {
            let rep = bkk_bound(&fk_system(1), &shift).unwrap();
            assert_eq!(rep.value, int(12));
            assert!(rep.trail[0].contains("zero"));
        }
        // Neither support contains the origin any more.
        assert_eq!(bkk_bound(&fk_system(1), &[int(0), int(0)]).unwrap().value, int(9));
    }

    #[test]
    fn okounkov_matches_iterated() {
        let c = baby_chain();
        let rep = okounkov_bound(&c, &fk_system(2), &MonomialValuation::lex(2), 6, 18).unwrap();
        assert_eq!(rep.value, int(6));
    }

    #[test]
    fn json_field_order() {
        let rep = iterated_bound(&baby_chain(), &fk_system(1)).unwrap();
        let json = rep.to_json();
        assert!(json.starts_with(r#"{"method":"iterated","value":"3","exact":"proven-exact","trail":["#), "{json}");
    }
}
