//! Iterated semidegrees.
//!
//! Starting from a weighted degree `δ₀`, each step `(h, w)` produces the
//! semidegree `δᵢ(g) = min δᵢ₋₁,ₑ(G)` over `G ∈ A[s]` with `G(h) = g`, where
//! `s` carries weight `w`. The minimum is attained by a *reduced* expansion
//! `g = Σ cⱼ hʲ` in which no leading form `𝔏ᵢ₋₁(cⱼ)` is divisible by
//! `𝔏ᵢ₋₁(h)`, giving `δᵢ(g) = max_j (δᵢ₋₁(cⱼ) + j·w)`.
//!
//! Leading forms at stage `i` live in the associated graded ring
//! `(grᵢ₋₁ / ⟨𝔏ᵢ₋₁(h)⟩)[zᵢ]`. That ring is represented concretely as a
//! polynomial ring whenever `𝔏ᵢ₋₁(h)` is linear in one of its variables
//! (that variable is then eliminated). A chain whose intermediate leading
//! form is not of this shape cannot be extended further and is rejected with
//! [`DegreeError::UnsupportedChain`]; the last step never needs the
//! representation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{form_is_prime, Degree, DegreeError, DegreeLike, WeightedDegree};
use crate::expr::{parse, AmbientRing, Monomial, Polynomial, Rational};

/// One iteration `(h, w)`: the polynomial `h` is assigned the weight `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationStep {
    pub h: Polynomial,
    pub w: i64,
}

impl IterationStep {
    pub fn new(h: Polynomial, w: i64) -> Self {
        IterationStep { h, w }
    }
}

/// Graded polynomial ring standing in for `grᵢ`, with the map sending each
/// of its variables back to an element of the original ring.
#[derive(Debug, Clone)]
struct GradedRing {
    ambient: Arc<AmbientRing>,
    weights: Vec<i64>,
    lifts: Vec<Polynomial>,
}

/// Identification of `(P / ⟨L⟩)[z]` with a polynomial ring, available when
/// `L = c·u + R` with `u` absent from `R`.
#[derive(Debug, Clone)]
struct Reduction {
    ring: GradedRing,
    /// Image of every variable of the unreduced ring.
    images: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
struct Stage {
    h: Polynomial,
    w: i64,
    /// `δᵢ₋₁(h)`.
    e: i64,
    /// `𝔏ᵢ₋₁(h)` in the previous graded ring.
    lead: Polynomial,
    /// Previous graded ring with `zᵢ` adjoined.
    raw: GradedRing,
    reduction: Option<Reduction>,
}

pub(crate) struct FinalLeads {
    pub forms: Vec<Polynomial>,
    pub relation: Polynomial,
}

/// Weighted base degree followed by iteration steps, validated at
/// construction.
#[derive(Debug, Clone)]
pub struct SemidegreeChain {
    base: WeightedDegree,
    steps: Vec<Stage>,
    base_ring: GradedRing,
}

const MAX_REDUCTION_ROUNDS: usize = 100_000;

impl SemidegreeChain {
    /// Chain with no steps: the weighted degree itself.
    pub fn weighted(base: WeightedDegree) -> Self {
        let ambient = base.ambient().clone();
        let lifts = (0..ambient.arity()).map(|i| Polynomial::var(&ambient, i)).collect();
        let base_ring = GradedRing { ambient, weights: base.weights().to_vec(), lifts };
        SemidegreeChain { base, steps: Vec::new(), base_ring }
    }

    pub fn new(base: WeightedDegree, steps: Vec<IterationStep>) -> Result<Self, DegreeError> {
        let mut chain = SemidegreeChain::weighted(base);
        let total = steps.len();
        for (i, step) in steps.into_iter().enumerate() {
            chain.push_step(step, i + 1 == total)?;
        }
        Ok(chain)
    }

    fn push_step(&mut self, step: IterationStep, last: bool) -> Result<(), DegreeError> {
        let index = self.steps.len() + 1;
        if step.h.ambient() != self.ambient() {
            return Err(DegreeError::AmbientMismatch);
        }
        if step.h.is_constant() {
            return Err(DegreeError::ConstantStep { step: index });
        }
        let prev = self.steps.len();
        let ring = self.ring(prev).cloned().ok_or_else(|| {
            DegreeError::UnsupportedChain(format!(
                "step {index} needs quotient-ring arithmetic in the graded ring of step {prev}"
            ))
        })?;
        let (e, lead) = self.stage_lead(prev, &step.h)?.ok_or(DegreeError::ZeroPolynomial)?;
        if !(0 < step.w && step.w < e) {
            return Err(DegreeError::WeightWindowViolation { step: index, w: step.w, stage_degree: e });
        }
        if !form_is_prime(&lead, &ring.weights)? {
            return Err(DegreeError::NonPrimeLeadingForm { step: index, form: lead.to_string() });
        }

        let z = fresh_name(&ring.ambient, index);
        let mut names: Vec<String> = ring.ambient.names().to_vec();
        names.push(z);
        let raw_ambient = AmbientRing::new(&names)?;
        let mut weights = ring.weights.clone();
        weights.push(step.w);
        let mut lifts = ring.lifts.clone();
        lifts.push(step.h.clone());
        let raw = GradedRing { ambient: raw_ambient, weights, lifts };
        let reduction = reduce_ring(&raw, &lead.rename_into(&raw.ambient)?);
        if reduction.is_none() && !last {
            return Err(DegreeError::UnsupportedChain(format!(
                "leading form {lead} of step {index} is not linear in any graded variable, \
                 so later steps would need quotient-ring arithmetic"
            )));
        }
        self.steps.push(Stage { h: step.h, w: step.w, e, lead, raw, reduction });
        Ok(())
    }

    pub fn base(&self) -> &WeightedDegree {
        &self.base
    }

    pub fn ambient(&self) -> &Arc<AmbientRing> {
        self.base.ambient()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> Vec<IterationStep> {
        self.steps.iter().map(|s| IterationStep::new(s.h.clone(), s.w)).collect()
    }

    /// `δᵢ₋₁(hᵢ)` for every step.
    pub fn stage_degrees(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.e).collect()
    }

    /// Ring variables followed by the iteration polynomials; together they
    /// generate the graded algebra of the final semidegree.
    pub fn generators(&self) -> Vec<Polynomial> {
        let a = self.ambient();
        (0..a.arity())
            .map(|i| Polynomial::var(a, i))
            .chain(self.steps.iter().map(|s| s.h.clone()))
            .collect()
    }

    /// Value of the final semidegree.
    pub fn eval(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        if p.ambient() != self.ambient() {
            return Err(DegreeError::AmbientMismatch);
        }
        self.stage_eval(self.steps.len(), p)
    }

    /// Value after the first `stage` steps.
    pub fn eval_at_stage(&self, stage: usize, p: &Polynomial) -> Result<Degree, DegreeError> {
        if p.ambient() != self.ambient() {
            return Err(DegreeError::AmbientMismatch);
        }
        assert!(stage <= self.steps.len(), "stage out of range");
        self.stage_eval(stage, p)
    }

    /// Whether the stage leading form of `h` after `stage` steps generates a
    /// prime ideal, i.e. whether `h` may be used as the next iteration step.
    pub fn step_primality(&self, stage: usize, h: &Polynomial) -> Result<bool, DegreeError> {
        if h.ambient() != self.ambient() {
            return Err(DegreeError::AmbientMismatch);
        }
        let ring = self.ring(stage).ok_or_else(|| {
            DegreeError::UnsupportedChain(format!("graded ring after step {stage} is not a polynomial ring"))
        })?;
        match self.stage_lead(stage, h)? {
            None => Err(DegreeError::ZeroPolynomial),
            Some((0, _)) => Ok(false),
            Some((_, lead)) => form_is_prime(&lead, &ring.weights),
        }
    }

    /// Leading forms of `polys` in the final graded ring, written over the
    /// previous graded ring with the last `z` adjoined as final variable,
    /// together with the last step's leading form (the relation of that
    /// ring) over the previous graded ring. `None` for a chain without
    /// steps.
    pub(crate) fn final_raw_leads(&self, polys: &[Polynomial]) -> Result<Option<FinalLeads>, DegreeError> {
        let Some(stage) = self.steps.last() else { return Ok(None) };
        let k = self.steps.len();
        let mut forms = Vec::with_capacity(polys.len());
        for p in polys {
            let (_, f) = self.stage_raw_lead(k, p)?.ok_or(DegreeError::ZeroPolynomial)?;
            forms.push(f);
        }
        Ok(Some(FinalLeads { forms, relation: stage.lead.clone() }))
    }

    fn ring(&self, stage: usize) -> Option<&GradedRing> {
        if stage == 0 {
            Some(&self.base_ring)
        } else {
            self.steps[stage - 1].reduction.as_ref().map(|r| &r.ring)
        }
    }

    fn stage_eval(&self, stage: usize, g: &Polynomial) -> Result<Degree, DegreeError> {
        if stage == 0 {
            return self.base.eval(g);
        }
        let w = self.steps[stage - 1].w;
        let mut best = Degree::NegInf;
        for (j, c) in self.expansion(stage, g)?.iter().enumerate() {
            best = best.max(self.stage_eval(stage - 1, c)?.plus(j as i64 * w));
        }
        Ok(best)
    }

    /// Degree and leading form in the graded ring after `stage` steps, which
    /// must be a polynomial ring.
    fn stage_lead(&self, stage: usize, g: &Polynomial) -> Result<Option<(i64, Polynomial)>, DegreeError> {
        if stage == 0 {
            if g.is_zero() {
                return Ok(None);
            }
            let lf = self.base.leading_form(g)?;
            return Ok(Some((lf.degree, lf.form)));
        }
        let reduction = self.steps[stage - 1].reduction.as_ref().ok_or_else(|| {
            DegreeError::UnsupportedChain(format!("graded ring after step {stage} is not a polynomial ring"))
        })?;
        Ok(self
            .stage_raw_lead(stage, g)?
            .map(|(d, raw)| (d, raw.compose(&reduction.images, &reduction.ring.ambient))))
    }

    /// Leading form after `stage` steps written in the unreduced ring
    /// `grᵢ₋₁[zᵢ]`.
    fn stage_raw_lead(&self, stage: usize, g: &Polynomial) -> Result<Option<(i64, Polynomial)>, DegreeError> {
        let st = &self.steps[stage - 1];
        let coeffs = self.expansion(stage, g)?;
        let mut parts = Vec::new();
        let mut best = None;
        for (j, c) in coeffs.iter().enumerate() {
            if let Some((d, form)) = self.stage_lead(stage - 1, c)? {
                let total = d + j as i64 * st.w;
                if best.map(|b| total > b).unwrap_or(true) {
                    best = Some(total);
                    parts.clear();
                }
                if Some(total) == best {
                    parts.push((j, form));
                }
            }
        }
        let Some(best) = best else { return Ok(None) };
        let z = st.raw.ambient.arity() - 1;
        let mut out = Polynomial::zero(&st.raw.ambient);
        for (j, form) in parts {
            let f = form.rename_into(&st.raw.ambient)?;
            let mut e = vec![0; st.raw.ambient.arity()];
            e[z] = j as u32;
            out = &out + &f.mul_monomial(&Monomial::new(e), &Rational::from_integer(1.into()));
        }
        Ok(Some((best, out)))
    }

    /// Element of the original ring whose leading form after `stage` steps
    /// is the given form.
    fn lift(&self, stage: usize, form: &Polynomial) -> Polynomial {
        let ring = self.ring(stage).expect("lift needs a polynomial graded ring");
        form.compose(&ring.lifts, self.ambient())
    }

    /// Writes `g = q·hᵢ + r` where the leading form of `r` at stage `i − 1`
    /// is not divisible by that of `hᵢ`.
    fn divide(&self, stage: usize, g: &Polynomial) -> Result<(Polynomial, Polynomial), DegreeError> {
        let st = &self.steps[stage - 1];
        let zero = Polynomial::zero(self.ambient());
        let (mut q, mut r, mut p) = (zero.clone(), zero, g.clone());
        let mut last_degree: Option<i64> = None;
        for _ in 0..MAX_REDUCTION_ROUNDS {
            let Some((d, form)) = self.stage_lead(stage - 1, &p)? else {
                return Ok((q, r));
            };
            if last_degree.is_some_and(|ld| d >= ld) {
                return Err(DegreeError::UnsupportedChain(format!(
                    "reduction at step {stage} failed to lower the degree"
                )));
            }
            last_degree = Some(d);
            match form.div_exact(&st.lead) {
                Some(quot) => {
                    let lifted = self.lift(stage - 1, &quot);
                    p = &p - &(&lifted * &st.h);
                    q = &q + &lifted;
                }
                None => {
                    let lifted = self.lift(stage - 1, &form);
                    p = &p - &lifted;
                    r = &r + &lifted;
                }
            }
        }
        Err(DegreeError::UnsupportedChain("reduction did not terminate".into()))
    }

    /// Reduced expansion `g = Σ cⱼ hᵢʲ`.
    fn expansion(&self, stage: usize, g: &Polynomial) -> Result<Vec<Polynomial>, DegreeError> {
        let mut coeffs = Vec::new();
        let mut cur = g.clone();
        while !cur.is_zero() {
            let (q, r) = self.divide(stage, &cur)?;
            coeffs.push(r);
            cur = q;
        }
        Ok(coeffs)
    }

    /// Serializable description of the chain.
    pub fn to_config(&self) -> ChainConfig {
        ChainConfig {
            vars: self.ambient().names().to_vec(),
            weights: self.base.weights().to_vec(),
            steps: self.steps.iter().map(|s| StepConfig { h: s.h.to_string(), w: s.w }).collect(),
        }
    }

    pub fn from_config(cfg: &ChainConfig) -> Result<Self, DegreeError> {
        let ambient = AmbientRing::new(&cfg.vars)?;
        let base = WeightedDegree::new(&ambient, cfg.weights.clone())?;
        let steps = cfg
            .steps
            .iter()
            .map(|s| Ok(IterationStep::new(parse(&s.h, &ambient)?, s.w)))
            .collect::<Result<Vec<_>, DegreeError>>()?;
        SemidegreeChain::new(base, steps)
    }
}

impl DegreeLike for SemidegreeChain {
    fn ambient(&self) -> &Arc<AmbientRing> {
        SemidegreeChain::ambient(self)
    }

    fn degree(&self, p: &Polynomial) -> Result<Degree, DegreeError> {
        self.eval(p)
    }

    fn is_semidegree(&self) -> bool {
        true
    }
}

fn fresh_name(ambient: &AmbientRing, index: usize) -> String {
    let mut name = format!("z{index}");
    while ambient.index_of(&name).is_some() {
        name.insert(0, 'z');
    }
    name
}

/// Eliminates a variable in which `relation` is linear with constant
/// coefficient.
fn reduce_ring(raw: &GradedRing, relation: &Polynomial) -> Option<Reduction> {
    let n = raw.ambient.arity();
    let t = (0..n).find(|&t| {
        let mut hits = relation.terms().filter(|(m, _)| m.exponents()[t] > 0);
        matches!(
            (hits.next(), hits.next()),
            (Some((m, _)), None) if m.total_degree() == 1
        )
    })?;
    let mut unit = vec![0; n];
    unit[t] = 1;
    let c = relation.coefficient(&Monomial::new(unit.clone()));
    debug_assert!(!c.is_zero());
    let rest = Polynomial::from_terms(
        &raw.ambient,
        relation
            .terms()
            .filter(|(m, _)| m.exponents()[t] == 0)
            .map(|(m, a)| (m.clone(), -a / &c)),
    );
    let keep: Vec<usize> = (0..n).filter(|&i| i != t).collect();
    let names: Vec<&str> = keep.iter().map(|&i| raw.ambient.name(i)).collect();
    let ambient = AmbientRing::new(&names).ok()?;
    let rest = rest_into(&rest, &ambient)?;
    let images = (0..n)
        .map(|i| if i == t { rest.clone() } else { Polynomial::var_named(&ambient, raw.ambient.name(i)).expect("kept") })
        .collect();
    let ring = GradedRing {
        ambient,
        weights: keep.iter().map(|&i| raw.weights[i]).collect(),
        lifts: keep.iter().map(|&i| raw.lifts[i].clone()).collect(),
    };
    Some(Reduction { ring, images })
}

fn rest_into(p: &Polynomial, target: &Arc<AmbientRing>) -> Option<Polynomial> {
    let mut map = BTreeMap::new();
    for name in p.ambient().names() {
        if let Some(v) = Polynomial::var_named(target, name) {
            map.insert(name.clone(), v);
        } else {
            map.insert(name.clone(), Polynomial::zero(target));
        }
    }
    p.substitute(&map, target).ok()
}

/// JSON form: `{"vars":["x1","x2"],"weights":[3,2],"steps":[{"h":"x1^2 - x2^3","w":1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainConfig {
    pub vars: Vec<String>,
    pub weights: Vec<i64>,
    #[serde(default)]
    pub steps: Vec<StepConfig>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepConfig {
    pub h: String,
    pub w: i64,
}
