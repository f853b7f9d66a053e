//! Exact solution counts for bivariate systems, independent of the degree
//! machinery.
//!
//! The number of solutions of `F = G = 0` in the affine plane, counted with
//! multiplicity, is `dim ℚ[u, v]/(F, G)`. When the leading coefficients of
//! `F` and `G` in `v` have no common root, no solution escapes to infinity
//! along `v` and this dimension equals `deg_u Res_v(F, G)`. Otherwise a
//! shear `u ↦ u + c·v` is applied first. Both elimination orders are
//! computed and must agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::expr::{gcd, rational_to_string, resultant, ExprError, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the fiber is not finite: the shifted polynomials share a factor")]
    InfiniteFiber,
    #[error("inconclusive count: {0}")]
    Inconclusive(String),
    #[error("every probe was inconclusive or had an infinite fiber")]
    AllInconclusive,
    #[error("the oracle handles two polynomials in two variables, got {got} in {arity}")]
    UnsupportedShape { got: usize, arity: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// How one elimination order arrived at its count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub eliminated: String,
    /// `c` in `u ↦ u + c·v`, if a shear was needed.
    pub shear: Option<i64>,
    pub resultant_degree: u64,
}

impl fmt::Display for Elimination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eliminate {}: deg Res = {}", self.eliminated, self.resultant_degree)?;
        if let Some(c) = self.shear {
            write!(f, " after shear by {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCount {
    pub count: u64,
    pub shift: Vec<Rational>,
    pub eliminations: Vec<Elimination>,
}

fn check_shape(system: &[Polynomial], shift: &[Rational]) -> Result<(), OracleError> {
    let arity = system.first().map(Polynomial::arity).unwrap_or(0);
    if system.len() != 2 || arity != 2 {
        return Err(OracleError::UnsupportedShape { got: system.len(), arity });
    }
    if !system[0].same_ambient(&system[1]) {
        return Err(ExprError::AmbientMismatch.into());
    }
    if shift.len() != 2 {
        return Err(OracleError::InvalidInput(format!("shift has {} coordinates, expected 2", shift.len())));
    }
    Ok(())
}

fn total_degree(p: &Polynomial) -> u64 {
    p.total_degree().unwrap_or(0)
}

fn top_form_vanishes_at(p: &Polynomial, c: i64) -> bool {
    let d = total_degree(p);
    let top = Polynomial::from_terms(
        p.ambient(),
        p.terms().filter(|(m, _)| m.total_degree() == d).map(|(m, a)| (m.clone(), a.clone())),
    );
    top.eval(&[Rational::from_integer(c.into()), Rational::from_integer(1.into())]) == Rational::from_integer(0.into())
}

/// `deg_u Res_v(F, G)` with `u = 1 − v`, shearing first if needed.
fn count_eliminating(f: &Polynomial, g: &Polynomial, v: usize) -> Result<Elimination, OracleError> {
    let ambient = f.ambient().clone();
    let u = 1 - v;
    let direct = {
        let (df, dg) = (f.degree_in(v).unwrap_or(0), g.degree_in(v).unwrap_or(0));
        if df > 0 && dg > 0 {
            let lf = f.coefficients_in(v).pop().expect("non-zero");
            let lg = g.coefficients_in(v).pop().expect("non-zero");
            gcd(&lf, &lg)?.is_constant()
        } else {
            false
        }
    };
    let (f, g, shear) = if direct {
        (f.clone(), g.clone(), None)
    } else {
        let bound = (total_degree(f) + total_degree(g) + 1) as i64;
        // The top forms, viewed in (u, v) order, must not vanish at (c, 1).
        let ordered = |p: &Polynomial| {
            if v == 1 {
                p.clone()
            } else {
                p.compose(&[Polynomial::var(&ambient, 1), Polynomial::var(&ambient, 0)], &ambient)
            }
        };
        let (of, og) = (ordered(f), ordered(g));
        let c = (1..=bound)
            .find(|&c| !top_form_vanishes_at(&of, c) && !top_form_vanishes_at(&og, c))
            .ok_or_else(|| OracleError::Inconclusive("no admissible shear".into()))?;
        let mut images = vec![Polynomial::var(&ambient, 0), Polynomial::var(&ambient, 1)];
        images[u] = &Polynomial::var(&ambient, u) + &Polynomial::var(&ambient, v).scale(&Rational::from_integer(c.into()));
        (f.compose(&images, &ambient), g.compose(&images, &ambient), Some(c))
    };
    let res = resultant(&f, &g, v)?;
    if res.is_zero() {
        return Err(OracleError::Inconclusive("resultant vanished identically".into()));
    }
    Ok(Elimination {
        eliminated: ambient.name(v).to_string(),
        shear,
        resultant_degree: u64::from(res.degree_in(u).unwrap_or(0)),
    })
}

/// Number of points of `f⁻¹(a)` counted with multiplicity.
pub fn fiber_count(system: &[Polynomial], a: &[Rational]) -> Result<FiberCount, OracleError> {
    check_shape(system, a)?;
    let ambient = system[0].ambient();
    let f = &system[0] - &Polynomial::constant(ambient, a[0].clone());
    let g = &system[1] - &Polynomial::constant(ambient, a[1].clone());
    if f.is_zero() || g.is_zero() {
        return Err(OracleError::InfiniteFiber);
    }
    let shift = a.to_vec();
    if f.is_constant() || g.is_constant() {
        return Ok(FiberCount { count: 0, shift, eliminations: Vec::new() });
    }
    if !gcd(&f, &g)?.is_constant() {
        return Err(OracleError::InfiniteFiber);
    }
    let first = count_eliminating(&f, &g, 1)?;
    let second = count_eliminating(&f, &g, 0)?;
    if first.resultant_degree != second.resultant_degree {
        return Err(OracleError::Inconclusive(format!(
            "elimination orders disagree ({} vs {})",
            first.resultant_degree, second.resultant_degree
        )));
    }
    let count = first.resultant_degree;
    let cap = total_degree(&f) * total_degree(&g);
    if count > cap {
        return Err(OracleError::Inconclusive(format!("count {count} exceeds the Bezout number {cap}")));
    }
    Ok(FiberCount { count, shift, eliminations: vec![first, second] })
}

/// Result of one probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub index: usize,
    pub point: Vec<Rational>,
    pub outcome: Result<FiberCount, OracleError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    /// Most frequent count among successful probes (larger count on ties).
    pub consensus: u64,
    pub probes: Vec<Probe>,
    /// Indices of successful probes whose count differs from the consensus.
    pub outliers: Vec<usize>,
}

impl ProbeReport {
    pub fn accepted(&self) -> impl Iterator<Item = &FiberCount> {
        self.probes.iter().filter_map(|p| p.outcome.as_ref().ok())
    }

    pub fn infinite(&self) -> usize {
        self.probes.iter().filter(|p| p.outcome == Err(OracleError::InfiniteFiber)).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.probes.iter().filter(|p| matches!(p.outcome, Err(OracleError::Inconclusive(_)))).count()
    }
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.probes {
            let a = p.point.iter().map(rational_to_string).collect::<Vec<_>>().join(", ");
            match &p.outcome {
                Ok(c) => writeln!(f, "probe {} at ({a}): {}", p.index, c.count)?,
                Err(e) => writeln!(f, "probe {} at ({a}): {e}", p.index)?,
            }
        }
        writeln!(f, "consensus: {}", self.consensus)
    }
}

/// Counts the fibers over the given points and takes the modal count.
pub fn probe_points(system: &[Polynomial], points: &[Vec<Rational>]) -> Result<ProbeReport, OracleError> {
    let mut probes = Vec::with_capacity(points.len());
    for (index, point) in points.iter().enumerate() {
        let outcome = match fiber_count(system, point) {
            Err(e @ (OracleError::UnsupportedShape { .. } | OracleError::InvalidInput(_) | OracleError::Expr(_))) => {
                return Err(e)
            }
            other => other,
        };
        probes.push(Probe { index, point: point.clone(), outcome });
    }
    let mut freq: BTreeMap<u64, usize> = BTreeMap::new();
    for p in &probes {
        if let Ok(c) = &p.outcome {
            *freq.entry(c.count).or_default() += 1;
        }
    }
    let consensus =
        freq.iter().max_by_key(|&(count, n)| (*n, *count)).map(|(c, _)| *c).ok_or(OracleError::AllInconclusive)?;
    let outliers = probes
        .iter()
        .filter(|p| p.outcome.as_ref().is_ok_and(|c| c.count != consensus))
        .map(|p| p.index)
        .collect();
    Ok(ProbeReport { consensus, probes, outliers })
}

/// Rational with numerator in `[-50, 50]` and denominator in `[1, 10]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-50..=50);
    let d: i64 = rng.gen_range(1..=10);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random points drawn from a ChaCha stream seeded with `seed`.
pub fn random_points(n: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| vec![random_rational(&mut rng), random_rational(&mut rng)]).collect()
}

/// Probes `trials ≥ 3` random fibers.
pub fn generic_probe(system: &[Polynomial], trials: usize, seed: u64) -> Result<ProbeReport, OracleError> {
    if trials < 3 {
        return Err(OracleError::InvalidInput(format!("need at least 3 trials, got {trials}")));
    }
    probe_points(system, &random_points(trials, seed))
}
