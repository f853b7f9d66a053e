//! Reference computations that share no code with the library beyond
//! reading polynomial terms.

#![allow(dead_code)]

use std::collections::BTreeMap;

use affine_bezout::expr::{Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Degree in `t` of `g(t³ + c·t⁻², t²)` with `c` a free parameter. The
/// substitution sends `x1² − x2³` to `2c·t + c²·t⁻⁴`, so this is the
/// semidegree with `x1 ↦ 3`, `x2 ↦ 2`, `x1² − x2³ ↦ 1`.
pub fn baby_curve_degree(g: &Polynomial) -> Option<i64> {
    // (t exponent, c exponent) -> coefficient
    let mut acc: BTreeMap<(i64, u32), Rational> = BTreeMap::new();
    for (m, a) in g.terms() {
        let (p, qq) = (m.exponents()[0], m.exponents()[1]);
        for i in 0..=p {
            let coeff = a * Rational::from_integer(binomial(BigInt::from(p), BigInt::from(i)));
            let t = 3 * i64::from(p - i) - 2 * i64::from(i) + 2 * i64::from(qq);
            *acc.entry((t, i)).or_insert_with(Rational::zero) += coeff;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((t, _), _)| t).max()
}

/// Weighted degree computed from scratch.
pub fn weighted_degree(g: &Polynomial, w: &[i64]) -> Option<i64> {
    g.terms()
        .map(|(m, _)| m.exponents().iter().zip(w).map(|(&e, &wi)| i64::from(e) * wi).sum())
        .max()
}

fn total_degree(p: &Polynomial) -> u32 {
    p.terms().map(|(m, _)| m.exponents().iter().sum()).max().unwrap_or(0)
}

fn pow(x: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// Coefficients in `v` of `p(u0 + c·v, v)`, lowest first.
fn sheared_slice(p: &Polynomial, u0: &Rational, c: i64) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); total_degree(p) as usize + 1];
    let c = q(c);
    for (m, a) in p.terms() {
        let (i, j) = (m.exponents()[0], m.exponents()[1]);
        for s in 0..=i {
            let b = Rational::from_integer(binomial(BigInt::from(i), BigInt::from(s)));
            out[(s + j) as usize] += a * b * pow(u0, i - s) * pow(&c, s);
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else { return Rational::zero() };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

fn sylvester_det(f: &[Rational], g: &[Rational]) -> Rational {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for s in 0..dg {
        let mut r = vec![Rational::zero(); n];
        for (k, c) in f.iter().rev().enumerate() {
            r[s + k] = c.clone();
        }
        rows.push(r);
    }
    for s in 0..df {
        let mut r = vec![Rational::zero(); n];
        for (k, c) in g.iter().rev().enumerate() {
            r[s + k] = c.clone();
        }
        rows.push(r);
    }
    determinant(rows)
}

/// Number of affine solutions of `f = g = 0` with multiplicity, assuming
/// the fiber is finite and both polynomials are non-constant: shear so both
/// are monic in `v`, then read off the degree in `u` of the resultant from
/// its values at `u = 0, 1, …`.
pub fn reference_count(f: &Polynomial, g: &Polynomial) -> usize {
    let (df, dg) = (total_degree(f), total_degree(g));
    let top_nonzero = |p: &Polynomial, d: u32, c: i64| {
        let s: Rational = p
            .terms()
            .filter(|(m, _)| m.exponents().iter().sum::<u32>() == d)
            .map(|(m, a)| a * pow(&q(c), m.exponents()[0]))
            .sum();
        !s.is_zero()
    };
    let c = (1..).find(|&c| top_nonzero(f, df, c) && top_nonzero(g, dg, c)).unwrap();
    let samples = (df * dg + 2) as i64;
    let values: Vec<Rational> =
        (0..samples).map(|u| sylvester_det(&sheared_slice(f, &q(u), c), &sheared_slice(g, &q(u), c))).collect();
    // Successive differences of a degree-k polynomial vanish from order k+1 on.
    let mut diff = values;
    let mut deg = 0;
    for order in 0..samples as usize {
        if diff.iter().any(|d| !d.is_zero()) {
            deg = order;
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
        if diff.is_empty() {
            break;
        }
    }
    deg
}

/// Degree of `g(y − 1, x2)` for weights `y ↦ 1`, `x2 ↦ 4`.
pub fn recentred_degree(g: &Polynomial) -> Option<i64> {
    let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for (m, a) in g.terms() {
        let (p, qq) = (m.exponents()[0], m.exponents()[1]);
        for i in 0..=p {
            let sign = if (p - i) % 2 == 0 { q(1) } else { q(-1) };
            let coeff = a * sign * Rational::from_integer(binomial(BigInt::from(p), BigInt::from(i)));
            *acc.entry((i, qq)).or_insert_with(Rational::zero) += coeff;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), _)| i64::from(i) + 4 * i64::from(j)).max()
}
