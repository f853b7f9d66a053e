//! Greatest common divisors in at most two variables.
//!
//! Bivariate inputs are viewed in `ℚ[u][v]` (the first variable is the
//! coefficient variable `u`) and reduced with a primitive pseudo-remainder
//! sequence; contents are handled by the univariate Euclidean algorithm.

use std::sync::Arc;

use super::univariate::UniPoly;
use super::{AmbientRing, ExprError, Monomial, Polynomial, Rational};

type Bi = Vec<UniPoly>;

fn to_bi(p: &Polynomial, u: Option<usize>, v: usize) -> Bi {
    let dv = p.degree_in(v).map(|d| d as usize + 1).unwrap_or(0);
    let mut out = vec![UniPoly::zero(); dv];
    for (m, c) in p.terms() {
        let e = m.exponents();
        let i = e[v] as usize;
        let j = u.map(|u| e[u] as usize).unwrap_or(0);
        let mut coeffs = std::mem::replace(&mut out[i], UniPoly::zero()).0;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Rational::from_integer(0.into()));
        }
        coeffs[j] += c;
        out[i] = UniPoly(coeffs).trimmed();
    }
    out
}

fn from_bi(b: &Bi, ambient: &Arc<AmbientRing>, u: Option<usize>, v: usize) -> Polynomial {
    let n = ambient.arity();
    let terms = b.iter().enumerate().flat_map(|(i, cu)| {
        cu.0.iter().enumerate().map(move |(j, c)| {
            let mut e = vec![0u32; n];
            e[v] = i as u32;
            if let Some(u) = u {
                e[u] = j as u32;
            }
            (Monomial::new(e), c.clone())
        })
    });
    Polynomial::from_terms(ambient, terms)
}

fn trim(mut b: Bi) -> Bi {
    while b.last().map(UniPoly::is_zero).unwrap_or(false) {
        b.pop();
    }
    b
}

fn content(b: &Bi) -> UniPoly {
    b.iter().fold(UniPoly::zero(), |g, c| UniPoly::gcd(&g, c))
}

fn divide_by_content(b: &Bi, c: &UniPoly) -> Bi {
    b.iter()
        .map(|x| {
            let (q, r) = x.div_rem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in `ℚ[u][v]`.
fn prem(a: &Bi, b: &Bi) -> Bi {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Bi = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        r = trim(next);
    }
    r
}

fn bi_gcd(a: Bi, b: Bi) -> Bi {
    let (a, b) = (trim(a), trim(b));
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let ca = content(&a);
    let cb = content(&b);
    let c = UniPoly::gcd(&ca, &cb);
    let mut x = divide_by_content(&a, &ca);
    let mut y = divide_by_content(&b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        if r.is_empty() {
            y = Vec::new();
            break;
        }
        let cr = content(&r);
        y = divide_by_content(&r, &cr);
    }
    // A non-zero remainder of degree 0 in v means the primitive parts are coprime.
    let g = if y.len() == 1 {
        vec![UniPoly::one()]
    } else {
        let cx = content(&x);
        divide_by_content(&x, &cx)
    };
    g.iter().map(|k| k.mul(&c)).collect()
}

/// Greatest common divisor, normalized to coprime integer coefficients with
/// a positive graded-lex leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, ExprError> {
    p.check_ambient(q)?;
    let ambient = p.ambient().clone();
    let (u, v) = match ambient.arity() {
        1 => (None, 0),
        2 => (Some(0), 1),
        n => return Err(ExprError::UnsupportedArity(n)),
    };
    let g = bi_gcd(to_bi(p, u, v), to_bi(q, u, v));
    Ok(from_bi(&g, &ambient, u, v).primitive_normalized())
}
