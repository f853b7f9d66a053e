//! Sylvester resultants, evaluated with fraction-free Bareiss elimination.

use super::univariate::UniPoly;
use super::{ExprError, Monomial, Polynomial};

/// Determinant of a square matrix of polynomials by Bareiss elimination.
/// Every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let ambient = match m.first().and_then(|r| r.first()) {
        Some(p) => p.ambient().clone(),
        None => panic!("empty matrix has no ambient"),
    };
    let mut prev = Polynomial::one(&ambient);
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Polynomial::zero(&ambient),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = Polynomial::zero(&ambient);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `p`, `q` with respect to variable index `var`.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial, var: usize) -> Result<Vec<Vec<Polynomial>>, ExprError> {
    p.check_ambient(q)?;
    let cp = p.coefficients_in(var);
    let cq = q.coefficients_in(var);
    let (dp, dq) = (cp.len().saturating_sub(1), cq.len().saturating_sub(1));
    if dp == 0 || dq == 0 {
        return Err(ExprError::DegreeZero);
    }
    let size = dp + dq;
    let zero = Polynomial::zero(p.ambient());
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dq {
        let mut row = vec![zero.clone(); size];
        for (k, c) in cp.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..dp {
        let mut row = vec![zero.clone(); size];
        for (k, c) in cq.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Bareiss elimination over `ℚ[u]`.
fn bareiss_univariate(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    let mut prev = UniPoly::one();
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step divides exactly");
                m[i][j] = quot;
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// `Res_var(p, q)`. The result lives in the same ambient and does not
/// involve `var`.
pub fn resultant(p: &Polynomial, q: &Polynomial, var: usize) -> Result<Polynomial, ExprError> {
    let m = sylvester_matrix(p, q, var)?;
    let ambient = p.ambient().clone();
    let n = ambient.arity();
    if n > 2 {
        return Ok(bareiss_determinant(m));
    }
    // Entries involve at most the one remaining variable.
    let u = (0..n).find(|&i| i != var);
    let to_uni = |c: &Polynomial| {
        let mut coeffs = Vec::new();
        for (mono, a) in c.terms() {
            let e = u.map(|u| mono.exponents()[u] as usize).unwrap_or(0);
            if coeffs.len() <= e {
                coeffs.resize(e + 1, super::Rational::from_integer(0.into()));
            }
            coeffs[e] += a;
        }
        UniPoly(coeffs).trimmed()
    };
    let det = bareiss_univariate(m.iter().map(|row| row.iter().map(to_uni).collect()).collect());
    Ok(Polynomial::from_terms(
        &ambient,
        det.0.into_iter().enumerate().map(|(e, c)| {
            let mut exps = vec![0u32; n];
            if let Some(u) = u {
                exps[u] = e as u32;
            }
            (Monomial::new(exps), c)
        }),
    ))
}

/// Same as [`resultant`], selecting the variable by name.
pub fn resultant_in(p: &Polynomial, q: &Polynomial, var: &str) -> Result<Polynomial, ExprError> {
    let idx = p
        .ambient()
        .index_of(var)
        .ok_or_else(|| ExprError::UnknownVariable { name: var.to_string() })?;
    resultant(p, q, idx)
}
