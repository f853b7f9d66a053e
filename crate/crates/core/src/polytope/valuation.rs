use std::cmp::Ordering;

use super::PolytopeError;
use crate::expr::Polynomial;

/// `ν(Σ aₐxᵅ) = min≺ {α : aₐ ≠ 0}` for a monomial order `≺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialValuation {
    /// Lexicographic order comparing the variables in the listed order.
    Lex(Vec<usize>),
    /// Total degree first, then lexicographic in variable order.
    GradedLex,
}

impl MonomialValuation {
    /// Lexicographic order on `x1 > x2 > … `.
    pub fn lex(n: usize) -> Self {
        MonomialValuation::Lex((0..n).collect())
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialValuation::Lex(perm) => perm.iter().map(|&i| a[i].cmp(&b[i])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
            MonomialValuation::GradedLex => {
                let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
        }
    }

    fn check(&self, n: usize) -> Result<(), PolytopeError> {
        if let MonomialValuation::Lex(perm) = self {
            let mut seen = perm.clone();
            seen.sort_unstable();
            if seen != (0..n).collect::<Vec<_>>() {
                return Err(PolytopeError::InvalidInput(format!("{perm:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(())
    }

    pub fn eval(&self, p: &Polynomial) -> Result<Vec<u32>, PolytopeError> {
        self.check(p.arity())?;
        p.terms()
            .map(|(m, _)| m.exponents())
            .min_by(|a, b| self.compare(a, b))
            .map(<[u32]>::to_vec)
            .ok_or(PolytopeError::ZeroPolynomial)
    }
}
