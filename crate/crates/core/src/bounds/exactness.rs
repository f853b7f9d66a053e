use num_traits::Zero;

use super::{check_system, BoundError, Exactness};
use crate::degrees::{SemidegreeChain, WeightedDegree};
use crate::expr::{gcd, Monomial, Polynomial};

/// For bivariate weighted-homogeneous forms a common zero besides the
/// origin is the same as a common factor, so the leading forms meet only
/// at the origin exactly when their gcd is constant.
pub fn exactness_check(delta: &WeightedDegree, system: &[Polynomial]) -> Result<Exactness, BoundError> {
    let n = delta.ambient().arity();
    if n != 2 {
        return Err(BoundError::UnsupportedArity(n));
    }
    check_system(delta.ambient(), system)?;
    let (a, b) = (delta.leading_form(&system[0])?, delta.leading_form(&system[1])?);
    if a.degree == 0 || b.degree == 0 {
        return Ok(Exactness::ViolatedPrecondition);
    }
    Ok(if gcd(&a.form, &b.form)?.is_constant() { Exactness::ProvenExact } else { Exactness::NotProven })
}

/// Leading forms in the final graded ring `(grₖ₋₁/⟨L⟩)[z]`. When one of them
/// is a power of `z`, the two meet only at the origin iff the other,
/// restricted to `z = 0`, shares no factor with `L` in `grₖ₋₁`. Other
/// shapes are reported as not proven.
pub fn iterated_exactness_check(chain: &SemidegreeChain, system: &[Polynomial]) -> Result<Exactness, BoundError> {
    let Some(leads) = chain.final_raw_leads(system)? else {
        return exactness_check(chain.base(), system);
    };
    let n = chain.ambient().arity();
    if n != 2 {
        return Err(BoundError::UnsupportedArity(n));
    }
    let prev = leads.relation.ambient().clone();
    let z = prev.arity();
    let is_z_power = |f: &Polynomial| {
        f.num_terms() == 1 && f.terms().all(|(m, _)| m.exponents()[..z].iter().all(Zero::is_zero) && m.exponents()[z] > 0)
    };
    let forms = &leads.forms;
    if forms.iter().any(|f| f.is_constant()) {
        return Ok(Exactness::ViolatedPrecondition);
    }
    for (i, j) in [(0, 1), (1, 0)] {
        if !is_z_power(&forms[i]) {
            continue;
        }
        let restricted = Polynomial::from_terms(
            &prev,
            forms[j]
                .terms()
                .filter(|(m, _)| m.exponents()[z] == 0)
                .map(|(m, c)| (Monomial::new(m.exponents()[..z].to_vec()), c.clone())),
        );
        if restricted.is_zero() {
            return Ok(Exactness::NotProven);
        }
        if gcd(&restricted, &leads.relation)?.is_constant() {
            return Ok(Exactness::ProvenExact);
        }
    }
    Ok(Exactness::NotProven)
}
