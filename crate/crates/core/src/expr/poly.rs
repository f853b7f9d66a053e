use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExprError, Rational};

/// Ordered, duplicate-free list of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientRing {
    names: Vec<String>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AmbientRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, ExprError> {
        if names.is_empty() {
            return Err(ExprError::InvalidAmbient("no variables".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(ExprError::InvalidAmbient(format!("bad variable name `{n}`")));
            }
            if out.iter().any(|m| m == n) {
                return Err(ExprError::InvalidAmbient(format!("duplicate variable `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(AmbientRing { names: out }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector. Ordered graded-lexicographically, earlier variables
/// ranking higher.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

/// Exponents at or beyond this bound are rejected.
pub const MAX_EXPONENT: u64 = 1 << 31;

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            exponents.iter().all(|&e| u64::from(e) < MAX_EXPONENT),
            "exponent overflow"
        );
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let e = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                let s = u64::from(a) + u64::from(b);
                assert!(s < MAX_EXPONENT, "exponent overflow");
                s as u32
            })
            .collect();
        Monomial(e)
    }

    /// `self / other` when every exponent of `other` is dominated.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            e.push(a.checked_sub(b)?);
        }
        Some(Monomial(e))
    }

    /// Weighted degree `Σ αᵢ·wᵢ`.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| i64::from(e) * w).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex monomial order; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ambient: Arc<AmbientRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ambient: &Arc<AmbientRing>) -> Self {
        Polynomial { ambient: ambient.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ambient: &Arc<AmbientRing>) -> Self {
        Self::constant(ambient, Rational::one())
    }

    pub fn constant(ambient: &Arc<AmbientRing>, c: Rational) -> Self {
        let mut p = Self::zero(ambient);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ambient.arity()), c);
        }
        p
    }

    pub fn from_int(ambient: &Arc<AmbientRing>, c: i64) -> Self {
        Self::constant(ambient, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ambient: &Arc<AmbientRing>, i: usize) -> Self {
        Self::monomial(ambient, Monomial::var(ambient.arity(), i), Rational::one())
    }

    /// Variable by name; `None` when it is not in the ambient.
    pub fn var_named(ambient: &Arc<AmbientRing>, name: &str) -> Option<Self> {
        ambient.index_of(name).map(|i| Self::var(ambient, i))
    }

    pub fn monomial(ambient: &Arc<AmbientRing>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), ambient.arity(), "monomial arity");
        let mut p = Self::zero(ambient);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(ambient: &Arc<AmbientRing>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ambient);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ambient(&self) -> &Arc<AmbientRing> {
        &self.ambient
    }

    pub fn arity(&self) -> usize {
        self.ambient.arity()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn same_ambient(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    pub(crate) fn check_ambient(&self, other: &Polynomial) -> Result<(), ExprError> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(ExprError::AmbientMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.arity())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, ExprError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, ExprError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, ExprError> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(&self.ambient);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ambient);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(self.same_ambient(divisor), "ambient mismatch");
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ambient);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Evaluates the polynomial with variable `var` fixed at `value`; the
    /// ambient is unchanged.
    pub fn specialize(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.ambient);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0);
            let factor = pow_rational(value, k);
            out.add_term(Monomial(e), c * factor);
        }
        out
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= pow_rational(x, e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients of `var^0, var^1, …` as polynomials free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Polynomial::zero(&self.ambient); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0) as usize;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(ambient: &Arc<AmbientRing>, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(ambient);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.clone();
                e[var] += k as u32;
                out.add_term(Monomial(e), a.clone());
            }
        }
        out
    }

    /// Substitutes polynomials (over `target`) for variables of `self`.
    /// Variables without an assignment are mapped to the same-named
    /// variable of `target`, which must then exist.
    pub fn substitute(
        &self,
        assignments: &BTreeMap<String, Polynomial>,
        target: &Arc<AmbientRing>,
    ) -> Result<Polynomial, ExprError> {
        for (name, q) in assignments {
            if self.ambient.index_of(name).is_none() {
                return Err(ExprError::UnknownVariable { name: name.clone() });
            }
            if q.ambient() != target {
                return Err(ExprError::AmbientMismatch);
            }
        }
        let mut images = Vec::with_capacity(self.arity());
        for name in self.ambient.names() {
            let img = match assignments.get(name) {
                Some(q) => q.clone(),
                None => Polynomial::var_named(target, name).ok_or(ExprError::AmbientMismatch)?,
            };
            images.push(img);
        }
        Ok(self.compose(&images, target))
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn compose(&self, images: &[Polynomial], target: &Arc<AmbientRing>) -> Polynomial {
        assert_eq!(images.len(), self.arity());
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Moves the polynomial into another ambient by variable name.
    pub fn rename_into(&self, target: &Arc<AmbientRing>) -> Result<Polynomial, ExprError> {
        let map: Vec<usize> = self
            .ambient
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect::<Option<_>>()
            .ok_or(ExprError::AmbientMismatch)?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Positive scalar multiple with coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        for c in self.terms.values() {
            let n = (c * Rational::from_integer(lcm.clone())).to_integer();
            g = num_integer::Integer::gcd(&g, &n);
        }
        let mut factor = Rational::new(lcm, g);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Monic normalization (leading coefficient 1).
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

pub(crate) fn pow_rational(x: &Rational, k: u32) -> Rational {
    num_traits::pow::Pow::pow(x, k)
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the ambients differ; use the `try_` form to get an error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial ambient mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("polynomial ambient mismatch")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Arithmetic selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, ExprError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical form: terms in descending graded-lex order, `*` between
/// factors, `^` for powers.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(fmt_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ambient.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ambient.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
