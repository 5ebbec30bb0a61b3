//! Sparse multivariate truncated power series over declared formal
//! variables, with Laurent-series or t-polynomial coefficients.
//!
//! Truncation is by total degree across all variables: the identities are
//! graded by total degree through the partition sizes, so a total-degree
//! cap guarantees finite work everywhere, including the doubly infinite
//! MacMahon families (their argument degrees grow linearly in the inner
//! index).

use crate::laurent::LaurentSeries;
use crate::tpoly::TPoly;
use crate::Rat;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// Coefficient domain of a multivariate series. q-mode uses
/// [`LaurentSeries`], t-mode uses [`TPoly`]; the two are never mixed.
pub trait CoeffRing: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn invert(&self) -> Result<Self, String>;
    fn one_like(&self) -> Self;
}

impl CoeffRing for LaurentSeries {
    fn is_zero(&self) -> bool {
        LaurentSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentSeries::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentSeries::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentSeries::neg(self)
    }
    fn invert(&self) -> Result<Self, String> {
        LaurentSeries::invert(self)
    }
    fn one_like(&self) -> Self {
        LaurentSeries::one(self.order())
    }
}

impl CoeffRing for TPoly {
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        TPoly::neg(self)
    }
    fn invert(&self) -> Result<Self, String> {
        // only constants are units here
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (Some((e, c)), None) if e.iter().all(|&x| x == 0) => {
                Ok(TPoly::constant(Rat::one() / c.clone(), self.nvars()))
            }
            _ => Err("non-constant t-polynomial is not invertible".into()),
        }
    }
    fn one_like(&self) -> Self {
        TPoly::one(self.nvars())
    }
}

/// Ordered variable names plus the shared total-degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    cap: u32,
}

impl VarTable {
    pub fn new(names: Vec<String>, cap: u32) -> Arc<Self> {
        let mut seen = names.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), names.len(), "variable names must be unique");
        Arc::new(VarTable { names, cap })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown variable {}", name))
    }

    pub fn format_exps(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// A signed monomial in the variables of a [`VarTable`]; the arguments of
/// every MacMahon factor in the product formulas have this shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub sign: i8,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            sign: 1,
            exps: vec![0; nvars],
        }
    }

    pub fn var(idx: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { sign: 1, exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial {
            sign: self.sign * other.sign,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Monomial {
            sign: if k % 2 == 0 { 1 } else { self.sign },
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Monomial {
            sign: -self.sign,
            exps: self.exps.clone(),
        }
    }
}

/// Sparse truncated multivariate series with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct MSeries<C: CoeffRing> {
    vars: Arc<VarTable>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: CoeffRing + fmt::Debug> fmt::Debug for MSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[{}]*({:?})", self.vars.format_exps(e), c)?;
            first = false;
        }
        Ok(())
    }
}

impl<C: CoeffRing> MSeries<C> {
    pub fn zero(vars: Arc<VarTable>) -> Self {
        MSeries {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<VarTable>, c: C) -> Self {
        let mut s = Self::zero(vars);
        if !c.is_zero() {
            s.terms.insert(vec![0; s.vars.len()], c);
        }
        s
    }

    /// coeff * (signed monomial), dropped if over the cap.
    pub fn term(vars: Arc<VarTable>, mono: &Monomial, c: C) -> Self {
        let mut s = Self::zero(vars);
        if mono.degree() > s.vars.cap() || c.is_zero() {
            return s;
        }
        let c = if mono.sign < 0 { c.neg() } else { c };
        s.terms.insert(mono.exps.clone(), c);
        s
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "mismatched variable tables");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(existing) => {
                    let sum = existing.add(c);
                    if sum.is_zero() {
                        terms.remove(e);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        MSeries {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        MSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "mismatched variable tables");
        let cap = self.vars.cap();
        let mut terms: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > cap {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let prod = ca.mul(cb);
                match terms.get_mut(&e) {
                    Some(existing) => {
                        let sum = existing.add(&prod);
                        if sum.is_zero() {
                            terms.remove(&e);
                        } else {
                            *existing = sum;
                        }
                    }
                    None => {
                        if !prod.is_zero() {
                            terms.insert(e, prod);
                        }
                    }
                }
            }
        }
        MSeries {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Multiply by coeff * signed monomial without building a series.
    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        let t = Self::term(self.vars.clone(), mono, c.clone());
        self.mul(&t)
    }

    /// Inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self, String> {
        let zero_exps = vec![0u32; self.vars.len()];
        let c0 = self
            .terms
            .get(&zero_exps)
            .ok_or_else(|| "non-unit constant term".to_string())?;
        let c0_inv = c0.invert().map_err(|e| format!("non-unit constant term: {}", e))?;
        let one = c0.one_like();
        // r = self - c0 (positive total degree), f^{-1} = c0^{-1} sum (-r c0^{-1})^k
        let mut r = self.clone();
        r.terms.remove(&zero_exps);
        let neg_r_c0inv = r.neg().mul(&Self::constant(self.vars.clone(), c0_inv.clone()));
        let mut acc = Self::constant(self.vars.clone(), one);
        let mut power = acc.clone();
        for _ in 0..self.vars.cap() {
            power = power.mul(&neg_r_c0inv);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.mul(&Self::constant(self.vars.clone(), c0_inv)))
    }

    pub fn pow_int(&self, k: i64) -> Result<Self, String> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut k = k.unsigned_abs();
        // need a one; derive from any coefficient, or fall back to error
        let one = match self.terms.values().next() {
            Some(c) => c.one_like(),
            None => return Err("cannot take pow of zero series without a unit".into()),
        };
        let mut result = Self::constant(self.vars.clone(), one);
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Ok(result)
    }
}

impl MSeries<LaurentSeries> {
    pub fn one_q(vars: Arc<VarTable>, order: i64) -> Self {
        Self::constant(vars, LaurentSeries::one(order))
    }

    /// Coefficient-wise comparison on the overlap of certified tau-windows.
    /// Ok carries the narrowest window actually compared; Err carries the
    /// offending monomial exponents and the first divergent tau-exponent.
    pub fn eq_windowed(&self, other: &Self) -> Result<i64, (Vec<u32>, i64)> {
        assert_eq!(self.vars, other.vars, "mismatched variable tables");
        let mut keys: std::collections::BTreeSet<Vec<u32>> = BTreeSet::new();
        keys.extend(self.terms.keys().cloned());
        keys.extend(other.terms.keys().cloned());
        let mut window = i64::MAX;
        for e in keys {
            let (a, b) = match (self.terms.get(&e), other.terms.get(&e)) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                (Some(a), None) => {
                    let z = LaurentSeries::zero(a.order());
                    (a.clone(), z)
                }
                (None, Some(b)) => (LaurentSeries::zero(b.order()), b.clone()),
                (None, None) => unreachable!(),
            };
            let w = a.valid_to().min(b.valid_to());
            window = window.min(w);
            if let Err(exp) = a.eq_to_order(&b, w) {
                return Err((e, exp));
            }
        }
        Ok(window)
    }
}

impl MSeries<TPoly> {
    pub fn one_t(vars: Arc<VarTable>, nvars_t: usize) -> Self {
        Self::constant(vars, TPoly::one(nvars_t))
    }
}

/// MacMahon-type product M(z;q) = prod_{n>=1} (1 - z q^{-n})^n for a
/// signed-monomial argument z, expanded exactly up to the caps.
///
/// With tau = q^{-1/2} each factor is (1 - z tau^{2n})^n, so factors with
/// 2n > order contribute nothing inside the tau window and are skipped;
/// a zero-degree argument would make the product non-truncating.
pub fn macmahon(z: &Monomial, vars: &Arc<VarTable>, order: i64) -> Result<MSeries<LaurentSeries>, String> {
    if z.degree() == 0 {
        return Err("non-truncating product: zero-degree argument".into());
    }
    let mut acc = MSeries::one_q(vars.clone(), order);
    if z.degree() > vars.cap() {
        return Ok(acc);
    }
    let mut n = 1i64;
    while 2 * n <= order {
        let factor = MSeries::one_q(vars.clone(), order).sub(&MSeries::term(
            vars.clone(),
            z,
            LaurentSeries::monomial(Rat::one(), 2 * n, order),
        ));
        acc = acc.mul(&factor.pow_int(n).expect("positive power"));
        n += 1;
    }
    Ok(acc)
}

/// Flavor of Euler-type product over a monomial argument u.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerMode {
    /// prod_{n>=1} (1 - u^n)^{-1}
    InvFull,
    /// prod_{n>=1} (1 + u^{2n-1})
    OddPlus,
}

/// Euler-type products, generic over the coefficient domain.
pub fn euler_product<C: CoeffRing>(
    u: &Monomial,
    mode: EulerMode,
    vars: &Arc<VarTable>,
    one: C,
) -> Result<MSeries<C>, String> {
    if u.degree() == 0 {
        return Err("non-truncating product: zero-degree argument".into());
    }
    let cap = vars.cap();
    let mut acc = MSeries::constant(vars.clone(), one.clone());
    match mode {
        EulerMode::InvFull => {
            let mut n = 1u32;
            while n * u.degree() <= cap {
                let factor = MSeries::constant(vars.clone(), one.clone())
                    .sub(&MSeries::term(vars.clone(), &u.pow(n), one.clone()));
                acc = acc.mul(&factor.invert()?);
                n += 1;
            }
        }
        EulerMode::OddPlus => {
            let mut n = 1u32;
            while (2 * n - 1) * u.degree() <= cap {
                let factor = MSeries::constant(vars.clone(), one.clone())
                    .add(&MSeries::term(vars.clone(), &u.pow(2 * n - 1), one.clone()));
                acc = acc.mul(&factor);
                n += 1;
            }
        }
    }
    Ok(acc)
}

/// (base)^T for a symbolic t-polynomial exponent, via the binomial series
/// sum_k binom(T,k) (base-1)^k; base must have constant term exactly 1.
pub fn pow_binomial(base: &MSeries<TPoly>, t: &TPoly) -> Result<MSeries<TPoly>, String> {
    let zero_exps = vec![0u32; base.vars().len()];
    match base.coeff(&zero_exps) {
        Some(c) if *c == TPoly::one(t.nvars()) => {}
        _ => return Err("pow_binomial requires constant term 1".into()),
    }
    let u = base.sub(&MSeries::one_t(base.vars().clone(), t.nvars()));
    let mut acc = MSeries::zero(base.vars().clone());
    let mut u_pow = MSeries::one_t(base.vars().clone(), t.nvars());
    for k in 0..=base.vars().cap() {
        let coeff = TPoly::binom(t, k);
        acc = acc.add(&u_pow.mul(&MSeries::constant(base.vars().clone(), coeff)));
        u_pow = u_pow.mul(&u);
        if u_pow.is_zero() {
            break;
        }
    }
    Ok(acc)
}
