//! Exact-rational polynomials in the symbolic exponent variables
//! t_1..t_N, the coefficient domain of the beta -> 0 corollaries.

use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct TPoly {
    /// Number of t-variables.
    nvars: usize,
    /// exponent vector -> coefficient; no zero coefficients stored.
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    write!(f, "*t{}^{}", i + 1, e)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl TPoly {
    pub fn zero(nvars: usize) -> Self {
        TPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rat::one(), nvars)
    }

    /// The variable t_i (1-based).
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exps, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        TPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        TPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    /// Evaluate at the given rational values for t_1..t_N.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.nvars);
        let mut sum = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(exps) {
                for _ in 0..e {
                    term *= v;
                }
            }
            sum += term;
        }
        sum
    }

    /// Falling-factorial binomial coefficient binom(T, k) = T(T-1)...(T-k+1)/k!.
    pub fn binom(t: &TPoly, k: u32) -> TPoly {
        let mut num = TPoly::one(t.nvars);
        let mut fact = Rat::one();
        for j in 0..k {
            let shifted = t.sub(&TPoly::constant(crate::int(j as i64), t.nvars));
            num = num.mul(&shifted);
            fact *= crate::int(j as i64 + 1);
        }
        num.scale(&(Rat::one() / fact))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }
}
