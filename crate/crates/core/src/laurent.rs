//! Truncated Laurent series in tau = q^{-1/2} with exact rational
//! coefficients.
//!
//! Every series carries the ambient truncation order `order` (exponents
//! above it are never stored) together with a certified bound `valid`:
//! all coefficients for exponents <= valid are exact. Multiplication by a
//! series with a negative lowest exponent shrinks the certified window,
//! which is how the comparison code knows how far an identity check is
//! actually guaranteed.

use crate::Rat;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone)]
pub struct LaurentSeries {
    /// Lowest exponent; meaningless when the series is zero.
    lo: i64,
    /// Dense coefficients for exponents lo ..= valid (zero series: empty).
    coeffs: Vec<Rat>,
    /// Ambient truncation order, shared by all operands of a computation.
    order: i64,
    /// Certified exactness bound, <= order.
    valid: i64,
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (+O(tau^{}))", self.valid + 1);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})t^{}", c, e)?;
            first = false;
        }
        write!(f, " + O(tau^{})", self.valid + 1)
    }
}

/// Semantic equality: same ambient order and the same nonzero terms.
/// Certified windows are compared by [`LaurentSeries::eq_to_order`], not
/// here.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.terms() == other.terms()
    }
}

impl Eq for LaurentSeries {}

impl LaurentSeries {
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            lo: 0,
            coeffs: Vec::new(),
            order,
            valid: order,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Rat::one(), 0, order)
    }

    /// c * tau^e.
    pub fn monomial(c: Rat, e: i64, order: i64) -> Self {
        if c.is_zero() || e > order {
            return Self::zero(order);
        }
        LaurentSeries {
            lo: e,
            coeffs: vec![c],
            order,
            valid: order,
        }
    }

    /// q^e as a tau-monomial via q = tau^{-2}.
    pub fn q_power(e: i64, order: i64) -> Self {
        Self::monomial(Rat::one(), -2 * e, order)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn valid_to(&self) -> i64 {
        self.valid
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest exponent with a nonzero certified coefficient, if any.
    pub fn lowest_exponent(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lo + i as i64)
    }

    pub fn coeff(&self, e: i64) -> Rat {
        if e < self.lo || e > self.valid {
            return Rat::zero();
        }
        self.coeffs
            .get((e - self.lo) as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn normalize(&mut self) {
        while let Some(c) = self.coeffs.first() {
            if c.is_zero() {
                self.coeffs.remove(0);
                self.lo += 1;
            } else {
                break;
            }
        }
        while self.coeffs.len() as i64 > self.valid - self.lo + 1 {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mismatched truncation orders");
        let valid = self.valid.min(other.valid);
        if self.is_zero() {
            let mut r = other.clone();
            r.valid = valid;
            r.normalize();
            return r;
        }
        if other.is_zero() {
            let mut r = self.clone();
            r.valid = valid;
            r.normalize();
            return r;
        }
        let lo = self.lo.min(other.lo);
        let mut coeffs = vec![Rat::zero(); (valid - lo + 1).max(0) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.lo + i as i64;
            if e <= valid {
                coeffs[(e - lo) as usize] += c;
            }
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let e = other.lo + i as i64;
            if e <= valid {
                coeffs[(e - lo) as usize] += c;
            }
        }
        let mut r = LaurentSeries {
            lo,
            coeffs,
            order: self.order,
            valid,
        };
        r.normalize();
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.coeffs {
            *c = -c.clone();
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.order);
        }
        let mut r = self.clone();
        for c in &mut r.coeffs {
            *c *= s;
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mismatched truncation orders");
        if self.is_zero() || other.is_zero() {
            // exact zero; certify as far as the factors allow
            let mut z = Self::zero(self.order);
            z.valid = if self.is_zero() && !other.is_zero() {
                (self.valid + other.lo).min(self.order)
            } else if other.is_zero() && !self.is_zero() {
                (other.valid + self.lo).min(self.order)
            } else {
                self.valid.min(other.valid)
            };
            return z;
        }
        let lo = self.lo + other.lo;
        let valid = (self.valid + other.lo)
            .min(other.valid + self.lo)
            .min(self.order);
        if valid < lo {
            let mut z = Self::zero(self.order);
            z.valid = valid;
            return z;
        }
        let mut coeffs = vec![Rat::zero(); (valid - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.lo + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ea + other.lo + j as i64;
                if e > valid {
                    break;
                }
                coeffs[(e - lo) as usize] += a * b;
            }
        }
        let mut r = LaurentSeries {
            lo,
            coeffs,
            order: self.order,
            valid,
        };
        r.normalize();
        r
    }

    /// Multiplicative inverse up to the certified window.
    ///
    /// Writes self = c tau^lo (1 + u) with u of positive order and expands
    /// the geometric series; errors on the zero series.
    pub fn invert(&self) -> Result<Self, String> {
        if self.is_zero() {
            return Err("non-invertible: zero series".into());
        }
        let mut a = self.clone();
        a.normalize();
        let lo = a.lo;
        let lead = a.coeffs[0].clone();
        // u = a / (lead tau^lo) - 1, exact to a.valid - lo
        let inv_lead = Rat::one() / lead.clone();
        let u_valid = a.valid - lo;
        let mut u_coeffs: Vec<Rat> = a.coeffs.iter().skip(1).map(|c| c * &inv_lead).collect();
        u_coeffs.truncate(u_valid.max(0) as usize);
        // result (of (1+u)^{-1}) accumulated as dense coeffs on [0, u_valid]
        let n = (u_valid + 1).max(1) as usize;
        let mut res = vec![Rat::zero(); n];
        res[0] = Rat::one();
        // power = (-u)^k
        let neg_u: Vec<Rat> = u_coeffs.iter().map(|c| -c.clone()).collect();
        let mut power = vec![Rat::zero(); n];
        power[0] = Rat::one();
        for _ in 0..n {
            // power *= -u (u starts at exponent 1)
            let mut next = vec![Rat::zero(); n];
            let mut any = false;
            for (i, p) in power.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (j, c) in neg_u.iter().enumerate() {
                    let e = i + j + 1;
                    if e < n && !c.is_zero() {
                        next[e] += p * c;
                        any = true;
                    }
                }
            }
            power = next;
            if !any {
                break;
            }
            for (r, p) in res.iter_mut().zip(power.iter()) {
                *r += p;
            }
        }
        for r in &mut res {
            *r *= &inv_lead;
        }
        let mut out = LaurentSeries {
            lo: -lo,
            coeffs: res,
            order: self.order,
            // 1/a is exact wherever a was; shifting by tau^{-lo} moves the
            // window by -2*lo relative to the input's own exponents
            valid: (a.valid - 2 * lo).min(self.order),
        };
        out.normalize();
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    /// Exact equality of all coefficients for exponents <= upto.
    /// Returns the first divergent exponent on failure.
    pub fn eq_to_order(&self, other: &Self, upto: i64) -> Result<(), i64> {
        assert!(
            upto <= self.valid && upto <= other.valid,
            "comparison window {} exceeds certified bounds ({}, {})",
            upto,
            self.valid,
            other.valid
        );
        let lo = if self.is_zero() && other.is_zero() {
            return Ok(());
        } else if self.is_zero() {
            other.lo
        } else if other.is_zero() {
            self.lo
        } else {
            self.lo.min(other.lo)
        };
        for e in lo..=upto {
            if self.coeff(e) != other.coeff(e) {
                return Err(e);
            }
        }
        Ok(())
    }

    /// Sorted (exponent, coefficient) pairs of the certified window.
    pub fn terms(&self) -> Vec<(i64, Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.lo + i as i64, c.clone()))
            .collect()
    }
}

/// 1 / (1 - tau^e) for e >= 1, a frequent building block.
pub fn geometric_inv(e: i64, order: i64) -> LaurentSeries {
    assert!(e >= 1);
    LaurentSeries::one(order)
        .sub(&LaurentSeries::monomial(Rat::one(), e, order))
        .invert()
        .expect("1 - tau^e is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn geometric_product_is_one() {
        let m = 20;
        let a = LaurentSeries::one(m).sub(&LaurentSeries::monomial(int(1), 2, m));
        let b = geometric_inv(2, m);
        let prod = a.mul(&b);
        assert!(prod.eq_to_order(&LaurentSeries::one(m), 20).is_ok());
    }

    #[test]
    fn monomial_inverse_cancels() {
        let m = 20;
        let a = LaurentSeries::monomial(int(1), -2, m);
        let b = LaurentSeries::monomial(int(1), 2, m);
        assert!(a.mul(&b).eq_to_order(&LaurentSeries::one(m), 18).is_ok());
    }

    #[test]
    fn cauchy_product_square() {
        // (tau (1 + tau^2 + tau^4 + ...))^2 = tau^2 + 2 tau^4 + 3 tau^6 + ...
        let m = 20;
        let g = geometric_inv(2, m);
        let t = LaurentSeries::monomial(int(1), 1, m).mul(&g);
        let sq = t.mul(&t);
        for k in 1..=9i64 {
            assert_eq!(sq.coeff(2 * k), int(k));
        }
        assert_eq!(sq.coeff(1), int(0));
    }

    #[test]
    fn invert_examples() {
        let m = 24;
        let g = geometric_inv(2, m);
        for k in 0..=12i64 {
            assert_eq!(g.coeff(2 * k), int(1));
            if 2 * k + 1 <= m {
                assert_eq!(g.coeff(2 * k + 1), int(0));
            }
        }
        let a = LaurentSeries::monomial(int(3), 2, m);
        let inv = a.invert().unwrap();
        assert_eq!(inv.terms(), vec![(-2, crate::rat(1, 3))]);
        let one = LaurentSeries::one(m);
        assert!(one.invert().unwrap().eq_to_order(&one, m).is_ok());
        assert!(LaurentSeries::zero(m).invert().is_err());
    }

    #[test]
    fn eq_to_order_examples() {
        let m = 30;
        let one = LaurentSeries::one(m);
        let beyond = one.add(&LaurentSeries::monomial(int(1), 21, m));
        assert!(one.eq_to_order(&beyond, 20).is_ok());
        let t = LaurentSeries::monomial(int(1), 1, m);
        assert_eq!(t.eq_to_order(&t.neg(), 20), Err(1));
    }

    #[test]
    fn valid_window_shrinks_with_negative_lo() {
        let m = 10;
        let a = LaurentSeries::monomial(int(1), -3, m).add(&LaurentSeries::one(m));
        let b = geometric_inv(1, m);
        let prod = a.mul(&b);
        assert_eq!(prod.valid_to(), m - 3);
    }

    #[test]
    fn invert_involution() {
        let m = 16;
        let a = LaurentSeries::one(m)
            .add(&LaurentSeries::monomial(int(2), 1, m))
            .add(&LaurentSeries::monomial(int(-1), 3, m));
        let back = a.invert().unwrap().invert().unwrap();
        assert!(back.eq_to_order(&a, m).is_ok());
    }
}
