//! Principal specializations of Schur and skew Schur functions at
//! q^{nu+rho}, evaluated as truncated Laurent series in tau = q^{-1/2}.
//!
//! Power sums have an exact closed form (the infinite tail beyond l(nu)
//! folds into a geometric factor), complete homogeneous values follow by
//! Newton's identities, and skew Schur values come from the Jacobi-Trudi
//! determinant. A hook-length closed form for s_lambda(q^rho) serves as an
//! independent oracle.

use crate::laurent::{geometric_inv, LaurentSeries};
use crate::partitions::Partition;
use crate::Rat;
use num_traits::One;
use std::collections::HashMap;

/// Evaluation context for a fixed shift nu and truncation order; caches
/// specialized power sums and complete homogeneous values.
pub struct SpecContext {
    nu: Partition,
    order: i64,
    p_cache: Vec<LaurentSeries>,
    h_cache: Vec<LaurentSeries>,
}

impl SpecContext {
    pub fn new(nu: Partition, order: i64) -> Self {
        SpecContext {
            nu,
            order,
            p_cache: Vec::new(),
            h_cache: Vec::new(),
        }
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// p_n(q^{nu+rho}) for n >= 1.
    pub fn power_sum(&mut self, n: i64) -> LaurentSeries {
        assert!(n >= 1);
        while (self.p_cache.len() as i64) < n {
            let k = self.p_cache.len() as i64 + 1;
            self.p_cache.push(power_sum_spec(k, &self.nu, self.order));
        }
        self.p_cache[(n - 1) as usize].clone()
    }

    /// h_k(q^{nu+rho}) by Newton's identities; h_0 = 1, h_{k<0} = 0.
    pub fn complete_h(&mut self, k: i64) -> LaurentSeries {
        if k < 0 {
            return LaurentSeries::zero(self.order);
        }
        if self.h_cache.is_empty() {
            self.h_cache.push(LaurentSeries::one(self.order));
        }
        while (self.h_cache.len() as i64) <= k {
            let m = self.h_cache.len() as i64;
            // m h_m = sum_{j=1}^m p_j h_{m-j}
            let mut sum = LaurentSeries::zero(self.order);
            for j in 1..=m {
                let p = self.power_sum(j);
                let h = self.h_cache[(m - j) as usize].clone();
                sum = sum.add(&p.mul(&h));
            }
            self.h_cache.push(sum.scale(&(Rat::one() / crate::int(m))));
        }
        self.h_cache[k as usize].clone()
    }
}

/// Closed form for p_n(q^{nu+rho}): the finite corrections from the first
/// l(nu) variables plus the geometric tail tau^n/(1-tau^{2n}).
pub fn power_sum_spec(n: i64, nu: &Partition, order: i64) -> LaurentSeries {
    assert!(n >= 1);
    let mut sum = LaurentSeries::monomial(Rat::one(), n, order).mul(&geometric_inv(2 * n, order));
    for i in 1..=nu.len() as i64 {
        let shifted = LaurentSeries::monomial(Rat::one(), n * (2 * i - 2 * nu.part(i) - 1), order);
        let plain = LaurentSeries::monomial(Rat::one(), n * (2 * i - 1), order);
        sum = sum.add(&shifted.sub(&plain));
    }
    sum
}

/// s_{lambda/mu}(q^{nu+rho}) via the Jacobi-Trudi determinant
/// det(h_{lambda_i - mu_j - i + j}). Zero when mu is not contained in
/// lambda.
pub fn skew_schur_spec(
    lambda: &Partition,
    mu: &Partition,
    ctx: &mut SpecContext,
) -> LaurentSeries {
    let order = ctx.order();
    if !lambda.contains(mu) {
        return LaurentSeries::zero(order);
    }
    let n = lambda.len() as i64;
    if n == 0 {
        return LaurentSeries::one(order);
    }
    // entries[i][j] = h_{lambda_{i+1} - mu_{j+1} - (i+1) + (j+1)}
    let mut entries = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n as usize);
        for j in 1..=n {
            row.push(ctx.complete_h(lambda.part(i) - mu.part(j) - i + j));
        }
        entries.push(row);
    }
    det_memo(&entries, 0, (1u32 << n) - 1, &mut HashMap::new(), order)
}

/// Cofactor expansion over rows with memoization on the remaining column
/// set; no division, so series inversion never happens inside the
/// determinant.
fn det_memo(
    m: &[Vec<LaurentSeries>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, LaurentSeries>,
    order: i64,
) -> LaurentSeries {
    if cols == 0 {
        return LaurentSeries::one(order);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = LaurentSeries::zero(order);
    let mut sign = 1i64;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        let minor = det_memo(m, row + 1, cols & !(1 << j), memo, order);
        let term = entry.mul(&minor);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Hook-length closed form for s_lambda(q^rho):
/// tau^{2 n(lambda) + |lambda|} prod_{cells} 1/(1 - tau^{2 h}).
pub fn schur_rho_closed(lambda: &Partition, order: i64) -> LaurentSeries {
    let mut acc = LaurentSeries::monomial(
        Rat::one(),
        2 * lambda.n_stat() + lambda.size() as i64,
        order,
    );
    let stats = lambda.cell_stats();
    for (i, j) in lambda.cells() {
        acc = acc.mul(&geometric_inv(2 * stats.hook(i, j), order));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::partitions::enumerate_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn power_sum_empty_shift() {
        // p_1(q^rho) = tau + tau^3 + tau^5 + ...
        let s = power_sum_spec(1, &Partition::empty(), 21);
        for k in 0..=10i64 {
            assert_eq!(s.coeff(2 * k + 1), int(1));
            assert_eq!(s.coeff(2 * k), int(0));
        }
        // p_2(q^rho) = tau^2/(1-tau^4)
        let s2 = power_sum_spec(2, &Partition::empty(), 20);
        for k in 0..=4i64 {
            assert_eq!(s2.coeff(2 + 4 * k), int(1));
        }
        assert_eq!(s2.coeff(4), int(0));
    }

    #[test]
    fn power_sum_shift_one() {
        // nu = (1): x_1 = q^{1/2}, x_i = q^{-i+1/2} for i >= 2
        // p_1 = tau^{-1} + tau^3/(1-tau^2)
        let s = power_sum_spec(1, &p(&[1]), 20);
        assert_eq!(s.coeff(-1), int(1));
        assert_eq!(s.coeff(1), int(0));
        for k in 0..=8i64 {
            assert_eq!(s.coeff(3 + 2 * k), int(1));
        }
    }

    #[test]
    fn power_sum_brute_force() {
        // brute-force monomial sums over x_i = q^{nu_i - i + 1/2} truncated
        let order = 30;
        for nu in [Partition::empty(), p(&[1]), p(&[2, 1]), p(&[3, 1, 1])] {
            for n in 1..=3i64 {
                let closed = power_sum_spec(n, &nu, order);
                let mut brute = LaurentSeries::zero(order);
                // tau-exponent of x_i^n is n(2i - 2 nu_i - 1); grows with i
                let mut i = 1i64;
                loop {
                    let e = n * (2 * i - 2 * nu.part(i) - 1);
                    if i > nu.len() as i64 && e > order {
                        break;
                    }
                    brute = brute.add(&LaurentSeries::monomial(int(1), e, order));
                    i += 1;
                }
                assert!(closed.eq_to_order(&brute, order - 1).is_ok(), "n={} nu={}", n, nu);
            }
        }
    }

    #[test]
    fn complete_h_examples() {
        let mut ctx = SpecContext::new(Partition::empty(), 24);
        assert!(ctx.complete_h(0).eq_to_order(&LaurentSeries::one(24), 24).is_ok());
        // h_1 = p_1 = tau/(1-tau^2)
        let h1 = ctx.complete_h(1);
        let expected = LaurentSeries::monomial(int(1), 1, 24).mul(&geometric_inv(2, 24));
        assert!(h1.eq_to_order(&expected, 24).is_ok());
        assert!(ctx.complete_h(-1).is_zero());
    }

    #[test]
    fn complete_h2_brute_force() {
        // h_2(q^rho) = sum_{i<=j} x_i x_j with x_i = tau^{2i-1}
        let order = 24;
        let mut ctx = SpecContext::new(Partition::empty(), order);
        let h2 = ctx.complete_h(2);
        let mut brute = LaurentSeries::zero(order);
        for i in 1..=order {
            for j in i..=order {
                let e = (2 * i - 1) + (2 * j - 1);
                if e <= order {
                    brute = brute.add(&LaurentSeries::monomial(int(1), e, order));
                }
            }
        }
        assert!(h2.eq_to_order(&brute, order).is_ok());
    }

    #[test]
    fn skew_schur_basics() {
        let order = 24;
        let mut ctx = SpecContext::new(Partition::empty(), order);
        // s_{(1)} = p_1
        let s1 = skew_schur_spec(&p(&[1]), &Partition::empty(), &mut ctx);
        let expected = LaurentSeries::monomial(int(1), 1, order).mul(&geometric_inv(2, order));
        assert!(s1.eq_to_order(&expected, order).is_ok());
        // mu not contained in lambda
        let z = skew_schur_spec(&p(&[1]), &p(&[2]), &mut ctx);
        assert!(z.is_zero());
    }

    #[test]
    fn closed_form_examples() {
        let order = 30;
        assert!(schur_rho_closed(&Partition::empty(), order)
            .eq_to_order(&LaurentSeries::one(order), order)
            .is_ok());
        let s1 = schur_rho_closed(&p(&[1]), order);
        let expected = LaurentSeries::monomial(int(1), 1, order).mul(&geometric_inv(2, order));
        assert!(s1.eq_to_order(&expected, order).is_ok());
        // (2,1): tau^{2n+|lam|} = tau^5 over hooks {3,1,1}
        let s21 = schur_rho_closed(&p(&[2, 1]), order);
        let expected21 = LaurentSeries::monomial(int(1), 5, order)
            .mul(&geometric_inv(6, order))
            .mul(&geometric_inv(2, order))
            .mul(&geometric_inv(2, order));
        assert!(s21.eq_to_order(&expected21, order).is_ok());
    }

    #[test]
    fn jacobi_trudi_matches_hook_oracle() {
        let order = 40;
        for lam in enumerate_up_to(8) {
            let mut ctx = SpecContext::new(Partition::empty(), order);
            let jt = skew_schur_spec(&lam, &Partition::empty(), &mut ctx);
            let closed = schur_rho_closed(&lam, order);
            assert!(
                jt.eq_to_order(&closed, order).is_ok(),
                "mismatch for {}",
                lam
            );
        }
    }

    #[test]
    fn conjugation_shift() {
        // schur_rho_closed(lam) / schur_rho_closed(lam^t) = tau^{2n(lam)-2n(lam^t)}
        let order = 40;
        for lam in enumerate_up_to(8) {
            let a = schur_rho_closed(&lam, order);
            let b = schur_rho_closed(&lam.conjugate(), order);
            let shift = 2 * lam.n_stat() - 2 * lam.conjugate().n_stat();
            let shifted = b.mul(&LaurentSeries::monomial(int(1), shift, order));
            let window = a.valid_to().min(shifted.valid_to());
            assert!(a.eq_to_order(&shifted, window).is_ok(), "lam {}", lam);
        }
    }

    #[test]
    fn skew_homogeneity_lowest_exponent() {
        let order = 30;
        let lam = p(&[3, 2]);
        for mu in crate::partitions::sub_partitions(&lam) {
            let mut ctx = SpecContext::new(Partition::empty(), order);
            let s = skew_schur_spec(&lam, &mu, &mut ctx);
            if let Some(lo) = s.lowest_exponent() {
                assert!(lo >= (lam.size() - mu.size()) as i64);
            }
        }
    }
}
