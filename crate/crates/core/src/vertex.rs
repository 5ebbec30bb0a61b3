//! The topological vertex C_{lambda,mu,nu}(q) and its rotation and mirror
//! symmetries.

use crate::laurent::LaurentSeries;
use crate::partitions::{sub_partitions, Partition};
use crate::schur::{schur_rho_closed, skew_schur_spec, SpecContext};
use crate::Rat;
use num_traits::One;
use std::collections::HashMap;

/// A computed vertex amplitude together with its labels.
#[derive(Clone, Debug)]
pub struct VertexValue {
    pub labels: (Partition, Partition, Partition),
    pub value: LaurentSeries,
}

/// C_{lambda,mu,nu}(q) = q^{kappa(lambda)/2 + kappa(nu)/2} s_{nu^t}(q^rho)
/// sum_eta s_{lambda^t/eta}(q^{nu+rho}) s_{mu/eta}(q^{nu^t+rho}),
/// with q-powers carried as tau-powers (q^{k/2} = tau^{-k}).
pub fn topological_vertex(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    order: i64,
) -> VertexValue {
    let lam_t = lambda.conjugate();
    let nu_t = nu.conjugate();
    let mut ctx_nu = SpecContext::new(nu.clone(), order);
    let mut ctx_nu_t = SpecContext::new(nu_t.clone(), order);

    // eta must fit inside both lambda^t and mu for either factor to survive
    let small = if lam_t.size() <= mu.size() { &lam_t } else { mu };
    let other = if lam_t.size() <= mu.size() { mu } else { &lam_t };
    let mut eta_sum = LaurentSeries::zero(order);
    for eta in sub_partitions(small) {
        if !other.contains(&eta) {
            continue;
        }
        let a = skew_schur_spec(&lam_t, &eta, &mut ctx_nu);
        let b = skew_schur_spec(mu, &eta, &mut ctx_nu_t);
        eta_sum = eta_sum.add(&a.mul(&b));
    }
    let prefactor = LaurentSeries::monomial(Rat::one(), -lambda.kappa() - nu.kappa(), order);
    let value = prefactor
        .mul(&schur_rho_closed(&nu_t, order))
        .mul(&eta_sum);
    VertexValue {
        labels: (lambda.clone(), mu.clone(), nu.clone()),
        value,
    }
}

/// Cache over labels, useful for the symmetry sweeps and the raw
/// partition-function sums which revisit the same triples.
#[derive(Default)]
pub struct VertexCache {
    map: HashMap<(Partition, Partition, Partition, i64), LaurentSeries>,
}

impl VertexCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(
        &mut self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        order: i64,
    ) -> LaurentSeries {
        let key = (lambda.clone(), mu.clone(), nu.clone(), order);
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let v = topological_vertex(lambda, mu, nu, order).value;
        self.map.insert(key, v.clone());
        v
    }
}

/// C_{lambda,mu,nu} = C_{mu,nu,lambda} = C_{nu,lambda,mu} within the
/// shared certified window.
pub fn check_rotation(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    order: i64,
) -> bool {
    let a = topological_vertex(lambda, mu, nu, order).value;
    let b = topological_vertex(mu, nu, lambda, order).value;
    let c = topological_vertex(nu, lambda, mu, order).value;
    let w = a.valid_to().min(b.valid_to()).min(c.valid_to());
    a.eq_to_order(&b, w).is_ok() && a.eq_to_order(&c, w).is_ok()
}

/// C_{lambda,mu,nu} = tau^{-kappa(lambda)-kappa(mu)-kappa(nu)}
/// C_{mu^t,lambda^t,nu^t}.
pub fn check_mirror(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    order: i64,
) -> bool {
    let a = topological_vertex(lambda, mu, nu, order).value;
    let b = topological_vertex(&mu.conjugate(), &lambda.conjugate(), &nu.conjugate(), order).value;
    let shift = LaurentSeries::monomial(
        Rat::one(),
        -lambda.kappa() - mu.kappa() - nu.kappa(),
        order,
    );
    let rhs = shift.mul(&b);
    let w = a.valid_to().min(rhs.valid_to());
    a.eq_to_order(&rhs, w).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::geometric_inv;
    use crate::int;
    use crate::partitions::enumerate_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn e() -> Partition {
        Partition::empty()
    }

    #[test]
    fn empty_vertex_is_one() {
        let v = topological_vertex(&e(), &e(), &e(), 20).value;
        assert!(v.eq_to_order(&LaurentSeries::one(20), 20).is_ok());
    }

    #[test]
    fn single_box_values() {
        let order = 24;
        let expected = LaurentSeries::monomial(int(1), 1, order).mul(&geometric_inv(2, order));
        let v1 = topological_vertex(&e(), &p(&[1]), &e(), order).value;
        assert!(v1.eq_to_order(&expected, v1.valid_to().min(expected.valid_to())).is_ok());
        let v2 = topological_vertex(&e(), &e(), &p(&[1]), order).value;
        assert!(v2.eq_to_order(&expected, v2.valid_to().min(expected.valid_to())).is_ok());
    }

    #[test]
    fn rotation_small() {
        assert!(check_rotation(&p(&[1]), &e(), &e(), 24));
        assert!(check_rotation(&e(), &e(), &e(), 24));
    }

    #[test]
    fn mirror_small() {
        assert!(check_mirror(&e(), &e(), &e(), 24));
        assert!(check_mirror(&p(&[1]), &p(&[1]), &e(), 24));
        assert!(check_mirror(&p(&[2]), &p(&[1]), &p(&[1]), 30));
    }

    #[test]
    fn rotation_sweep_size_4() {
        // the full size <= 6 sweep runs in the acceptance suite
        let order = 30;
        for a in enumerate_up_to(4) {
            for b in enumerate_up_to(4 - a.size()) {
                for c in enumerate_up_to(4 - a.size() - b.size()) {
                    assert!(check_rotation(&a, &b, &c, order), "{} {} {}", a, b, c);
                }
            }
        }
    }

    #[test]
    fn vacuum_pairing_consistency() {
        // C_{lam,mu,empty} = tau^{-kappa(lam)} sum_eta s_{lam^t/eta}(q^rho) s_{mu/eta}(q^rho)
        let order = 24;
        for (lam, mu) in [(p(&[2]), p(&[1, 1])), (p(&[2, 1]), p(&[1]))] {
            let v = topological_vertex(&lam, &mu, &e(), order).value;
            let mut direct = LaurentSeries::zero(order);
            let lam_t = lam.conjugate();
            for eta in sub_partitions(&lam_t) {
                if !mu.contains(&eta) {
                    continue;
                }
                let mut ctx = SpecContext::new(e(), order);
                let a = skew_schur_spec(&lam_t, &eta, &mut ctx);
                let b = skew_schur_spec(&mu, &eta, &mut ctx);
                direct = direct.add(&a.mul(&b));
            }
            let rhs = LaurentSeries::monomial(int(1), -lam.kappa(), order).mul(&direct);
            let w = v.valid_to().min(rhs.valid_to());
            assert!(v.eq_to_order(&rhs, w).is_ok());
        }
    }
}
