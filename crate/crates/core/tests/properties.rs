//! Randomized property tests for the ring invariants the checkers rely on:
//! truncated Laurent arithmetic must behave like a commutative ring within
//! the certified window, and partition statistics must satisfy the standard
//! conjugation identities.

use num_traits::{One, Zero};
use proptest::prelude::*;
use qvertex::laurent::LaurentSeries;
use qvertex::partitions::Partition;
use qvertex::Rat;

const ORDER: i64 = 12;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn arb_series() -> impl Strategy<Value = LaurentSeries> {
    prop::collection::vec((-4i64..=ORDER, arb_rat()), 0..6).prop_map(|terms| {
        let mut s = LaurentSeries::zero(ORDER);
        for (e, c) in terms {
            s = s.add(&LaurentSeries::monomial(c, e, ORDER));
        }
        s
    })
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

fn window2(a: &LaurentSeries, b: &LaurentSeries) -> i64 {
    a.valid_to().min(b.valid_to())
}

proptest! {
    #[test]
    fn add_commutes(a in arb_series(), b in arb_series()) {
        let l = a.add(&b);
        let r = b.add(&a);
        prop_assert!(l.eq_to_order(&r, window2(&l, &r)).is_ok());
    }

    #[test]
    fn mul_commutes(a in arb_series(), b in arb_series()) {
        let l = a.mul(&b);
        let r = b.mul(&a);
        prop_assert!(l.eq_to_order(&r, window2(&l, &r)).is_ok());
    }

    #[test]
    fn mul_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        let l = a.mul(&b).mul(&c);
        let r = a.mul(&b.mul(&c));
        prop_assert!(l.eq_to_order(&r, window2(&l, &r)).is_ok());
    }

    #[test]
    fn mul_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        let l = a.mul(&b.add(&c));
        let r = a.mul(&b).add(&a.mul(&c));
        prop_assert!(l.eq_to_order(&r, window2(&l, &r)).is_ok());
    }

    #[test]
    fn add_neg_is_zero(a in arb_series()) {
        let z = a.add(&a.neg());
        prop_assert!(z.is_zero());
    }

    #[test]
    fn one_is_identity(a in arb_series()) {
        let one = LaurentSeries::one(ORDER);
        let l = a.mul(&one);
        prop_assert!(l.eq_to_order(&a, window2(&l, &a)).is_ok());
    }

    #[test]
    fn invert_roundtrip(a in arb_series()) {
        if let Ok(inv) = a.invert() {
            let p = a.mul(&inv);
            let one = LaurentSeries::one(ORDER);
            prop_assert!(p.eq_to_order(&one, window2(&p, &one)).is_ok());
        }
    }

    #[test]
    fn conjugate_involution(p in arb_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugate_statistics(p in arb_partition()) {
        let pt = p.conjugate();
        prop_assert_eq!(p.size(), pt.size());
        prop_assert_eq!(p.kappa(), -pt.kappa());
        prop_assert_eq!(p.kappa(), p.norm_sq() - pt.norm_sq());
        // kappa(p) = 2 sum of contents
        let st = p.cell_stats();
        let contents: i64 = p.cells().iter().map(|&(j, k)| st.content(j, k)).sum();
        prop_assert_eq!(p.kappa(), 2 * contents);
    }

    #[test]
    fn hooks_match_conjugate(p in arb_partition()) {
        let pt = p.conjugate();
        let st = p.cell_stats();
        let st_t = pt.cell_stats();
        let mut hooks: Vec<i64> = p.cells().iter().map(|&(j, k)| st.hook(j, k)).collect();
        let mut hooks_t: Vec<i64> = pt.cells().iter().map(|&(j, k)| st_t.hook(j, k)).collect();
        hooks.sort_unstable();
        hooks_t.sort_unstable();
        prop_assert_eq!(hooks, hooks_t);
        // arm/leg swap under conjugation
        for &(j, k) in p.cells().iter() {
            prop_assert_eq!(st.arm(j, k), st_t.leg(k, j));
        }
    }

    #[test]
    fn containment_is_partial_order(p in arb_partition(), q in arb_partition()) {
        prop_assert!(p.contains(&p));
        if p.contains(&q) && q.contains(&p) {
            prop_assert_eq!(p, q);
        }
    }
}

#[test]
fn rat_sanity() {
    // anchor the strategies: Rat::new reduces fractions
    assert_eq!(Rat::new(2.into(), 4.into()), Rat::new(1.into(), 2.into()));
    assert!(Rat::zero() < Rat::one());
}
