//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//! All comparisons are exact rational coefficient equality on truncations.

use qvertex::fock::{
    check_commutation, trace, trace_product_conjugate, trace_product_identity, trace_word, Pairing,
};
use qvertex::identities::{
    conj_no_lhs, conj_no_rhs_a, conj_no_rhs_b, corollary_check, eq_tmode, lemma_inf_finite_check,
    no_classic_lhs, no_classic_rhs, ring_membership, theorem_check, zn_def, zn_prod, zn_sum,
    ztn_def, ztn_prod, ztn_sum, Caps, Corollary, Which,
};
use qvertex::partitions::{enumerate_up_to, Partition};
use qvertex::qseries::VarTable;
use qvertex::schur::{schur_rho_closed, skew_schur_spec, SpecContext};
use qvertex::tpoly::TPoly;
use qvertex::vertex::{check_mirror, check_rotation};
use std::sync::Arc;

const ORACLE_CAPS: [(usize, u32, i64); 3] = [(1, 4, 24), (2, 3, 20), (3, 2, 20)];

fn verdict(criterion: &str, ok: bool) {
    println!("{}: criterion {}", if ok { "PASS" } else { "FAIL" }, criterion);
    assert!(ok, "criterion {}", criterion);
}

#[test]
fn criterion_01_three_way_oracle_zn() {
    let mut ok = true;
    for (n, d, m) in ORACLE_CAPS {
        let caps = Caps::q_mode(n, d, m);
        let def = zn_def(caps);
        ok &= def.eq_windowed(&zn_sum(caps)).is_ok();
        ok &= def.eq_windowed(&zn_prod(caps)).is_ok();
    }
    verdict("1 (three-way oracle Z_N)", ok);
}

#[test]
fn criterion_02_three_way_oracle_ztn() {
    let mut ok = true;
    for (n, d, m) in ORACLE_CAPS {
        let caps = Caps::q_mode(n, d, m);
        let def = ztn_def(caps);
        ok &= def.eq_windowed(&ztn_sum(caps)).is_ok();
        ok &= def.eq_windowed(&ztn_prod(caps)).is_ok();
    }
    verdict("2 (three-way oracle tZ_N)", ok);
}

#[test]
fn criterion_03_theorems_both_parities() {
    let mut ok = true;
    for (n, d, m) in ORACLE_CAPS {
        for which in [Which::Main, Which::Main2] {
            ok &= theorem_check(which, Caps::q_mode(n, d, m)).passed();
        }
    }
    verdict("3 (theorems, both parity branches, N = 1..3)", ok);
}

#[test]
fn criterion_04_lemma_inf_finite() {
    let mut ok = true;
    for mu in enumerate_up_to(3) {
        for nu in enumerate_up_to(3) {
            ok &= lemma_inf_finite_check(&mu, &nu, 3, 24).passed();
        }
    }
    verdict("4 (inf/inf = finite lemma, |mu|, |nu| <= 3)", ok);
}

fn fock_vars(l: usize, d: u32) -> Arc<VarTable> {
    let mut names = vec!["Q".to_string()];
    for i in 1..=l {
        names.push(format!("x{}", i));
    }
    for i in 1..=l {
        names.push(format!("y{}", i));
    }
    VarTable::new(names, d)
}

fn sign_patterns(l: usize) -> Vec<(Vec<i8>, Vec<i8>)> {
    (0..1u32 << (2 * l))
        .map(|bits| {
            let eps1 = (0..l).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect();
            let eps2 = (0..l)
                .map(|i| if bits >> (l + i) & 1 == 1 { -1 } else { 1 })
                .collect();
            (eps1, eps2)
        })
        .collect()
}

#[test]
fn criterion_05_fock_lemmas_and_commutation() {
    let mut ok = true;
    let m = 16;
    for l in 1..=3usize {
        let d = 3;
        let vars = fock_vars(l, d);
        for (eps1, eps2) in sign_patterns(l) {
            let word = trace_word(&eps1, &eps2, &vars);
            let t = trace(&word, Pairing::Identity, d, &vars, m).unwrap();
            let p = trace_product_identity(&eps1, &eps2, &vars, m).unwrap();
            ok &= t.eq_windowed(&p).is_ok();
        }
    }
    for l in 1..=2usize {
        let d = 4;
        let vars = fock_vars(l, d);
        for (eps1, eps2) in sign_patterns(l) {
            let word = trace_word(&eps1, &eps2, &vars);
            let t = trace(&word, Pairing::Conjugate, d, &vars, m).unwrap();
            let p = trace_product_conjugate(&eps1, &eps2, &vars, m).unwrap();
            ok &= t.eq_windowed(&p).is_ok();
        }
    }
    // commutation relations on all kets |lambda| <= 4
    let zw = VarTable::new(vec!["z".into(), "w".into()], 2);
    ok &= check_commutation(6, &zw, m);
    verdict("5 (fock trace lemmas + commutation)", ok);
}

#[test]
fn criterion_06_vertex_symmetries() {
    let order = 30;
    let mut ok = true;
    for a in enumerate_up_to(6) {
        for b in enumerate_up_to(6 - a.size()) {
            for c in enumerate_up_to(6 - a.size() - b.size()) {
                ok &= check_rotation(&a, &b, &c, order);
            }
        }
    }
    for a in enumerate_up_to(5) {
        for b in enumerate_up_to(5 - a.size()) {
            for c in enumerate_up_to(5 - a.size() - b.size()) {
                ok &= check_mirror(&a, &b, &c, order);
            }
        }
    }
    verdict("6 (vertex rotation <= 6, mirror <= 5)", ok);
}

#[test]
fn criterion_07_schur_oracle() {
    let order = 40;
    let mut ctx = SpecContext::new(Partition::empty(), order);
    let mut ok = true;
    for lam in enumerate_up_to(8) {
        let a = skew_schur_spec(&lam, &Partition::empty(), &mut ctx);
        let b = schur_rho_closed(&lam, order);
        let w = a.valid_to().min(b.valid_to());
        ok &= a.eq_to_order(&b, w).is_ok();
    }
    verdict("7 (determinant vs hook-product Schur oracle, |lambda| <= 8)", ok);
}

#[test]
fn criterion_08_classic_no() {
    let mut ok = corollary_check(Corollary::CorMain2, Caps::t_mode(1, 6)).passed();
    ok &= eq_tmode(&no_classic_lhs(6), &no_classic_rhs(6)).is_ok();
    // t = 1 collapse: both sides reduce to 1 up to s_deg = 10
    let one: qvertex::Rat = num_traits::One::one();
    for side in [no_classic_lhs(10), no_classic_rhs(10)] {
        for (e, c) in side.terms() {
            let v = c.eval(&[one.clone()]);
            let expect: qvertex::Rat = if e.iter().all(|&x| x == 0) {
                num_traits::One::one()
            } else {
                num_traits::Zero::zero()
            };
            ok &= v == expect;
        }
    }
    verdict("8 (classic Nekrasov-Okounkov, s_deg = 6; t = 1 collapse to 10)", ok);
}

#[test]
fn criterion_09_conjugation_no() {
    let t2m1 = TPoly::var(1, 1).mul(&TPoly::var(1, 1)).sub(&TPoly::one(1));
    let mut ok = conj_no_lhs(1).coeff(&[1]) == Some(&t2m1);
    ok &= conj_no_rhs_a(1).coeff(&[1]) == Some(&t2m1);
    ok &= corollary_check(Corollary::ConjNo, Caps::t_mode(1, 5)).passed();
    ok &= eq_tmode(&conj_no_rhs_a(8), &conj_no_rhs_b(8)).is_ok();
    verdict("9 (conjugation NO: s^1 = t^2 - 1, s_deg = 5, RHS forms to 8)", ok);
}

#[test]
fn criterion_10_corollaries_n2_and_eps_j() {
    let mut ok = corollary_check(Corollary::CorMain, Caps::t_mode(2, 4)).passed();
    ok &= corollary_check(Corollary::CorMain2, Caps::t_mode(2, 4)).passed();
    // the odd-N branch pins the eps_j convention
    let odd = corollary_check(Corollary::CorMain, Caps::t_mode(1, 4));
    ok &= odd.passed();
    println!(
        "       eps_j adjudication: {}",
        odd.note.as_deref().unwrap_or("(none)")
    );
    verdict("10 (corollaries at N = 2, eps_j convention pinned)", ok);
}

#[test]
fn criterion_11_ring_membership() {
    let mut ok = true;
    for (n, d, m) in ORACLE_CAPS {
        for which in [Which::Main, Which::Main2] {
            ok &= ring_membership(which, Caps::q_mode(n, d, m));
        }
    }
    verdict("11 (no negative tau-exponents in assembled LHS)", ok);
}
