use kschur_core::oracle;
use kschur_core::partition::partitions_of;
use kschur_core::symfunc::*;
use kschur_core::{Partition, SymFunc, TPoly};
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn s(x: &str) -> SymFunc {
    SymFunc::schur(p(x))
}

#[test]
fn perp_examples() {
    assert_eq!(e_perp(1, &s("2,1")), s("2").add(&s("1,1")));
    assert_eq!(e_perp(0, &s("3,2")), s("3,2"));
    assert_eq!(e_perp(3, &s("1,1,1")), SymFunc::one());
    assert_eq!(h_perp(1, &s("2,1")), s("2").add(&s("1,1")));
    assert_eq!(h_perp(2, &s("2")), SymFunc::one());
    assert_eq!(h_perp(0, &s("4,1")), s("4,1"));
}

#[test]
fn hall_pair_examples() {
    assert_eq!(hall_pair_h(&s("2,1"), &[2, 1]), TPoly::constant(1));
    assert_eq!(hall_pair_h(&s("2"), &[1, 1]), TPoly::constant(1));
    assert_eq!(hall_pair_h(&s("3,2,1"), &[3, 2, 1]), TPoly::constant(1));
    assert_eq!(hall_pair_h(&s("2,1"), &[1, 1, 1]), TPoly::constant(2));
}

#[test]
fn omega_examples() {
    assert_eq!(omega(&s("3")), s("1,1,1"));
    assert_eq!(omega(&s("2,1")), s("2,1"));
}

#[test]
fn dominance_examples() {
    assert!(dominance_leq(&[1, 1, 1, 1], &[2, 2, 0, 0]).unwrap());
    assert!(dominance_leq(&[2, 2], &[2, 2]).unwrap());
    assert!(!dominance_leq(&[2, 1, 1], &[1, 2, 1]).unwrap());
    assert!(dominance_leq(&[1, 2], &[1, 2, 0]).is_err());
}

#[test]
fn straightening_examples() {
    assert_eq!(schur_straighten(&[1, 2]), None);
    assert_eq!(schur_straighten(&[1, 3]), Some((-1, p("2,2"))));
    assert_eq!(schur_straighten(&[0, 0, 0]), Some((1, Partition::empty())));
    assert_eq!(schur_straighten(&[3, -1]), None);
}

#[test]
fn json_round_trip() {
    let f = s("3,1").scale(&TPoly::from_i64s(&[1, 0, -2])).add(&s("2,2"));
    let text = serde_json::to_string(&f).unwrap();
    assert!(text.starts_with(r#"{"basis":"schur","terms":["#));
    let back: SymFunc = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
}

fn partition() -> impl Strategy<Value = Partition> {
    (0usize..=7).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn omega_is_involution(lam in partition()) {
        let f = SymFunc::schur(lam);
        prop_assert_eq!(omega(&omega(&f)), f);
    }

    #[test]
    fn perps_commute(lam in partition(), d in 0usize..4, e in 0usize..4) {
        let f = SymFunc::schur(lam);
        prop_assert_eq!(e_perp(d, &h_perp(e, &f)), h_perp(e, &e_perp(d, &f)));
        prop_assert_eq!(e_perp(d, &e_perp(e, &f)), e_perp(e, &e_perp(d, &f)));
    }

    #[test]
    fn multiplication_matches_oracle(lam in partition(), n in 0usize..4) {
        let f = SymFunc::schur(lam.clone());
        prop_assert_eq!(h_times(n as i64, &f), oracle::h_times_schur(n, &lam));
        prop_assert_eq!(e_times(n as i64, &f), oracle::e_times_schur(n, &lam));
    }

    #[test]
    fn straightening_matches_jacobi_trudi(g in proptest::collection::vec(-2i64..5, 1..4)) {
        prop_assert_eq!(schur_of_weight(&g), oracle::jacobi_trudi(&g));
    }

    #[test]
    fn hall_pairing_is_kostka(lam in partition(), pick in 0usize..1000) {
        let all = partitions_of(lam.size());
        let mu = &all[pick % all.len()];
        let k = oracle::kostka(&lam, mu.parts());
        prop_assert_eq!(hall_pair_h(&SymFunc::schur(lam.clone()), mu.parts()), TPoly::constant(k as i64));
    }
}
