use kschur_core::cores::*;
use kschur_core::oracle;
use kschur_core::partition::partitions_bounded;
use kschur_core::Partition;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn core(s: &str, n: usize) -> Core {
    Core::new(p(s), n).unwrap()
}

#[test]
fn bounded_partition_of_core() {
    assert_eq!(core("5,3,2,2,1", 5).to_bounded(), p("3,2,2,2,1"));
    assert_eq!(Core::empty(5).to_bounded(), Partition::empty());
    assert_eq!(core("6,6,5,4,4,3,2,2,1", 5).to_bounded(), p("2,2,2,2,2,2,2,2,1"));
}

#[test]
fn core_of_bounded_partition() {
    assert_eq!(to_core(&p("3,2,2,2,1"), 4).unwrap(), core("5,3,2,2,1", 5));
    assert_eq!(to_core(&p("2,1"), 4).unwrap(), core("2,1", 5));
    assert!(to_core(&p("5,1"), 4).is_err());
    assert!(Core::new(p("3"), 3).is_err());
}

#[test]
fn k_skew_diagrams() {
    let (kappa, eta) = k_skew(&p("6,6,4,3,3,2,1,1,1,1"), 7).unwrap();
    assert_eq!(kappa, p("11,10,5,4,4,2,1,1,1,1"));
    assert_eq!(eta, p("5,4,1,1,1"));
    let (kappa, eta) = k_skew(&p("3,1"), 4).unwrap();
    assert_eq!((kappa, eta), (p("3,1"), Partition::empty()));
}

#[test]
fn offsets_and_row_map() {
    let e = core("6,6,5,4,4,3,2,2,1", 5).edges();
    assert_eq!(e.offsets(-9, 8), vec![4, 0, 3, 0, 3, 3, -1, 2, -1, 2, 2, -2, 1, -2, 1, 1, -3, 0]);
    let f: Vec<i64> = (1..=5).map(|z| e.row_index(z)).collect();
    assert_eq!(f, vec![6, 5, 3, 1, 0]);
    let empty = Core::empty(5).edges();
    assert_eq!((1..=4).map(|z| empty.row_index(z)).collect::<Vec<_>>(), vec![0, -1, -2, -3]);
}

#[test]
fn reflections() {
    let e = core("6,6,5,4,4,3,2,2,1", 5).edges();
    let tau = e.reflect(-6, -2).unwrap();
    assert_eq!(tau, p("6,6,3,3,3,1,1,1,1"));
    assert_eq!(Core::new(tau, 5).unwrap().edges().reflect(-6, -2).unwrap(), p("6,6,5,4,4,3,2,2,1"));
    assert!(e.reflect(-6, 4).is_err());
}

#[test]
fn cover_and_spin_example() {
    let kappa = core("6,6,5,4,4,3,2,2,1", 5);
    assert_eq!(kappa.edges().cover(6), Some(p("6,6,3,3,3,1,1,1,1")));
    assert_eq!(kappa.edges().cover(10), None);
    let c = strong_covers_below(&kappa).into_iter().find(|c| c.z == 6).unwrap();
    assert_eq!(c.marks(), vec![3, 6]);
    assert_eq!((c.spin(6), c.spin(3)), (4, 5));
    let single = strong_covers_below(&core("1", 5));
    assert_eq!(single.len(), 1);
    assert_eq!(single[0].marks(), vec![1]);
    assert_eq!(single[0].spin(1), 0);
}

#[test]
fn vertical_tableaux_of_33332() {
    let ts = enumerate_tableaux(&p("3,3,3,3,2"), 4, &[5], true).unwrap();
    let mut found: Vec<(String, usize)> = ts.iter().map(|t| (t.inside().to_string(), t.spin())).collect();
    found.sort();
    let expect = [("2,2,2,2,1", 0), ("3,2,2,2", 2), ("3,3,1,1,1", 2), ("3,3,2,1", 3)];
    assert_eq!(found, expect.map(|(a, b)| (a.to_string(), b)).to_vec());
}

#[test]
fn vertical_tableaux_of_6654() {
    let ts = enumerate_tableaux(&p("6,6,5,4"), 7, &[4, 4, 4], true).unwrap();
    let mut spins: Vec<usize> = ts.iter().map(|t| t.spin()).collect();
    spins.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(spins, vec![3, 2, 2, 1, 1, 0]);
}

#[test]
fn empty_weight_gives_one_tableau() {
    let ts = enumerate_tableaux(&p("3,2"), 3, &[], false).unwrap();
    assert_eq!(ts.len(), 1);
    assert_eq!(ts[0].inside(), p("3,2"));
    assert_eq!(ts[0].spin(), 0);
}

#[test]
fn tableau_json_chain() {
    let ts = enumerate_tableaux(&p("2,2,1"), 2, &[1, 1], false).unwrap();
    for t in &ts {
        let text = serde_json::to_string(t).unwrap();
        assert!(text.starts_with(r#"{"outside":"#));
        let chain: TableauChain = serde_json::from_str(&text).unwrap();
        assert_eq!(&StrongMarkedTableau::from_chain(&chain, 3).unwrap(), t);
    }
}

#[test]
fn core_json() {
    let c = core("5,3,2,2,1", 5);
    let text = serde_json::to_string(&c).unwrap();
    assert_eq!(text, r#"{"shape":[5,3,2,2,1],"n":5}"#);
    assert_eq!(serde_json::from_str::<Core>(&text).unwrap(), c);
    assert!(serde_json::from_str::<Core>(r#"{"shape":[3],"n":3}"#).is_err());
}

fn bounded() -> impl Strategy<Value = (Partition, usize)> {
    (1usize..=4, 0usize..=7).prop_flat_map(|(k, n)| {
        let all = partitions_bounded(n, k, n);
        (0..all.len()).prop_map(move |i| (all[i].clone(), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bijection_round_trip((lam, k) in bounded()) {
        let c = to_core(&lam, k).unwrap();
        prop_assert!(oracle::is_core_by_hooks(c.shape(), k + 1));
        prop_assert_eq!(c.to_bounded(), lam);
    }

    #[test]
    fn covers_match_brute_force((lam, k) in bounded()) {
        let kappa = to_core(&lam, k).unwrap();
        let mut fast: Vec<(Partition, Vec<usize>)> = strong_covers_below(&kappa)
            .into_iter()
            .map(|c| (c.tau.shape().clone(), c.marks()))
            .collect();
        let mut slow = oracle::strong_covers(kappa.shape(), k + 1);
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn offsets_shift((lam, k) in bounded()) {
        let e = to_core(&lam, k).unwrap().edges();
        let (lo, hi) = e.window();
        for i in lo..=hi {
            prop_assert_eq!(e.offset(i - (k as i64 + 1)), e.offset(i) + 1);
        }
    }
}
