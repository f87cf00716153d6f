use kschur_core::kschur::*;
use kschur_core::rootcat::RootIdeal;
use kschur_core::vertexops::VertexCache;
use kschur_core::{Partition, SymFunc, TPoly, Weight};
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

fn kw(s: &str, k: usize) -> KWeight {
    KWeight::new(w(s), k).unwrap()
}

#[test]
fn delta_k_examples() {
    assert_eq!(kw("3,3,2,1", 4).delta_k(), RootIdeal::from_roots(4, &[(1, 3), (1, 4), (2, 4)]).unwrap());
    assert_eq!(kw("2,1,1", 4).delta_k(), RootIdeal::empty(3));
    assert_eq!(kw("2,1,0", 3).delta_k(), kw("3,2,1", 4).delta_k());
    assert!(KWeight::new(w("5,1"), 4).is_err());
    assert!(KWeight::new(w("1,3"), 4).is_err());
}

#[test]
fn kschur_3321() {
    let mut cache = VertexCache::new();
    let f = kschur(&mut cache, &kw("3,3,2,1", 4));
    assert_eq!(
        f.to_string(),
        "s[3,3,2,1] + (1*t)*s[4,3,2] + (1*t)*s[4,3,1,1] + (1*t^2)*s[5,3,1] + (1*t^2)*s[4,4,1] + (1*t^3)*s[5,4]"
    );
    assert_eq!(kschur(&mut cache, &kw("3,1", 4)), SymFunc::schur(p("3,1")));
    assert_eq!(kschur(&mut cache, &kw("0,0,0", 2)), SymFunc::one());
}

#[test]
fn cvr_examples() {
    let c = cvr(&w("2,2,2,2,2,2,2,2,1"), 6, 4).unwrap();
    assert_eq!(c.weight, w("3,3,2,2,2,1,1,1,1"));
    assert_eq!((c.c, c.h, c.bounce, c.is_partition), (2, 2, 4, true));
    let c = cvr(&w("2,2,2,2,2,2,2,2,2"), 6, 4).unwrap();
    assert_eq!(c.weight, w("3,3,2,2,2,1,1,1,2"));
    assert!(!c.is_partition);
    let c = cvr(&w("3,2,1"), 2, 3).unwrap();
    assert_eq!((c.weight.clone(), c.bounce), (w("3,1,1"), 0));
    assert!(cvr(&w("2,1"), 3, 3).is_err());
}

#[test]
fn straightening_examples() {
    let mut cache = VertexCache::new();
    let cases = [
        ("3,3,3,2,1", 2, "s^(4)[4,2,2,2,1] with t^1"),
        ("2,2,2,2,2,2,2,2,1", 6, "s^(4)[3,3,2,2,2,1,1,1,1] with t^4"),
        ("2,2,2,2,2,2,2,2,2", 6, "0"),
        ("4,3,2,2,2,2,2,2,2", 6, "0"),
    ];
    for (lam, z, expect) in cases {
        let lw = w(lam);
        let e = straighten(&lw, z, 4).unwrap();
        let shown = match e.terms().next() {
            None => "0".to_string(),
            Some((mu, c)) => format!("s^(4)[{mu}] with t^{}", c.degree().unwrap()),
        };
        assert_eq!(shown, expect);
        let direct = kschur(&mut cache, &KWeight::new(lw.bump(z, -1), 4).unwrap());
        assert_eq!(e.evaluate(&mut cache), direct, "{lam} z={z}");
    }
}

#[test]
fn pieri_examples() {
    let v = vertical_pieri(&p("3,3,3,3,2"), 4, 5).unwrap();
    assert_eq!(v.len(), 4);
    assert_eq!(v.coeff(&p("2,2,2,2,1")), TPoly::constant(1));
    assert_eq!(v.coeff(&p("3,2,2,2")), TPoly::t_pow(2));
    assert_eq!(v.coeff(&p("3,3,1,1,1")), TPoly::t_pow(2));
    assert_eq!(v.coeff(&p("3,3,2,1")), TPoly::t_pow(3));
    assert_eq!(vertical_pieri(&p("2,1"), 3, 0).unwrap(), KExpansion::single(3, p("2,1"), TPoly::constant(1)).unwrap());
    assert!(vertical_pieri(&p("2,1"), 3, 3).unwrap().is_zero());
}

#[test]
fn partial_restriction_examples() {
    let mut cache = VertexCache::new();
    let e = partial_restriction(&p("2,2,2,2,2,2"), 3, 2, 4).unwrap();
    assert_eq!(e.coeff(&p("2,2,2,2,1,1")), TPoly::from_i64s(&[0, 0, 1, 1, 1]));
    assert_eq!(e.coeff(&p("3,2,2,1,1,1")), TPoly::t_pow(4));
    assert_eq!(e.coeff(&p("2,2,2,2,2")), TPoly::t_pow(3));
    assert_eq!(e.len(), 3);
    let x = kw("2,2,2,2,2,2", 3).indexed_ideal();
    let lowered = kschur_core::rootcat::subset_lower(&mut cache, 2, &[1, 2, 3, 4], &x);
    assert_eq!(e.evaluate(&mut cache), lowered);
    assert_eq!(partial_restriction(&p("3,2,1"), 3, 2, 3).unwrap(), vertical_pieri(&p("3,2,1"), 3, 2).unwrap());
}

#[test]
fn branching_examples() {
    let mut cache = VertexCache::new();
    let b = branch(&w("2,2,2,2,1"), 3).unwrap();
    assert_eq!(b.k(), 4);
    assert_eq!(b.evaluate(&mut cache), kschur(&mut cache, &kw("2,2,2,2,1", 3)));
    let b = branch(&w("2,1"), 3).unwrap();
    assert_eq!(b, KExpansion::single(4, p("2,1"), TPoly::constant(1)).unwrap());
}

#[test]
fn schur_expansion_of_one_four_times() {
    let f = schur_expand(&w("1,1,1,1"), 1).unwrap();
    assert_eq!(f, kschur_core::vertexops::chl(&[1, 1, 1, 1]));
    let total: i64 = f.at_t_one().terms().map(|(_, c)| c.eval_at_one().try_into().unwrap_or(0i64)).sum();
    assert_eq!(total, 10);
    assert_eq!(schur_expand(&w("2,1"), 3).unwrap(), SymFunc::schur(p("2,1")));
}

#[test]
fn smt_weight_examples() {
    assert_eq!(smt_weight_poly(&p("3"), 3, &[3]).unwrap(), TPoly::constant(1));
    assert_eq!(
        smt_weight_poly(&p("2,1,1"), 2, &[2, 1, 1]).unwrap(),
        smt_weight_poly(&p("2,1,1"), 2, &[1, 2, 1]).unwrap()
    );
}

#[test]
fn chen_example() {
    let lam = p("6,6,4,3,3,2,1,1,1,1");
    let (kappa, eta) = kschur_core::cores::k_skew(&lam, 7).unwrap();
    assert!(skew_linking_check(&kappa, &eta).unwrap());
    let phi = chen_ideal(&kappa, &eta).unwrap();
    assert_eq!(phi.rowcounts(), &[8, 6, 3, 2, 1, 0, 0, 0, 0, 0]);
    assert_eq!(chen_ideal(&p("3,2"), &Partition::empty()).unwrap(), RootIdeal::empty(2));
    assert!(chen_ideal(&p("2"), &p("3")).is_err());
}

#[test]
fn hl_expand_examples() {
    let mut cache = VertexCache::new();
    let f = kschur(&mut cache, &kw("2,1,1", 2));
    let e = hl_expand(&mut cache, &f, 2, 3).unwrap();
    assert_eq!(e[&p("2,1,1")], TPoly::constant(1));
    assert!(hl_expand(&mut cache, &SymFunc::zero(), 2, 3).unwrap().is_empty());
}

#[test]
fn expansion_json() {
    let e = vertical_pieri(&p("3,3,3,3,2"), 4, 5).unwrap();
    let text = serde_json::to_string(&e).unwrap();
    assert!(text.starts_with(r#"{"k":4,"basis":"kschur","terms":["#));
    let back: KExpansion = serde_json::from_str(&text).unwrap();
    assert_eq!(back, e);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn mixing_k_is_rejected() {
    let mut a = KExpansion::zero(3);
    let b = KExpansion::single(4, p("2"), TPoly::constant(1)).unwrap();
    assert!(a.add_scaled(&b, &TPoly::constant(1)).is_err());
    assert!(a.add_term(p("4"), TPoly::constant(1)).is_err());
}

fn bounded() -> impl Strategy<Value = (Partition, usize)> {
    (1usize..=3, 0usize..=6).prop_flat_map(|(k, n)| {
        let all = kschur_core::partition::partitions_bounded(n, k, 3);
        (0..all.len().max(1)).prop_map(move |i| (all.get(i).cloned().unwrap_or_default(), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tableau_expansion_equals_catalan((mu, k) in bounded()) {
        let mut cache = VertexCache::new();
        let f = kschur_of(&mut cache, &mu, k).unwrap();
        let g = schur_expand(&mu.to_weight(mu.len()), k).unwrap();
        prop_assert!(g.is_schur_positive());
        prop_assert_eq!(f, g);
    }

    #[test]
    fn vertical_pieri_is_eperp((mu, k) in bounded(), d in 0usize..4) {
        let mut cache = VertexCache::new();
        let f = kschur_of(&mut cache, &mu, k).unwrap();
        let v = vertical_pieri(&mu, k, d).unwrap().evaluate(&mut cache);
        prop_assert_eq!(v, kschur_core::symfunc::e_perp(d, &f));
    }

    #[test]
    fn stability(mu in (0usize..=5).prop_flat_map(|n| {
        let all = kschur_core::partition::partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })) {
        let mut cache = VertexCache::new();
        let k = mu.size().max(1);
        prop_assert_eq!(kschur_of(&mut cache, &mu, k).unwrap(), SymFunc::schur(mu));
    }
}
