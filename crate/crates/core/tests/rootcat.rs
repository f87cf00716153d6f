use std::collections::BTreeSet;

use kschur_core::oracle;
use kschur_core::partition::vectors_in_range;
use kschur_core::rootcat::*;
use kschur_core::vertexops::VertexCache;
use kschur_core::Weight;

fn iri(rowcounts: &[usize], gamma: &[i64]) -> IndexedRootIdeal {
    IndexedRootIdeal::new(RootIdeal::new(rowcounts.to_vec()).unwrap(), Weight(gamma.to_vec())).unwrap()
}

/// Removable and addable roots by closure checks on explicit root sets.
fn brute_removable(psi: &RootIdeal) -> Vec<Root> {
    let ell = psi.ell();
    let set: BTreeSet<Root> = psi.roots().into_iter().collect();
    set.iter()
        .copied()
        .filter(|&a| {
            let rest: Vec<Root> = set.iter().copied().filter(|&b| b != a).collect();
            oracle::is_upper_ideal(ell, &rest)
        })
        .collect()
}

fn brute_addable(psi: &RootIdeal) -> Vec<Root> {
    let ell = psi.ell();
    let set: BTreeSet<Root> = psi.roots().into_iter().collect();
    (1..=ell)
        .flat_map(|i| (i + 1..=ell).map(move |j| (i, j)))
        .filter(|r| !set.contains(r))
        .filter(|&r| {
            let mut more: Vec<Root> = set.iter().copied().collect();
            more.push(r);
            oracle::is_upper_ideal(ell, &more)
        })
        .collect()
}

#[test]
fn removable_and_addable_match_brute_force() {
    for ell in 1..=6 {
        let ideals = all_root_ideals(ell);
        assert_eq!(ideals.len(), oracle::count_upper_ideals(ell));
        for psi in ideals {
            let mut a = psi.removable_roots();
            a.sort();
            assert_eq!(a, brute_removable(&psi), "{psi:?}");
            let mut b = psi.addable_roots();
            b.sort();
            assert_eq!(b, brute_addable(&psi), "{psi:?}");
        }
    }
}

#[test]
fn evaluators_agree_small() {
    let mut cache = VertexCache::new();
    for ell in 1..=4 {
        for psi in all_root_ideals(ell) {
            for g in vectors_in_range(ell, -1, 3) {
                let x = IndexedRootIdeal::new(psi.clone(), g).unwrap();
                let a = catalan_chl(&mut cache, &x);
                let b = catalan_series(&x);
                assert_eq!(a, b, "{x:?}");
                assert_eq!(catalan_t1(&x), a.at_t_one(), "{x:?}");
            }
        }
    }
}

#[test]
fn example_3321() {
    let x = iri(&[2, 1, 0, 0], &[3, 3, 2, 1]);
    let f = catalan_chl(&mut VertexCache::new(), &x);
    assert_eq!(
        f.to_string(),
        "s[3,3,2,1] + (1*t)*s[4,3,2] + (1*t)*s[4,3,1,1] + (1*t^2)*s[5,3,1] + (1*t^2)*s[4,4,1] + (1*t^3)*s[5,4]"
    );
}
