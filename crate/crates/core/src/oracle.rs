//! Slow brute-force reference computations. Nothing here calls the
//! strip enumeration, straightening, vertex operators or cover machinery
//! of the main modules; they exist to cross-check those.

use std::collections::BTreeSet;

use num_traits::One;

use crate::partition::{partitions_of, Partition};
use crate::symfunc::SymFunc;
use crate::tpoly::TPoly;

/// Number of semistandard tableaux of shape `lambda` and content `alpha`,
/// counted by filling cells in row reading order.
pub fn kostka(lambda: &Partition, alpha: &[usize]) -> u64 {
    if lambda.size() != alpha.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    let mut left = alpha.to_vec();
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v - 1] -= 1;
            total += go(idx + 1, cells, grid, left);
            left[v - 1] += 1;
            grid[r][c] = 0;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// `h_alpha = sum_lambda K_{lambda,alpha} s_lambda`; zero if any entry is negative.
pub fn h_product(alpha: &[i64]) -> SymFunc {
    if alpha.iter().any(|&a| a < 0) {
        return SymFunc::zero();
    }
    let alpha: Vec<usize> = alpha.iter().map(|&a| a as usize).collect();
    let n = alpha.iter().sum();
    SymFunc::from_terms(partitions_of(n).into_iter().filter_map(|lam| {
        let k = kostka(&lam, &alpha);
        (k > 0).then(|| (lam, TPoly::constant(k as i64)))
    }))
}

/// `s_gamma = det(h_{gamma_i + j - i})` expanded over permutations.
pub fn jacobi_trudi(gamma: &[i64]) -> SymFunc {
    let n = gamma.len();
    let mut out = SymFunc::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, 0, &mut |sigma| {
        let sign = permutation_sign(sigma);
        let alpha: Vec<i64> = (0..n).map(|i| gamma[i] + sigma[i] as i64 - i as i64).collect();
        out.add_scaled(&h_product(&alpha), &TPoly::constant(sign));
    });
    out
}

fn for_each_permutation(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        for_each_permutation(v, k + 1, f);
        v.swap(k, i);
    }
}

fn permutation_sign(sigma: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn cells(p: &Partition) -> BTreeSet<(usize, usize)> {
    p.parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

/// Is `outer/inner` a skew shape with no two cells in one column?
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    let (o, i) = (cells(outer), cells(inner));
    if !i.is_subset(&o) {
        return false;
    }
    let cols: Vec<usize> = o.difference(&i).map(|&(_, c)| c).collect();
    let set: BTreeSet<usize> = cols.iter().copied().collect();
    set.len() == cols.len()
}

/// Is `outer/inner` a skew shape with no two cells in one row?
pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
    let (o, i) = (cells(outer), cells(inner));
    if !i.is_subset(&o) {
        return false;
    }
    let rows: Vec<usize> = o.difference(&i).map(|&(r, _)| r).collect();
    let set: BTreeSet<usize> = rows.iter().copied().collect();
    set.len() == rows.len()
}

/// `e_n s_lambda` by scanning every partition of the right size.
pub fn e_times_schur(n: usize, lambda: &Partition) -> SymFunc {
    SymFunc::from_terms(
        partitions_of(lambda.size() + n)
            .into_iter()
            .filter(|mu| is_vertical_strip(mu, lambda))
            .map(|mu| (mu, TPoly::one())),
    )
}

/// `h_n s_lambda` by scanning every partition of the right size.
pub fn h_times_schur(n: usize, lambda: &Partition) -> SymFunc {
    SymFunc::from_terms(
        partitions_of(lambda.size() + n)
            .into_iter()
            .filter(|mu| is_horizontal_strip(mu, lambda))
            .map(|mu| (mu, TPoly::one())),
    )
}

/// Is the explicit set of roots `(i,j)` closed under moving up or right?
pub fn is_upper_ideal(ell: usize, roots: &[(usize, usize)]) -> bool {
    let set: BTreeSet<(usize, usize)> = roots.iter().copied().collect();
    set.iter().all(|&(i, j)| {
        (1..=i).all(|a| (j..=ell).all(|b| a >= b || set.contains(&(a, b))))
    })
}

/// Number of upper ideals of the positive roots, by checking every subset.
pub fn count_upper_ideals(ell: usize) -> usize {
    let all: Vec<(usize, usize)> = (1..=ell)
        .flat_map(|i| (i + 1..=ell).map(move |j| (i, j)))
        .collect();
    (0u64..1 << all.len())
        .filter(|mask| {
            let sub: Vec<_> = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &r)| r).collect();
            is_upper_ideal(ell, &sub)
        })
        .count()
}

fn hook_equals(p: &Partition, n: usize) -> bool {
    let conj = p.conjugate();
    (0..p.len()).any(|r| (0..p.part(r)).any(|c| p.part(r) - c + conj.part(c) - r - 1 == n))
}

/// Number of cells of `p` with hook length below `n`.
pub fn small_hooks(p: &Partition, n: usize) -> usize {
    let conj = p.conjugate();
    (0..p.len())
        .map(|r| (0..p.part(r)).filter(|&c| p.part(r) - c + conj.part(c) - r - 1 < n).count())
        .sum()
}

/// Is no hook length of `p` equal to `n`? (A partition with a hook divisible
/// by `n` always has one equal to `n`.)
pub fn is_core_by_hooks(p: &Partition, n: usize) -> bool {
    !hook_equals(p, n)
}

fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &[usize], r: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r == outer.len() {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
            return;
        }
        for x in 0..=cap.min(outer[r]) {
            cur.push(x);
            go(outer, r + 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Head rows (1-indexed, increasing) of the edge-connected components of
/// `outer / inner`, found by union-find over cells.
pub fn component_heads(outer: &Partition, inner: &Partition) -> Vec<usize> {
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).map(move |c| (r, c)))
        .collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let ((r1, c1), (r2, c2)) = (cells[a], cells[b]);
            if r1.abs_diff(r2) + c1.abs_diff(c2) == 1 {
                let (x, y) = (find(&mut parent, a), find(&mut parent, b));
                parent[x] = y;
            }
        }
    }
    let mut heads = std::collections::BTreeMap::new();
    for i in 0..cells.len() {
        let root = find(&mut parent, i);
        let e = heads.entry(root).or_insert(usize::MAX);
        *e = (*e).min(cells[i].0 + 1);
    }
    let mut out: Vec<usize> = heads.into_values().collect();
    out.sort_unstable();
    out
}

/// Every strong cover `tau => kappa` of `n`-cores: all `n`-cores inside
/// `kappa` whose count of cells with hook below `n` is one less than that
/// of `kappa`. Each comes with the head rows of its components.
pub fn strong_covers(kappa: &Partition, n: usize) -> Vec<(Partition, Vec<usize>)> {
    let target = small_hooks(kappa, n);
    if target == 0 {
        return Vec::new();
    }
    subpartitions(kappa)
        .into_iter()
        .filter(|tau| is_core_by_hooks(tau, n) && small_hooks(tau, n) + 1 == target)
        .map(|tau| {
            let heads = component_heads(kappa, &tau);
            (tau, heads)
        })
        .collect()
}
