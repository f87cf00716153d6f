use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{IndexedRootIdeal, Root};
use crate::partition::Weight;
use crate::symfunc::{h_product, schur_straighten, SymFunc};
use crate::tpoly::TPoly;
use crate::vertexops::VertexCache;

/// Which formula evaluates a Catalan function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evaluator {
    /// Raising operators on Hall-Littlewood functions built from vertex operators.
    Chl,
    /// The raising-operator power series, straightened term by term.
    Series,
    /// The `t = 1` specialization as a signed sum of products of `h`.
    T1,
}

/// `prod_{alpha in roots} (1 + c R_alpha)` applied to the weight `gamma`,
/// collected as a map from weights to coefficients. Weights with a negative
/// tail sum are dropped: `H_gamma`, `h_gamma` and `s_gamma` all vanish on them.
pub fn raise_over(gamma: &Weight, roots: &[Root], c: &TPoly) -> BTreeMap<Weight, TPoly> {
    let mut acc = BTreeMap::new();
    if !gamma.tails_nonneg() {
        return acc;
    }
    acc.insert(gamma.clone(), TPoly::one());
    for &(i, j) in roots {
        let mut next = acc.clone();
        for (w, coeff) in &acc {
            let up = w.raise(i, j);
            if !up.tails_nonneg() {
                continue;
            }
            let e = next.entry(up).or_insert_with(TPoly::zero);
            *e += &(coeff * c);
        }
        next.retain(|_, v| !v.is_zero());
        acc = next;
    }
    acc
}

/// `H(Psi; gamma) = prod_{alpha not in Psi} (1 - t R_alpha) H_gamma`.
///
/// Since `H_gamma = B_{gamma_1} H_{gamma_2 ... gamma_ell}` and `B_m` is linear,
/// the factors of row 1 can be expanded on their own: a subset `S` of its
/// non-roots contributes `(-t)^|S| B_{gamma_1 + |S|}` applied to the same
/// product for rows `2..=ell` at the weight lowered by `S`. The recursion is
/// memoised on the row and the remaining weight.
pub fn catalan_chl(cache: &mut VertexCache, iri: &IndexedRootIdeal) -> SymFunc {
    let ell = iri.ell();
    // Non-root columns of each row: i+1 ..= ell - rowcount_i.
    let free: Vec<usize> = (1..=ell).map(|i| ell - iri.psi.row_count(i)).collect();
    let mut memo = HashMap::new();
    chl_rows(cache, &free, 1, iri.gamma.as_slice(), &mut memo)
}

fn chl_rows(
    cache: &mut VertexCache,
    free: &[usize],
    r: usize,
    w: &[i64],
    memo: &mut HashMap<(usize, Vec<i64>), SymFunc>,
) -> SymFunc {
    if w.is_empty() {
        return SymFunc::one();
    }
    // Every later factor only lowers tail sums, and H vanishes below zero.
    if !Weight(w.to_vec()).tails_nonneg() {
        return SymFunc::zero();
    }
    if r == free.len() {
        return cache.chl(w);
    }
    if let Some(v) = memo.get(&(r, w.to_vec())) {
        return v.clone();
    }
    // Distinct subsets of row r's non-root columns lower distinct entries.
    let cols: Vec<usize> = (r + 1..=free[r - 1]).collect();
    let mut out = SymFunc::zero();
    for mask in 0u64..1 << cols.len() {
        let mut rest = w[1..].to_vec();
        for (b, &j) in cols.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rest[j - r - 1] -= 1;
            }
        }
        let inner = chl_rows(cache, free, r + 1, &rest, memo);
        if inner.is_zero() {
            continue;
        }
        let size = mask.count_ones() as usize;
        let sign = if size % 2 == 0 { 1 } else { -1 };
        let b = cache.jing_b(w[0] + size as i64, &inner);
        out.add_scaled(&b, &TPoly::monomial(sign, size));
    }
    memo.insert((r, w.to_vec()), out.clone());
    out
}

/// `H(Psi; gamma) = prod_{alpha in Psi} (1 - t R_alpha)^{-1} s_gamma`.
///
/// The roots are applied in order of decreasing row. Once every root of
/// row `r` has been applied, the coordinates `c >= r` can only decrease,
/// and a Schur function `s_delta` vanishes when `delta_c < c - ell`. Also
/// every raising operator lowers the tail sums `delta_c + ... + delta_ell`,
/// which must stay nonnegative. Either bound cuts each geometric series off
/// at a finite power.
pub fn catalan_series(iri: &IndexedRootIdeal) -> SymFunc {
    let ell = iri.ell() as i64;
    let floor = |c: usize| c as i64 - ell;
    let mut roots = iri.psi.roots();
    roots.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut acc: BTreeMap<Weight, TPoly> = BTreeMap::new();
    if iri.gamma.tails_nonneg() {
        acc.insert(iri.gamma.clone(), TPoly::one());
    }
    for &(i, j) in &roots {
        let mut next: BTreeMap<Weight, TPoly> = BTreeMap::new();
        for (w, c) in &acc {
            // Column j only loses boxes from here on, and R_ij lowers the
            // tail sums starting at i+1..=j by one.
            let tails = w.tail_sums();
            let max_n = (w.at(j) - floor(j)).min(tails[i..j].iter().copied().min().unwrap_or(0));
            if max_n < 0 {
                continue;
            }
            let mut v = w.clone();
            for n in 0..=max_n as usize {
                let e = next.entry(v.clone()).or_insert_with(TPoly::zero);
                *e += &c.shift(n);
                v = v.raise(i, j);
            }
        }
        next.retain(|_, v| !v.is_zero());
        acc = next;
    }
    let mut out = SymFunc::zero();
    for (w, c) in acc {
        if let Some((sign, lam)) = schur_straighten(w.as_slice()) {
            out.add_term(lam, c.scale(&sign.into()));
        }
    }
    out
}

/// `H(Psi; gamma)` at `t = 1`:
/// `sum_{S subset of complement} (-1)^|S| h_{gamma + sum_{alpha in S} alpha}`.
pub fn catalan_t1(iri: &IndexedRootIdeal) -> SymFunc {
    let terms = raise_over(&iri.gamma, &iri.psi.complement(), &TPoly::constant(-1));
    let mut out = SymFunc::zero();
    for (w, c) in terms {
        out.add_scaled(&h_product(w.as_slice()), &c);
    }
    out
}

pub fn catalan(cache: &mut VertexCache, iri: &IndexedRootIdeal, ev: Evaluator) -> SymFunc {
    match ev {
        Evaluator::Chl => catalan_chl(cache, iri),
        Evaluator::Series => catalan_series(iri),
        Evaluator::T1 => catalan_t1(iri),
    }
}
