//! Jing's Hall-Littlewood vertex operators and the functions they build.

use std::collections::HashMap;

use crate::partition::{Partition, Weight};
use crate::symfunc::{e_perp, h_perp, h_times, SymFunc};
use crate::tpoly::TPoly;

/// A word `B_{m_1} B_{m_2} ... B_{m_l}`; the rightmost operator acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexWord(pub Vec<i64>);

impl VertexWord {
    pub fn apply(&self, cache: &mut VertexCache, f: &SymFunc) -> SymFunc {
        let mut g = f.clone();
        for &m in self.0.iter().rev() {
            if g.is_zero() {
                break;
            }
            g = cache.jing_b(m, &g);
        }
        g
    }
}

/// Memo tables for `B_m s_lambda` and for `H(x;t)` indexed by weight.
/// Results are independent of what is already cached, so one cache can be
/// reused across any number of computations.
#[derive(Default)]
pub struct VertexCache {
    on_schur: HashMap<(i64, Partition), SymFunc>,
    chl: HashMap<Vec<i64>, SymFunc>,
}

impl VertexCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_m f = sum_{i,j >= 0} (-1)^i t^j h_{m+i+j} e_i^perp h_j^perp f`.
    pub fn jing_b(&mut self, m: i64, f: &SymFunc) -> SymFunc {
        f.map_linear(|lam| self.jing_b_schur(m, lam))
    }

    fn jing_b_schur(&mut self, m: i64, lam: &Partition) -> SymFunc {
        let key = (m, lam.clone());
        if let Some(v) = self.on_schur.get(&key) {
            return v.clone();
        }
        let d = lam.size();
        let s = SymFunc::schur(lam.clone());
        let mut out = SymFunc::zero();
        for j in 0..=d {
            let g = h_perp(j, &s);
            if g.is_zero() {
                continue;
            }
            for i in 0..=d - j {
                let n = m + (i + j) as i64;
                if n < 0 {
                    continue;
                }
                let e = e_perp(i, &g);
                if e.is_zero() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_scaled(&h_times(n, &e), &TPoly::monomial(sign, j));
            }
        }
        self.on_schur.insert(key, out.clone());
        out
    }

    /// `H(x;t) = B_{gamma_1} ... B_{gamma_l} 1`.
    pub fn chl(&mut self, gamma: &[i64]) -> SymFunc {
        let mut end = gamma.len();
        while end > 0 && gamma[end - 1] == 0 {
            end -= 1;
        }
        let gamma = &gamma[..end];
        if gamma.is_empty() {
            return SymFunc::one();
        }
        // A negative tail sum forces every Schur term of the raising
        // operator expansion of H_gamma to vanish.
        if !Weight(gamma.to_vec()).tails_nonneg() {
            return SymFunc::zero();
        }
        if let Some(v) = self.chl.get(gamma) {
            return v.clone();
        }
        let rest = self.chl(&gamma[1..]);
        let out = self.jing_b(gamma[0], &rest);
        self.chl.insert(gamma.to_vec(), out.clone());
        out
    }
}

/// `B_m f` without a shared cache.
pub fn jing_b(m: i64, f: &SymFunc) -> SymFunc {
    VertexCache::new().jing_b(m, f)
}

/// `H(x;t)` for an arbitrary integer weight, without a shared cache. For a
/// partition this is the modified Hall-Littlewood polynomial.
pub fn chl(gamma: &[i64]) -> SymFunc {
    VertexCache::new().chl(gamma)
}

/// `e_d^perp B_m f` and `B_m e_d^perp f + B_{m-1} e_{d-1}^perp f`, which agree.
pub fn eperp_commutator_sides(cache: &mut VertexCache, d: usize, m: i64, f: &SymFunc) -> (SymFunc, SymFunc) {
    let lhs = e_perp(d, &cache.jing_b(m, f));
    let mut rhs = cache.jing_b(m, &e_perp(d, f));
    if d > 0 {
        rhs.add_assign(&cache.jing_b(m - 1, &e_perp(d - 1, f)));
    }
    (lhs, rhs)
}

/// The two sides of the exchange relation for `B_m B_n` with `m < n`:
/// `t B_{m+1} B_{n-1} + t B_n B_m - B_{n-1} B_{m+1}` when `n != m + 1`,
/// and `t B_{m+1} B_m` when `n = m + 1`.
pub fn commutation_sides(cache: &mut VertexCache, m: i64, n: i64, f: &SymFunc) -> (SymFunc, SymFunc) {
    assert!(m < n);
    let word = |c: &mut VertexCache, a: i64, b: i64| VertexWord(vec![a, b]).apply(c, f);
    let lhs = word(cache, m, n);
    let t = TPoly::t_pow(1);
    let rhs = if n == m + 1 {
        word(cache, m + 1, m).scale(&t)
    } else {
        let mut r = word(cache, m + 1, n - 1).scale(&t);
        r.add_assign(&word(cache, n, m).scale(&t));
        r.sub_assign(&word(cache, n - 1, m + 1));
        r
    };
    (lhs, rhs)
}
