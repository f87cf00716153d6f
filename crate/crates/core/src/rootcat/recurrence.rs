use num_traits::One;

use super::{catalan_chl, IndexedRootIdeal, Root};
use crate::error::{Error, Result};
use crate::symfunc::SymFunc;
use crate::tpoly::TPoly;
use crate::vertexops::VertexCache;

/// How to rewrite `H(Psi; mu)` as a combination of other Catalan functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceMode {
    /// `H(Psi;mu) = H(Psi+beta;mu) - t H(Psi+beta;mu+beta)` for an addable `beta`.
    Addable(Root),
    /// `H(Psi;mu) = H(Psi-alpha;mu) + t H(Psi;mu+alpha)` for a removable `alpha`.
    Removable(Root),
    /// `H(Psi;mu) = sum_{z in downpath(m)} t^{bounce(m,z)} H(Psi^z; mu + e_m - e_z)`.
    Downpath(usize),
}

/// The terms `(coefficient, ideal)` of the chosen recurrence.
pub fn expand_recurrence(
    iri: &IndexedRootIdeal,
    mode: RecurrenceMode,
) -> Result<Vec<(TPoly, IndexedRootIdeal)>> {
    let psi = &iri.psi;
    let mu = &iri.gamma;
    match mode {
        RecurrenceMode::Addable(beta) => {
            let bigger = psi.with_root(beta)?;
            Ok(vec![
                (TPoly::one(), IndexedRootIdeal::new(bigger.clone(), mu.clone())?),
                (TPoly::monomial(-1, 1), IndexedRootIdeal::new(bigger, mu.raise(beta.0, beta.1))?),
            ])
        }
        RecurrenceMode::Removable(alpha) => {
            let smaller = psi.without_root(alpha)?;
            Ok(vec![
                (TPoly::one(), IndexedRootIdeal::new(smaller, mu.clone())?),
                (TPoly::t_pow(1), iri.with_gamma(mu.raise(alpha.0, alpha.1))),
            ])
        }
        RecurrenceMode::Downpath(m) => {
            if m == 0 || m > psi.ell() {
                return Err(Error::InvalidArgument(format!("row {m} out of range")));
            }
            let path = psi.downpath(m);
            let mut out = Vec::new();
            for (b, &z) in path.iter().enumerate() {
                let ideal = match psi.down(z) {
                    Some(d) => psi.without_root((z, d))?,
                    None => psi.clone(),
                };
                let gamma = if z == m { mu.clone() } else { mu.raise(m, z) };
                out.push((TPoly::t_pow(b), IndexedRootIdeal::new(ideal, gamma)?));
            }
            Ok(out)
        }
    }
}

/// `sum_{S subset of V, |S| = d} H(Psi; gamma - e_S)`, where `V` is a set of
/// 1-indexed coordinates.
pub fn subset_lower(cache: &mut VertexCache, d: usize, v: &[usize], iri: &IndexedRootIdeal) -> SymFunc {
    let mut out = SymFunc::zero();
    for s in subsets_of_size(v, d) {
        let mut g = iri.gamma.clone();
        for &i in &s {
            g = g.bump(i, -1);
        }
        out.add_assign(&catalan_chl(cache, &iri.with_gamma(g)));
    }
    out
}

/// `sum_i c_i H(Psi_i; gamma_i)` for a list of terms.
pub fn subset_lower_sum(cache: &mut VertexCache, terms: &[(TPoly, IndexedRootIdeal)]) -> SymFunc {
    let mut out = SymFunc::zero();
    for (c, x) in terms {
        out.add_scaled(&catalan_chl(cache, x), c);
    }
    out
}

pub(crate) fn subsets_of_size(v: &[usize], d: usize) -> Vec<Vec<usize>> {
    fn go(v: &[usize], d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..v.len() {
            cur.push(v[i]);
            go(v, d, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= v.len() {
        go(v, d, 0, &mut Vec::new(), &mut out);
    }
    out
}
