use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::SymFunc;
use crate::tpoly::TPoly;
use crate::vertexops::VertexCache;

/// Expands `f` in the basis `H_lambda`, `lambda` in `Par^k_ell`.
///
/// `H_lambda` is `s_lambda` plus Schur functions strictly higher in
/// dominance order, so the lexicographically smallest partition in the
/// support of the residual (a dominance-minimal one) fixes the next
/// coefficient without division.
pub fn hl_expand(cache: &mut VertexCache, f: &SymFunc, k: usize, ell: usize) -> Result<BTreeMap<Partition, TPoly>> {
    let mut residual = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lam, c)) = residual.terms().min_by(|a, b| a.0.cmp(b.0)) {
        let (lam, c) = (lam.clone(), c.clone());
        if lam.max_part() > k || lam.len() > ell {
            return Err(Error::NotInSpan(format!(
                "residual has leading term s[{lam}] outside Par^{k}_{ell}"
            )));
        }
        let h = cache.chl(&lam.to_weight(ell).0);
        residual.add_scaled(&h, &-&c);
        out.insert(lam, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn trivial() {
        let mut cache = VertexCache::new();
        assert!(hl_expand(&mut cache, &SymFunc::zero(), 2, 2).unwrap().is_empty());
        let lam: Partition = "2,1,1".parse().unwrap();
        let h = cache.chl(&[2, 1, 1]);
        let e = hl_expand(&mut cache, &h, 2, 3).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&lam], TPoly::one());
        assert!(hl_expand(&mut cache, &SymFunc::schur("3".parse().unwrap()), 2, 3).is_err());
    }
}
