//! k-Schur functions as Catalan functions, and their tableau expansions.

mod basis;
mod chen;
mod pieri;
mod straighten;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition, Weight};
use crate::rootcat::{catalan_chl, IndexedRootIdeal, RootIdeal};
use crate::symfunc::{write_terms, JsonTerm, SymFunc};
use crate::tpoly::TPoly;
use crate::vertexops::VertexCache;

pub use basis::hl_expand;
pub use chen::{chen_ideal, skew_linking_check};
pub use pieri::{
    branch, e_tilde, h_tilde, horizontal_pieri, last_mark_difference, partial_restriction, schur_expand,
    smt_weight_poly, vertical_pieri,
};
pub use straighten::{cvr, straighten, Cvr};

/// A weight `mu` of length `ell` with `mu_i <= k` and
/// `mu_1 + ell - 1 >= mu_2 + ell - 2 >= ... >= mu_ell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KWeight {
    mu: Weight,
    k: usize,
}

impl KWeight {
    pub fn new(mu: Weight, k: usize) -> Result<Self> {
        let ok = k > 0
            && mu.0.iter().all(|&x| x <= k as i64)
            && mu.0.windows(2).all(|w| w[1] <= w[0] + 1);
        if !ok {
            return Err(Error::InvalidKWeight(mu.0, k));
        }
        Ok(KWeight { mu, k })
    }

    pub fn from_partition(lambda: &Partition, ell: usize, k: usize) -> Result<Self> {
        if lambda.len() > ell {
            return Err(Error::InvalidArgument(format!("{lambda} has more than {ell} parts")));
        }
        KWeight::new(lambda.to_weight(ell), k)
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.mu.len()
    }

    /// The root ideal `{(i,j) : k - mu_i + i < j}`.
    pub fn delta_k(&self) -> RootIdeal {
        let ell = self.ell() as i64;
        let counts = (1..=self.ell())
            .map(|i| (ell - (self.k as i64 - self.mu.at(i) + i as i64)).max(0) as usize)
            .collect();
        RootIdeal::new(counts).expect("valid k-weight gives a root ideal")
    }

    pub fn indexed_ideal(&self) -> IndexedRootIdeal {
        IndexedRootIdeal::new(self.delta_k(), self.mu.clone()).unwrap()
    }
}

/// `H(Delta^k(mu); mu)`.
pub fn kschur(cache: &mut VertexCache, kw: &KWeight) -> SymFunc {
    catalan_chl(cache, &kw.indexed_ideal())
}

/// `s^(k)_lambda` for a `k`-bounded partition, using `ell = len(lambda)`.
pub fn kschur_of(cache: &mut VertexCache, lambda: &Partition, k: usize) -> Result<SymFunc> {
    let kw = KWeight::from_partition(lambda, lambda.len(), k)?;
    Ok(kschur(cache, &kw))
}

/// Partitions with parts at most `k` and at most `ell` parts, by size then
/// decreasing lexicographic order.
pub fn par_k_ell(k: usize, ell: usize, max_size: usize) -> Vec<Partition> {
    (0..=max_size.min(k * ell))
        .flat_map(|n| partitions_bounded(n, k, ell))
        .collect()
}

/// A `Z[t]`-combination of `k`-Schur functions for a fixed `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExpansion {
    k: usize,
    terms: BTreeMap<Partition, TPoly>,
}

impl KExpansion {
    pub fn zero(k: usize) -> Self {
        KExpansion { k, terms: BTreeMap::new() }
    }

    pub fn single(k: usize, lambda: Partition, c: TPoly) -> Result<Self> {
        let mut e = KExpansion::zero(k);
        e.add_term(lambda, c)?;
        Ok(e)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add_term(&mut self, lambda: Partition, c: TPoly) -> Result<()> {
        if lambda.max_part() > self.k {
            return Err(Error::NotBounded(lambda.parts().to_vec(), self.k));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(TPoly::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &KExpansion, c: &TPoly) -> Result<()> {
        if other.k != self.k {
            return Err(Error::InvalidArgument(format!(
                "cannot combine {}-Schur and {}-Schur expansions",
                self.k, other.k
            )));
        }
        for (p, d) in &other.terms {
            self.add_term(p.clone(), c * d)?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// `sum_lambda c_lambda s^(k)_lambda` in the Schur basis.
    pub fn evaluate(&self, cache: &mut VertexCache) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in &self.terms {
            let f = kschur_of(cache, p, self.k).expect("keys are k-bounded");
            out.add_scaled(&f, c);
        }
        out
    }

    pub fn sorted_terms(&self) -> Vec<(&Partition, &TPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.1.min_degree().cmp(&b.1.min_degree()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

impl fmt::Display for KExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.sorted_terms(), &format!("s^({})", self.k))
    }
}

#[derive(Serialize, Deserialize)]
struct KExpansionJson {
    k: usize,
    basis: String,
    terms: Vec<JsonTerm>,
}

impl Serialize for KExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KExpansionJson {
            k: self.k,
            basis: "kschur".into(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(p, c)| JsonTerm { partition: p.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = KExpansionJson::deserialize(d)?;
        if j.basis != "kschur" {
            return Err(D::Error::custom("expected basis \"kschur\""));
        }
        let mut e = KExpansion::zero(j.k);
        for t in j.terms {
            e.add_term(t.partition, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kw(mu: &[i64], k: usize) -> KWeight {
        KWeight::new(Weight(mu.to_vec()), k).unwrap()
    }

    #[test]
    fn delta_examples() {
        let psi = kw(&[3, 3, 2, 1], 4).delta_k();
        assert_eq!(psi.roots(), vec![(1, 3), (1, 4), (2, 4)]);
        assert!(kw(&[2, 1, 1], 4).delta_k().is_empty());
        assert_eq!(kw(&[2, 1, 1], 3).delta_k(), kw(&[3, 2, 2], 4).delta_k());
        assert!(KWeight::new(Weight(vec![1, 3]), 4).is_err());
        assert!(KWeight::new(Weight(vec![5]), 4).is_err());
        assert!(KWeight::new(Weight(vec![1, 2]), 4).is_ok());
    }

    #[test]
    fn example_3321() {
        let f = kschur(&mut VertexCache::new(), &kw(&[3, 3, 2, 1], 4));
        assert_eq!(
            f.to_string(),
            "s[3,3,2,1] + (1*t)*s[4,3,2] + (1*t)*s[4,3,1,1] + (1*t^2)*s[5,3,1] + (1*t^2)*s[4,4,1] + (1*t^3)*s[5,4]"
        );
    }

    #[test]
    fn json_shape() {
        let e = KExpansion::single(4, "3,2,2,2".parse().unwrap(), TPoly::t_pow(2)).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"k":4,"basis":"kschur","terms":[{"partition":[3,2,2,2],"coeff":[0,0,1]}]}"#);
        assert_eq!(serde_json::from_str::<KExpansion>(&s).unwrap(), e);
        assert!(KExpansion::single(2, "3".parse().unwrap(), TPoly::t_pow(0)).is_err());
    }
}
