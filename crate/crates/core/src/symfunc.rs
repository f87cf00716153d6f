//! Symmetric functions over `Z[t]`, stored in the Schur basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tpoly::TPoly;

/// A finite `Z[t]`-linear combination of Schur functions. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, TPoly>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, TPoly::one());
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, TPoly)>) -> Self {
        let mut f = SymFunc::zero();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
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

    pub fn into_terms(self) -> impl Iterator<Item = (Partition, TPoly)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * g` to `self`.
    pub fn add_scaled(&mut self, g: &SymFunc, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        for (p, d) in &g.terms {
            self.add_term(p.clone(), c * d);
        }
    }

    pub fn add_assign(&mut self, g: &SymFunc) {
        for (p, d) in &g.terms {
            self.add_term(p.clone(), d.clone());
        }
    }

    pub fn sub_assign(&mut self, g: &SymFunc) {
        for (p, d) in &g.terms {
            self.add_term(p.clone(), -d);
        }
    }

    pub fn add(&self, g: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_assign(g);
        out
    }

    pub fn sub(&self, g: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.sub_assign(g);
        out
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&TPoly::constant(-1))
    }

    pub fn scale(&self, c: &TPoly) -> SymFunc {
        let mut out = SymFunc::zero();
        out.add_scaled(self, c);
        out
    }

    /// Multiplies every coefficient by `t^k`.
    pub fn shift(&self, k: usize) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.shift(k))).collect(),
        }
    }

    /// Specializes `t = 1`.
    pub fn at_t_one(&self) -> SymFunc {
        SymFunc::from_terms(
            self.terms
                .iter()
                .map(|(p, c)| (p.clone(), TPoly::new(vec![c.eval_at_one()]))),
        )
    }

    /// Every Schur coefficient lies in `N[t]`.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(TPoly::is_nonneg)
    }

    /// The sizes of the partitions in the support.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        ds.sort();
        ds.dedup();
        ds
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on Schur functions.
    pub fn map_linear(&self, mut op: impl FnMut(&Partition) -> SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in &self.terms {
            out.add_scaled(&op(p), c);
        }
        out
    }

    /// Terms in display order: lowest power of `t` first, then partitions
    /// in decreasing lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &TPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            a.1.min_degree()
                .cmp(&b.1.min_degree())
                .then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

/// Writes `(<coeff>)*<prefix>[p1,p2,...]` terms joined by ` + `; a
/// coefficient equal to 1 is omitted.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&Partition, &TPoly)],
    prefix: &str,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (p, c)) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        if c.is_one() {
            write!(f, "{prefix}[{p}]")?;
        } else {
            write!(f, "({c})*{prefix}[{p}]")?;
        }
    }
    Ok(())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.sorted_terms(), "s")
    }
}

/// One term of a JSON expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub partition: Partition,
    pub coeff: TPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<JsonTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: "schur".into(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(p, c)| JsonTerm { partition: p.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        if j.basis != "schur" {
            return Err(serde::de::Error::custom("expected basis \"schur\""));
        }
        Ok(SymFunc::from_terms(j.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

/// Rewrites `s_gamma` for an arbitrary integer vector as `±s_lambda` or
/// zero, using `s_gamma = sgn(w) s_{w(gamma+rho)-rho}`.
pub fn schur_straighten(gamma: &[i64]) -> Option<(i64, Partition)> {
    let ell = gamma.len() as i64;
    let mut v: Vec<i64> = gamma
        .iter()
        .enumerate()
        .map(|(i, &g)| g + ell - 1 - i as i64)
        .collect();
    if v.iter().any(|&x| x < 0) {
        return None;
    }
    // Insertion sort into decreasing order, counting transpositions.
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    let parts = v
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - (ell - 1 - i as i64)) as usize)
        .collect();
    Some((sign, Partition::from_sorted(parts)))
}

/// `s_gamma` as an element of the Schur basis.
pub fn schur_of_weight(gamma: &[i64]) -> SymFunc {
    match schur_straighten(gamma) {
        None => SymFunc::zero(),
        Some((sign, lam)) => SymFunc::from_terms([(lam, TPoly::constant(sign))]),
    }
}

/// Enumerates partitions `mu` with `lo[i] <= mu[i] <= hi[i]` and
/// `mu[i] <= mu[i-1]`, of total size `total`.
fn enumerate_rows(lo: &[usize], hi: &[usize], total: usize, out: &mut Vec<Partition>) {
    fn go(
        i: usize,
        lo: &[usize],
        hi: &[usize],
        remaining: usize,
        max_lo_rest: &[usize],
        max_hi_rest: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == lo.len() {
            if remaining == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        if remaining < max_lo_rest[i] || remaining > max_hi_rest[i] {
            return;
        }
        let cap = if i == 0 { hi[0] } else { hi[i].min(cur[i - 1]) };
        for v in lo[i]..=cap {
            let used = v - lo[i];
            if used > remaining {
                break;
            }
            cur.push(v);
            go(i + 1, lo, hi, remaining - used, max_lo_rest, max_hi_rest, cur, out);
            cur.pop();
        }
    }
    // remaining counts boxes above the lower bound; suffix sums prune.
    let n = lo.len();
    let mut min_rest = vec![0; n + 1];
    let mut max_rest = vec![0; n + 1];
    for i in (0..n).rev() {
        min_rest[i] = min_rest[i + 1];
        max_rest[i] = max_rest[i + 1] + hi[i].saturating_sub(lo[i]);
    }
    let base: usize = lo.iter().sum();
    if total < base {
        return;
    }
    go(0, lo, hi, total - base, &min_rest, &max_rest, &mut Vec::new(), out);
}

/// Partitions obtained from `lambda` by adding a horizontal strip of size `n`.
pub fn add_horizontal_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let l = lambda.len();
    let lo: Vec<usize> = (0..=l).map(|i| lambda.part(i)).collect();
    let hi: Vec<usize> = (0..=l)
        .map(|i| if i == 0 { lambda.part(0) + n } else { lambda.part(i - 1) })
        .collect();
    let mut out = Vec::new();
    enumerate_rows(&lo, &hi, lambda.size() + n, &mut out);
    out
}

/// Partitions obtained from `lambda` by adding a vertical strip of size `n`.
pub fn add_vertical_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    let rows = lambda.len() + n;
    let lo: Vec<usize> = (0..rows).map(|i| lambda.part(i)).collect();
    let hi: Vec<usize> = (0..rows).map(|i| lambda.part(i) + 1).collect();
    let mut out = Vec::new();
    enumerate_rows(&lo, &hi, lambda.size() + n, &mut out);
    out
}

/// Partitions `mu` such that `lambda/mu` is a horizontal strip of size `n`.
pub fn remove_horizontal_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    if n > lambda.size() {
        return Vec::new();
    }
    let l = lambda.len();
    let lo: Vec<usize> = (0..l).map(|i| lambda.part(i + 1)).collect();
    let hi: Vec<usize> = (0..l).map(|i| lambda.part(i)).collect();
    let mut out = Vec::new();
    enumerate_rows(&lo, &hi, lambda.size() - n, &mut out);
    out
}

/// Partitions `mu` such that `lambda/mu` is a vertical strip of size `n`.
pub fn remove_vertical_strip(lambda: &Partition, n: usize) -> Vec<Partition> {
    if n > lambda.size() {
        return Vec::new();
    }
    let l = lambda.len();
    let lo: Vec<usize> = (0..l).map(|i| lambda.part(i).saturating_sub(1)).collect();
    let hi: Vec<usize> = (0..l).map(|i| lambda.part(i)).collect();
    let mut out = Vec::new();
    enumerate_rows(&lo, &hi, lambda.size() - n, &mut out);
    out
}

/// `h_n * f`, with `h_n = 0` for `n < 0`.
pub fn h_times(n: i64, f: &SymFunc) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    f.map_linear(|p| strips_to_symfunc(add_horizontal_strip(p, n as usize)))
}

/// `e_n * f`, with `e_n = 0` for `n < 0`.
pub fn e_times(n: i64, f: &SymFunc) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    f.map_linear(|p| strips_to_symfunc(add_vertical_strip(p, n as usize)))
}

/// The adjoint of multiplication by `e_d` under the Hall inner product.
pub fn e_perp(d: usize, f: &SymFunc) -> SymFunc {
    f.map_linear(|p| strips_to_symfunc(remove_vertical_strip(p, d)))
}

/// The adjoint of multiplication by `h_d` under the Hall inner product.
pub fn h_perp(d: usize, f: &SymFunc) -> SymFunc {
    f.map_linear(|p| strips_to_symfunc(remove_horizontal_strip(p, d)))
}

fn strips_to_symfunc(ps: Vec<Partition>) -> SymFunc {
    SymFunc {
        terms: ps.into_iter().map(|p| (p, TPoly::one())).collect(),
    }
}

/// `h_{a_1} h_{a_2} ... h_{a_l}` in the Schur basis; any negative entry
/// gives zero.
pub fn h_product(alpha: &[i64]) -> SymFunc {
    let mut f = SymFunc::one();
    for &a in alpha.iter().rev() {
        if f.is_zero() {
            break;
        }
        f = h_times(a, &f);
    }
    f
}

/// `<f, h_lambda>`, computed as the constant term of
/// `h_{lambda_1}^perp h_{lambda_2}^perp ... f`. Any order of the parts
/// gives the same value.
pub fn hall_pair_h(f: &SymFunc, lambda: &[usize]) -> TPoly {
    let mut g = f.clone();
    for &part in lambda.iter().rev() {
        g = h_perp(part, &g);
    }
    g.coeff(&Partition::empty())
}

/// The involution `s_lambda -> s_{lambda'}`.
pub fn omega(f: &SymFunc) -> SymFunc {
    SymFunc {
        terms: f.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
    }
}

/// Dominance order: `a <= b` iff every partial sum of `b` is at least the
/// corresponding partial sum of `a`. Weights must have the same length.
pub fn dominance_leq(a: &[i64], b: &[i64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    let (mut sa, mut sb) = (0, 0);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sb < sa {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(schur_straighten(&[3, 1, 2, 5]), None);
        assert_eq!(schur_straighten(&[4, 7, 1, 6]), Some((1, p("6,5,5,2"))));
        assert_eq!(schur_straighten(&[1, 2]), None);
        assert_eq!(schur_straighten(&[0, 2]), Some((-1, p("1,1"))));
        assert_eq!(schur_straighten(&[2, -1]), None);
        assert_eq!(schur_straighten(&[2, 0, 0]), Some((1, p("2"))));
        assert_eq!(schur_straighten(&[0, 0, -1]), None);
    }

    #[test]
    fn pieri_small() {
        let f = h_times(2, &SymFunc::schur(p("1")));
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&p("3")), TPoly::one());
        assert_eq!(f.coeff(&p("2,1")), TPoly::one());
        let g = e_times(2, &SymFunc::schur(p("1")));
        assert_eq!(g.coeff(&p("1,1,1")), TPoly::one());
        assert_eq!(g.coeff(&p("2,1")), TPoly::one());
        assert_eq!(h_times(-1, &SymFunc::one()), SymFunc::zero());
        assert_eq!(h_times(0, &SymFunc::schur(p("2,1"))), SymFunc::schur(p("2,1")));
    }

    #[test]
    fn perps() {
        let f = SymFunc::schur(p("2,1"));
        assert_eq!(e_perp(1, &f), SymFunc::from_terms([(p("2"), TPoly::one()), (p("1,1"), TPoly::one())]));
        assert_eq!(h_perp(2, &f), SymFunc::schur(p("1")));
        assert_eq!(e_perp(2, &f), SymFunc::schur(p("1")));
        assert_eq!(e_perp(3, &f), SymFunc::zero());
    }

    #[test]
    fn hall_pairing_counts_kostka() {
        // K_{(2,1),(1,1,1)} = 2
        let f = SymFunc::schur(p("2,1"));
        assert_eq!(hall_pair_h(&f, &[1, 1, 1]), TPoly::constant(2));
        assert_eq!(hall_pair_h(&f, &[2, 1]), TPoly::constant(1));
        assert_eq!(hall_pair_h(&f, &[1, 2]), TPoly::constant(1));
        assert_eq!(hall_pair_h(&f, &[3]), TPoly::zero());
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&[2, 2, 0], &[3, 1, 0]).unwrap());
        assert!(!dominance_leq(&[3, 1, 0], &[2, 2, 0]).unwrap());
        assert!(dominance_leq(&[1, 2], &[1, 2, 0]).is_err());
    }

    #[test]
    fn render() {
        let f = SymFunc::from_terms([
            (p("3,3,2,1"), TPoly::one()),
            (p("4,3,2"), TPoly::t_pow(1)),
            (p("4,3,1,1"), TPoly::t_pow(1)),
            (p("5,4"), TPoly::t_pow(3)),
        ]);
        assert_eq!(
            f.to_string(),
            "s[3,3,2,1] + (1*t)*s[4,3,2] + (1*t)*s[4,3,1,1] + (1*t^3)*s[5,4]"
        );
        assert_eq!(SymFunc::zero().to_string(), "0");
    }
}
