//! Partitions and integer weights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so `(3,1,0)` and `(3,1)` are the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 0-indexed, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// True when the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The parts padded with zeros to length `ell`, as a weight.
    pub fn to_weight(&self, ell: usize) -> Weight {
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(ell.max(self.len()), 0);
        Weight(v)
    }

    /// Hook length of the cell in row `r`, column `c` (both 0-indexed).
    pub fn hook(&self, r: usize, c: usize) -> usize {
        let arm = self.0[r] - c - 1;
        let leg = self.0[r + 1..].iter().take_while(|&&p| p > c).count();
        arm + leg + 1
    }

    pub fn max_part(&self) -> usize {
        self.part(0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<usize>(s)?;
        Partition::new(parts)
    }
}

/// A finite integer vector, indexed from 1 in the mathematical sense
/// and from 0 in storage.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(v: Vec<i64>) -> Self {
        Weight(v)
    }

    pub fn zeros(ell: usize) -> Self {
        Weight(vec![0; ell])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entry `i`, 1-indexed.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Adds `e_i - e_j` (1-indexed).
    pub fn raise(&self, i: usize, j: usize) -> Weight {
        let mut v = self.0.clone();
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Weight(v)
    }

    /// Adds `delta` to entry `i` (1-indexed).
    pub fn bump(&self, i: usize, delta: i64) -> Weight {
        let mut v = self.0.clone();
        v[i - 1] += delta;
        Weight(v)
    }

    /// `gamma_c + ... + gamma_ell` for every `c`, first entry `c = 1`.
    pub fn tail_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.0.len()];
        let mut acc = 0;
        for (i, &x) in self.0.iter().enumerate().rev() {
            acc += x;
            out[i] = acc;
        }
        out
    }

    /// Whether every tail sum is nonnegative. Raising operators only lower
    /// tail sums, and `s_gamma = 0` when one is negative, so a weight failing
    /// this contributes nothing to any Catalan function.
    pub fn tails_nonneg(&self) -> bool {
        let mut acc = 0;
        self.0.iter().rev().all(|&x| {
            acc += x;
            acc >= 0
        })
    }

    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::NotAPartition(self.0.clone()));
        }
        Ok(Partition::from_sorted(self.0.iter().map(|&x| x as usize).collect()))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_list::<i64>(s).map(Weight)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses a comma separated list such as `3,2,2,1`. The empty string is
/// the empty list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list entry {x:?} in {s:?}")))
        })
        .collect()
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions whose diagram fits in `max_len` rows and `max_part` columns.
pub fn partitions_in_box(max_part: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_part * max_len)
        .flat_map(|n| partitions_bounded(n, max_part, max_len))
        .collect()
}

/// All integer vectors of length `ell` with entries in `lo..=hi`.
pub fn vectors_in_range(ell: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..ell {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// Permutations of `xs` in lexicographic order of positions, deduplicated.
pub fn distinct_permutations<T: Clone + Ord>(xs: &[T]) -> Vec<Vec<T>> {
    let mut v = xs.to_vec();
    v.sort();
    let mut out = vec![v.clone()];
    // Standard next-permutation loop.
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_trailing_zeros() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_and_hooks() {
        let p: Partition = "4,2,1".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.hook(0, 0), 6);
        assert_eq!(p.hook(1, 1), 1);
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(7).len(), 15);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(vectors_in_range(2, -1, 1).len(), 9);
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
    }
}
