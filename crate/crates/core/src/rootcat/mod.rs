//! Root ideals, their bounce combinatorics, and Catalan functions.

mod catalan;
mod mirror;
mod recurrence;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Weight;

pub use catalan::{catalan, catalan_chl, catalan_series, catalan_t1, raise_over, Evaluator};
pub use mirror::{mirror_predicates, MirrorOutcome};
pub use recurrence::{expand_recurrence, subset_lower, subset_lower_sum, RecurrenceMode};

/// A positive root `e_i - e_j`, written `(i, j)` with `1 <= i < j <= ell`.
pub type Root = (usize, usize);

/// An upper order ideal of the positive roots of `GL_ell`, stored by the
/// number of roots in each row. Row `i` holds columns
/// `ell+1-n_i ..= ell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIdeal {
    rowcounts: Vec<usize>,
}

impl RootIdeal {
    pub fn new(rowcounts: Vec<usize>) -> Result<Self> {
        let ell = rowcounts.len();
        for (i, &n) in rowcounts.iter().enumerate() {
            if n > ell - 1 - i {
                return Err(Error::InvalidRootIdeal(format!(
                    "row {} has {} roots but at most {} fit",
                    i + 1,
                    n,
                    ell - 1 - i
                )));
            }
        }
        if rowcounts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidRootIdeal(format!(
                "row counts {rowcounts:?} are not weakly decreasing"
            )));
        }
        Ok(RootIdeal { rowcounts })
    }

    pub fn empty(ell: usize) -> Self {
        RootIdeal { rowcounts: vec![0; ell] }
    }

    /// All positive roots.
    pub fn full(ell: usize) -> Self {
        RootIdeal { rowcounts: (0..ell).map(|i| ell - 1 - i).collect() }
    }

    /// The ideal with exactly the given roots, if they form an upper ideal.
    pub fn from_roots(ell: usize, roots: &[Root]) -> Result<Self> {
        let mut counts = vec![0; ell];
        for &(i, j) in roots {
            if !(1 <= i && i < j && j <= ell) {
                return Err(Error::InvalidRootIdeal(format!("({i},{j}) is not a root for ell={ell}")));
            }
            counts[i - 1] += 1;
        }
        let psi = RootIdeal::new(counts)?;
        for &(i, j) in roots {
            if !psi.contains(i, j) {
                return Err(Error::InvalidRootIdeal(format!("roots {roots:?} are not an upper ideal")));
            }
        }
        Ok(psi)
    }

    pub fn ell(&self) -> usize {
        self.rowcounts.len()
    }

    pub fn rowcounts(&self) -> &[usize] {
        &self.rowcounts
    }

    /// Number of roots in row `i` (1-indexed); zero outside `1..=ell`.
    pub fn row_count(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rowcounts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of roots in column `j` (1-indexed).
    pub fn col_count(&self, j: usize) -> usize {
        (1..j).filter(|&i| self.contains(i, j)).count()
    }

    pub fn len(&self) -> usize {
        self.rowcounts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let ell = self.ell();
        1 <= i && i < j && j <= ell && j + self.rowcounts[i - 1] > ell
    }

    pub fn roots(&self) -> Vec<Root> {
        let ell = self.ell();
        (1..=ell)
            .flat_map(|i| (ell + 1 - self.rowcounts[i - 1]..=ell).map(move |j| (i, j)))
            .collect()
    }

    /// Positive roots not in the ideal.
    pub fn complement(&self) -> Vec<Root> {
        let ell = self.ell();
        (1..=ell)
            .flat_map(|i| (i + 1..=ell).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.contains(i, j))
            .collect()
    }

    /// Roots whose removal leaves an ideal, by increasing row.
    pub fn removable_roots(&self) -> Vec<Root> {
        let ell = self.ell();
        (1..=ell)
            .filter(|&r| {
                let n = self.row_count(r);
                n > 0 && self.row_count(r + 1) < n
            })
            .map(|r| (r, ell + 1 - self.row_count(r)))
            .collect()
    }

    /// Roots whose addition gives an ideal, by increasing row.
    pub fn addable_roots(&self) -> Vec<Root> {
        let ell = self.ell();
        (1..=ell)
            .filter_map(|r| {
                let c = ell - self.row_count(r);
                let ok = c > r && (r == 1 || self.row_count(r - 1) > self.row_count(r));
                ok.then_some((r, c))
            })
            .collect()
    }

    pub fn with_root(&self, beta: Root) -> Result<RootIdeal> {
        if !self.addable_roots().contains(&beta) {
            return Err(Error::InvalidRootIdeal(format!("{beta:?} is not addable")));
        }
        let mut rc = self.rowcounts.clone();
        rc[beta.0 - 1] += 1;
        Ok(RootIdeal { rowcounts: rc })
    }

    pub fn without_root(&self, alpha: Root) -> Result<RootIdeal> {
        if !self.removable_roots().contains(&alpha) {
            return Err(Error::InvalidRootIdeal(format!("{alpha:?} is not removable")));
        }
        let mut rc = self.rowcounts.clone();
        rc[alpha.0 - 1] -= 1;
        Ok(RootIdeal { rowcounts: rc })
    }

    /// `down(x) = j` when `(x, j)` is removable.
    pub fn down(&self, x: usize) -> Option<usize> {
        self.removable_roots().into_iter().find(|r| r.0 == x).map(|r| r.1)
    }

    /// `up(x) = i` when `(i, x)` is removable.
    pub fn up(&self, x: usize) -> Option<usize> {
        self.removable_roots().into_iter().find(|r| r.1 == x).map(|r| r.0)
    }

    /// `(x, down(x), down(down(x)), ...)` until `down` is undefined.
    pub fn downpath(&self, x: usize) -> Vec<usize> {
        let mut path = vec![x];
        while let Some(y) = self.down(*path.last().unwrap()) {
            path.push(y);
        }
        path
    }

    /// `(x, up(x), up(up(x)), ...)` until `up` is undefined.
    pub fn uppath(&self, x: usize) -> Vec<usize> {
        let mut path = vec![x];
        while let Some(y) = self.up(*path.last().unwrap()) {
            path.push(y);
        }
        path
    }

    /// The bounce path from `a` down to `b`, if `b` lies on `downpath(a)`.
    pub fn bpath(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let path = self.downpath(a);
        let pos = path.iter().position(|&x| x == b)?;
        Some(path[..=pos].to_vec())
    }

    /// Number of bounces from `a` to `b`, i.e. `|bpath(a,b)| - 1`.
    pub fn bounce(&self, a: usize, b: usize) -> Option<usize> {
        self.bpath(a, b).map(|p| p.len() - 1)
    }

    /// Rows `r` such that rows `r` and `r+1` have the same length.
    pub fn walls(&self) -> Vec<usize> {
        (1..self.ell()).filter(|&r| self.row_count(r) == self.row_count(r + 1)).collect()
    }

    /// Columns `c` such that columns `c` and `c+1` have the same length.
    pub fn ceilings(&self) -> Vec<usize> {
        (1..self.ell()).filter(|&c| self.col_count(c) == self.col_count(c + 1)).collect()
    }

    /// Rows `r` such that `(r,c)` and `(r+1,c+1)` are removable for some `c > r+1`.
    pub fn mirrors(&self) -> Vec<usize> {
        let rem = self.removable_roots();
        (1..self.ell())
            .filter(|&r| {
                rem.iter()
                    .any(|&(a, c)| a == r && c > r + 1 && rem.contains(&(r + 1, c + 1)))
            })
            .collect()
    }

    pub fn is_wall(&self, r: usize) -> bool {
        r >= 1 && r < self.ell() && self.row_count(r) == self.row_count(r + 1)
    }

    pub fn is_ceiling(&self, c: usize) -> bool {
        c >= 1 && c < self.ell() && self.col_count(c) == self.col_count(c + 1)
    }

    pub fn is_mirror(&self, r: usize) -> bool {
        self.mirrors().contains(&r)
    }

    /// Drops the last coordinate: the roots in column `ell` go away.
    pub fn truncate_last(&self) -> RootIdeal {
        let ell = self.ell();
        let rc = (0..ell.saturating_sub(1))
            .map(|i| self.rowcounts[i].saturating_sub(1))
            .collect();
        RootIdeal { rowcounts: rc }
    }
}

impl fmt::Display for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ell = self.ell();
        for i in 1..=ell {
            for j in 1..=ell {
                let ch = if j <= i {
                    ' '
                } else if self.contains(i, j) {
                    '#'
                } else {
                    '.'
                };
                write!(f, "{ch}")?;
            }
            if i < ell {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Every root ideal on `ell` coordinates (a Catalan number of them).
pub fn all_root_ideals(ell: usize) -> Vec<RootIdeal> {
    fn go(i: usize, ell: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<RootIdeal>) {
        if i == ell {
            out.push(RootIdeal { rowcounts: cur.clone() });
            return;
        }
        for n in 0..=prev.min(ell - 1 - i) {
            cur.push(n);
            go(i + 1, ell, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, ell, ell, &mut Vec::new(), &mut out);
    out
}

/// A root ideal together with a weight of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IriJson", into = "IriJson")]
pub struct IndexedRootIdeal {
    pub psi: RootIdeal,
    pub gamma: Weight,
}

impl IndexedRootIdeal {
    pub fn new(psi: RootIdeal, gamma: Weight) -> Result<Self> {
        if psi.ell() != gamma.len() {
            return Err(Error::LengthMismatch { expected: psi.ell(), got: gamma.len() });
        }
        Ok(IndexedRootIdeal { psi, gamma })
    }

    pub fn ell(&self) -> usize {
        self.psi.ell()
    }

    pub fn with_gamma(&self, gamma: Weight) -> Self {
        IndexedRootIdeal { psi: self.psi.clone(), gamma }
    }

    pub fn with_psi(&self, psi: RootIdeal) -> Self {
        IndexedRootIdeal { psi, gamma: self.gamma.clone() }
    }
}

#[derive(Serialize, Deserialize)]
struct IriJson {
    ell: usize,
    rowcounts: Vec<usize>,
    gamma: Vec<i64>,
}

impl TryFrom<IriJson> for IndexedRootIdeal {
    type Error = Error;
    fn try_from(j: IriJson) -> Result<Self> {
        if j.rowcounts.len() != j.ell {
            return Err(Error::LengthMismatch { expected: j.ell, got: j.rowcounts.len() });
        }
        IndexedRootIdeal::new(RootIdeal::new(j.rowcounts)?, Weight(j.gamma))
    }
}

impl From<IndexedRootIdeal> for IriJson {
    fn from(x: IndexedRootIdeal) -> Self {
        IriJson { ell: x.psi.ell(), rowcounts: x.psi.rowcounts, gamma: x.gamma.0 }
    }
}
