use std::fmt;

use serde::{Deserialize, Serialize};

use super::cover::{strong_covers_below, StrongCover};
use super::{to_core, Core};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A chain of marked strong covers `kappa^(0) => ... => kappa^(m)`.
/// `covers[v]` is the cover `kappa^(v) => kappa^(v+1)` with its mark.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongMarkedTableau {
    outside: Core,
    covers: Vec<(StrongCover, usize)>,
}

impl StrongMarkedTableau {
    pub fn outside(&self) -> &Core {
        &self.outside
    }

    /// The bottom core `kappa^(0)`.
    pub fn inner_core(&self) -> &Core {
        match self.covers.first() {
            Some((c, _)) => &c.tau,
            None => &self.outside,
        }
    }

    /// The bounded partition of the bottom core.
    pub fn inside(&self) -> Partition {
        self.inner_core().to_bounded()
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn marks(&self) -> Vec<usize> {
        self.covers.iter().map(|(_, m)| *m).collect()
    }

    pub fn covers(&self) -> &[(StrongCover, usize)] {
        &self.covers
    }

    pub fn spins(&self) -> Vec<usize> {
        self.covers.iter().map(|(c, m)| c.spin(*m)).collect()
    }

    pub fn spin(&self) -> usize {
        self.spins().iter().sum()
    }
}

/// Strong marked tableaux with outer shape `core(mu)` and weight `eta`:
/// the covers are grouped in consecutive blocks of sizes `eta_1, eta_2, ...`
/// from the bottom. Within a block the marks weakly decrease going up, or
/// strictly increase when `vertical` is set. Results are sorted
/// lexicographically by the `(z, mark)` pairs read from the top down.
pub fn enumerate_tableaux(mu: &Partition, k: usize, eta: &[usize], vertical: bool) -> Result<Vec<StrongMarkedTableau>> {
    let outside = to_core(mu, k)?;
    let m: usize = eta.iter().sum();
    if m > mu.size() {
        return Err(Error::InvalidArgument(format!(
            "weight of size {m} exceeds |mu| = {}",
            mu.size()
        )));
    }
    // block_start[v] is true when cover v (0-indexed from the bottom) is the
    // first of its block.
    let mut block_start = vec![false; m];
    let mut v = 0;
    for &e in eta {
        if e > 0 {
            block_start[v] = true;
        }
        v += e;
    }
    let mut out = Vec::new();
    let mut chain = Vec::new();
    extend(&outside, m, None, &block_start, vertical, &mut chain, &mut out);
    Ok(out
        .into_iter()
        .map(|mut covers: Vec<(StrongCover, usize)>| {
            covers.reverse();
            StrongMarkedTableau { outside: outside.clone(), covers }
        })
        .collect())
}

fn extend(
    kappa: &Core,
    v: usize,
    upper_mark: Option<usize>,
    block_start: &[bool],
    vertical: bool,
    chain: &mut Vec<(StrongCover, usize)>,
    out: &mut Vec<Vec<(StrongCover, usize)>>,
) {
    if v == 0 {
        out.push(chain.clone());
        return;
    }
    // Cover index v-1 sits below cover v; they share a block unless v
    // starts a new one.
    let same_block = v < block_start.len() && !block_start[v];
    for cover in strong_covers_below(kappa) {
        for mark in cover.marks() {
            if same_block {
                let above = upper_mark.unwrap();
                let ok = if vertical { mark < above } else { mark >= above };
                if !ok {
                    continue;
                }
            }
            chain.push((cover.clone(), mark));
            extend(&cover.tau, v - 1, Some(mark), block_start, vertical, chain, out);
            chain.pop();
        }
    }
}

/// Draws the outer core with `.` for boxes of the bottom core and the cover
/// index for every other box; the marked box of each cover gets a `*`.
impl fmt::Display for StrongMarkedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.outside.shape();
        let mut grid: Vec<Vec<String>> = (0..shape.len())
            .map(|r| vec![".".to_string(); shape.part(r)])
            .collect();
        for (v, (cover, mark)) in self.covers.iter().enumerate() {
            for comp in &cover.components {
                for &(r, c) in &comp.cells {
                    grid[r - 1][c - 1] = (v + 1).to_string();
                }
            }
            let c = cover.kappa.shape().part(mark - 1);
            grid[mark - 1][c - 1] = format!("{}*", v + 1);
        }
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
            if i + 1 < grid.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// One cover of the JSON chain form: the smaller core, the mark and the spin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCover {
    pub tau: Partition,
    pub mark: usize,
    pub spin: usize,
}

/// The JSON form of a tableau: the outer core and its covers from the bottom up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauChain {
    pub outside: Partition,
    pub covers: Vec<ChainCover>,
}

impl Serialize for StrongMarkedTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_chain().serialize(s)
    }
}

impl StrongMarkedTableau {
    pub fn to_chain(&self) -> TableauChain {
        TableauChain {
            outside: self.outside.shape().clone(),
            covers: self
                .covers
                .iter()
                .map(|(c, m)| ChainCover { tau: c.tau.shape().clone(), mark: *m, spin: c.spin(*m) })
                .collect(),
        }
    }

    /// Rebuilds a tableau from its chain form with core parameter `n`,
    /// checking every cover, mark and spin.
    pub fn from_chain(chain: &TableauChain, n: usize) -> Result<Self> {
        let outside = Core::new(chain.outside.clone(), n)?;
        let mut covers = Vec::new();
        let mut above = outside.clone();
        for step in chain.covers.iter().rev() {
            let found = strong_covers_below(&above)
                .into_iter()
                .find(|c| c.tau.shape() == &step.tau)
                .ok_or_else(|| Error::InvalidArgument(format!("{} is not covered by {above}", step.tau)))?;
            if !found.marks().contains(&step.mark) || found.spin(step.mark) != step.spin {
                return Err(Error::InvalidArgument(format!("bad mark or spin on cover {} => {above}", step.tau)));
            }
            above = found.tau.clone();
            covers.push((found, step.mark));
        }
        covers.reverse();
        Ok(StrongMarkedTableau { outside, covers })
    }
}
