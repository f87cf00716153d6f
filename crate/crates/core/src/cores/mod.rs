//! `n`-cores, the bijection with `k`-bounded partitions (`n = k + 1`),
//! strong covers and strong marked tableaux.

mod cover;
mod edge;
mod tableau;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use cover::{strong_covers_below, Component, MarkedCover, StrongCover};
pub use edge::EdgeSequence;
pub use tableau::{enumerate_tableaux, ChainCover, StrongMarkedTableau, TableauChain};

/// A partition with no hook length divisible by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CoreJson", into = "CoreJson")]
pub struct Core {
    shape: Partition,
    n: usize,
}

impl Core {
    pub fn new(shape: Partition, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("core parameter n={n} must be at least 2")));
        }
        if !is_core(&shape, n) {
            return Err(Error::NotACore { shape: shape.parts().to_vec(), n });
        }
        Ok(Core { shape, n })
    }

    pub(crate) fn new_unchecked(shape: Partition, n: usize) -> Self {
        debug_assert!(is_core(&shape, n));
        Core { shape, n }
    }

    pub fn empty(n: usize) -> Self {
        Core { shape: Partition::empty(), n }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - 1
    }

    /// The `k`-bounded partition whose row `r` counts the boxes of row `r`
    /// with hook length at most `k`.
    pub fn to_bounded(&self) -> Partition {
        to_bounded(&self.shape, self.k())
    }

    /// Boxes with hook length at most `k`; the length of the bounded partition.
    pub fn bounded_size(&self) -> usize {
        self.to_bounded().size()
    }

    /// Offset sequence view of the boundary.
    pub fn edges(&self) -> EdgeSequence {
        EdgeSequence::new(&self.shape, self.n)
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)
    }
}

#[derive(Serialize, Deserialize)]
struct CoreJson {
    shape: Partition,
    n: usize,
}

impl TryFrom<CoreJson> for Core {
    type Error = Error;
    fn try_from(j: CoreJson) -> Result<Self> {
        Core::new(j.shape, j.n)
    }
}

impl From<Core> for CoreJson {
    fn from(c: Core) -> Self {
        CoreJson { shape: c.shape, n: c.n }
    }
}

pub fn is_core(shape: &Partition, n: usize) -> bool {
    (0..shape.len()).all(|r| (0..shape.part(r)).all(|c| shape.hook(r, c) % n != 0))
}

fn to_bounded(shape: &Partition, k: usize) -> Partition {
    let parts = (0..shape.len())
        .map(|r| (0..shape.part(r)).filter(|&c| shape.hook(r, c) <= k).count())
        .collect();
    Partition::from_sorted(parts)
}

/// The `(k+1)`-core corresponding to a `k`-bounded partition. Rows are
/// placed from the bottom up, each shifted right just far enough that all
/// of its own boxes have hook length at most `k`.
pub fn to_core(lambda: &Partition, k: usize) -> Result<Core> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if lambda.max_part() > k {
        return Err(Error::NotBounded(lambda.parts().to_vec(), k));
    }
    let l = lambda.len();
    let mut kappa = vec![0usize; l];
    for i in (0..l).rev() {
        let li = lambda.part(i);
        let mut shift = 0;
        while li + kappa[i + 1..].iter().filter(|&&x| x > shift).count() > k {
            shift += 1;
        }
        kappa[i] = li + shift;
    }
    Ok(Core::new_unchecked(Partition::from_sorted(kappa), k + 1))
}

/// The `k`-skew diagram `core(lambda) / eta`: `eta` is the shape left after
/// deleting, from each row of the core, the boxes with hook at most `k`.
pub fn k_skew(lambda: &Partition, k: usize) -> Result<(Partition, Partition)> {
    let core = to_core(lambda, k)?;
    let kappa = core.shape().clone();
    let eta = Partition::from_sorted(
        (0..kappa.len()).map(|r| kappa.part(r) - lambda.part(r)).collect(),
    );
    Ok((kappa, eta))
}
