use std::collections::BTreeSet;

use super::Core;
use crate::partition::Partition;

/// A connected piece of a skew shape. Rows and columns are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub cells: Vec<(usize, usize)>,
}

impl Component {
    /// The smallest row index; the component's head lies in this row.
    pub fn head_row(&self) -> usize {
        self.cells.iter().map(|c| c.0).min().unwrap()
    }

    pub fn bottom_row(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap()
    }

    pub fn height(&self) -> usize {
        self.bottom_row() + 1 - self.head_row()
    }
}

/// Connected components of `outer / inner`, ordered from northeast to southwest.
pub fn skew_components(outer: &Partition, inner: &Partition) -> Vec<Component> {
    let mut cells: BTreeSet<(usize, usize)> = BTreeSet::new();
    for r in 0..outer.len() {
        for c in inner.part(r)..outer.part(r) {
            cells.insert((r + 1, c + 1));
        }
    }
    let mut comps = Vec::new();
    while let Some(&start) = cells.iter().next() {
        cells.remove(&start);
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some((r, c)) = stack.pop() {
            comp.push((r, c));
            let nbrs = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
            for nb in nbrs {
                if cells.remove(&nb) {
                    stack.push(nb);
                }
            }
        }
        comp.sort();
        comps.push(Component { cells: comp });
    }
    comps.sort_by_key(|c| c.head_row());
    comps
}

/// A strong cover `tau => kappa` of `n`-cores.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCover {
    pub tau: Core,
    pub kappa: Core,
    /// Row of the head of the southwestmost component.
    pub z: usize,
    pub components: Vec<Component>,
}

impl StrongCover {
    pub(crate) fn new(tau: Core, kappa: Core, z: usize) -> Self {
        let components = skew_components(kappa.shape(), tau.shape());
        StrongCover { tau, kappa, z, components }
    }

    /// Head rows of the components, increasing; these are the admissible marks.
    pub fn marks(&self) -> Vec<usize> {
        self.components.iter().map(Component::head_row).collect()
    }

    pub fn height(&self) -> usize {
        self.components[0].height()
    }

    /// `c (h - 1) + N`, where `c` is the number of components, `h` their
    /// height and `N` the number of components strictly below the marked one.
    pub fn spin(&self, mark: usize) -> usize {
        let c = self.components.len();
        let below = self.components.iter().filter(|x| x.head_row() > mark).count();
        c * (self.height() - 1) + below
    }

    pub fn with_mark(self, mark: usize) -> MarkedCover {
        assert!(self.marks().contains(&mark), "{mark} is not a component head");
        MarkedCover { cover: self, mark }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCover {
    pub cover: StrongCover,
    pub mark: usize,
}

impl MarkedCover {
    pub fn spin(&self) -> usize {
        self.cover.spin(self.mark)
    }
}

/// Every strong cover `tau => kappa`, one for each row `z` in which a
/// southwestmost ribbon can start, by increasing `z`.
pub fn strong_covers_below(kappa: &Core) -> Vec<StrongCover> {
    let edges = kappa.edges();
    (1..=kappa.shape().len())
        .filter_map(|z| {
            let tau = edges.cover(z)?;
            Some(StrongCover::new(Core::new_unchecked(tau, kappa.n()), kappa.clone(), z))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn core(s: &str, n: usize) -> Core {
        Core::new(s.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn spin_example() {
        let kappa = core("6,6,5,4,4,3,2,2,1", 5);
        let covers = strong_covers_below(&kappa);
        let c = covers.iter().find(|c| c.z == 6).unwrap();
        assert_eq!(c.tau, core("6,6,3,3,3,1,1,1,1", 5));
        assert_eq!(c.marks(), vec![3, 6]);
        assert_eq!(c.spin(6), 4);
        assert_eq!(c.spin(3), 5);
    }
}
