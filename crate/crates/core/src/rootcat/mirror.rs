use super::{IndexedRootIdeal, Root};

/// What the mirror lemmas say about `H(Psi; mu)` for a choice of rows
/// `y <= z <= w` on one bounce path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MirrorOutcome {
    /// `H(Psi; mu) = 0` (or, with a subset `V`, every subset lowering over
    /// `V` vanishes).
    Vanishes,
    /// Removing any listed root leaves the function unchanged. The list
    /// holds the removable root in column `y` and the removable root in
    /// row `w+1`, whichever exist.
    RemovableInvariant { roots: Vec<Root> },
    NotApplicable,
}

/// Checks the hypotheses of the mirror lemmas. The toggle case is
/// `y = z = w`. When `v` is given, it must contain both or neither of
/// `x, x+1` for every `x` on the bounce path from `y` to `w`.
pub fn mirror_predicates(
    iri: &IndexedRootIdeal,
    y: usize,
    z: usize,
    w: usize,
    v: Option<&[usize]>,
) -> MirrorOutcome {
    let psi = &iri.psi;
    let ell = psi.ell();
    let mu = |i: usize| iri.gamma.at(i);
    if !(1 <= y && y <= z && z <= w && w < ell) {
        return MirrorOutcome::NotApplicable;
    }
    let Some(path) = psi.bpath(y, w) else {
        return MirrorOutcome::NotApplicable;
    };
    if !path.contains(&z) {
        return MirrorOutcome::NotApplicable;
    }
    if !psi.is_ceiling(y) || !psi.is_wall(w) {
        return MirrorOutcome::NotApplicable;
    }
    if !path[..path.len() - 1].iter().all(|&x| psi.is_mirror(x)) {
        return MirrorOutcome::NotApplicable;
    }
    if let Some(v) = v {
        if !path.iter().all(|&x| v.contains(&x) == v.contains(&(x + 1))) {
            return MirrorOutcome::NotApplicable;
        }
    }
    let flat_except_z = path.iter().filter(|&&x| x != z).all(|&x| mu(x) == mu(x + 1));
    if flat_except_z && mu(z) == mu(z + 1) - 1 {
        return MirrorOutcome::Vanishes;
    }
    if flat_except_z && mu(z) == mu(z + 1) {
        let mut roots = Vec::new();
        if let Some(a) = psi.up(y) {
            roots.push((a, y));
        }
        if let Some(b) = psi.down(w + 1) {
            roots.push((w + 1, b));
        }
        if !roots.is_empty() {
            return MirrorOutcome::RemovableInvariant { roots };
        }
    }
    MirrorOutcome::NotApplicable
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Weight;
    use crate::rootcat::RootIdeal;

    #[test]
    fn toggle_example() {
        let x = IndexedRootIdeal::new(RootIdeal::new(vec![4, 1, 1, 0, 0]).unwrap(), Weight(vec![3, 1, 2, 1, 1])).unwrap();
        assert_eq!(mirror_predicates(&x, 2, 2, 2, None), MirrorOutcome::Vanishes);
    }

    #[test]
    fn removable_example() {
        let x = IndexedRootIdeal::new(
            RootIdeal::new(vec![5, 3, 2, 1, 1, 0]).unwrap(),
            Weight(vec![3, 2, 2, 1, 1, 1]),
        )
        .unwrap();
        assert_eq!(
            mirror_predicates(&x, 2, 2, 4, None),
            MirrorOutcome::RemovableInvariant { roots: vec![(1, 2), (5, 6)] }
        );
    }
}
