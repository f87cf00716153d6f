use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rootcat::RootIdeal;

fn check_skew(kappa: &Partition, eta: &Partition) -> Result<()> {
    if !kappa.contains(eta) {
        return Err(Error::InvalidSkew(format!("{eta} does not fit inside {kappa}")));
    }
    Ok(())
}

/// Row lengths and column lengths of `kappa / eta`.
fn row_col_lengths(kappa: &Partition, eta: &Partition) -> (Vec<usize>, Vec<usize>) {
    let rows = (0..kappa.len()).map(|r| kappa.part(r) - eta.part(r)).collect();
    let cols = (1..=kappa.max_part())
        .map(|c| (0..kappa.len()).filter(|&r| eta.part(r) < c && c <= kappa.part(r)).count())
        .collect();
    (rows, cols)
}

/// Whether both the row lengths and the column lengths of `kappa / eta`
/// are weakly decreasing.
pub fn skew_linking_check(kappa: &Partition, eta: &Partition) -> Result<bool> {
    check_skew(kappa, eta)?;
    let (rows, cols) = row_col_lengths(kappa, eta);
    let dec = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
    Ok(dec(&rows) && dec(&cols))
}

/// The root ideal of a skew diagram on `ell = len(kappa)` coordinates:
/// row `i <= len(eta)` holds the roots `(i, j)` with `j >= mu_{eta_i} + i`,
/// where `mu` lists the column lengths of `kappa / eta`.
pub fn chen_ideal(kappa: &Partition, eta: &Partition) -> Result<RootIdeal> {
    check_skew(kappa, eta)?;
    let ell = kappa.len();
    let (_, cols) = row_col_lengths(kappa, eta);
    let counts = (1..=ell)
        .map(|i| {
            if i > eta.len() {
                return 0;
            }
            let first = cols[eta.part(i - 1) - 1] + i;
            let first = first.max(i + 1);
            (ell + 1).saturating_sub(first)
        })
        .collect();
    RootIdeal::new(counts).map_err(|e| Error::InvalidSkew(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::k_skew;

    #[test]
    fn example_ideal() {
        let lam: Partition = "6,6,4,3,3,2,1,1,1,1".parse().unwrap();
        let (kappa, eta) = k_skew(&lam, 7).unwrap();
        assert!(skew_linking_check(&kappa, &eta).unwrap());
        let phi = chen_ideal(&kappa, &eta).unwrap();
        assert_eq!(phi.rowcounts(), &[8, 6, 3, 2, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn empty_eta() {
        let kappa: Partition = "3,1".parse().unwrap();
        assert!(chen_ideal(&kappa, &Partition::empty()).unwrap().is_empty());
        assert!(chen_ideal(&kappa, &"4".parse().unwrap()).is_err());
    }
}
