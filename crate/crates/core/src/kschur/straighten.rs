use num_traits::One;

use super::{KExpansion, KWeight};
use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::tpoly::TPoly;

/// The data of `cvr_z(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cvr {
    /// `lambda + e_[y+1, y+h] - e_[z, z+h]`.
    pub weight: Weight,
    /// `h * c`.
    pub bounce: usize,
    /// Whether `weight` is a partition; it then lies in `Par^k_ell`.
    pub is_partition: bool,
    pub h: usize,
    pub c: usize,
    uppath: Vec<usize>,
    h_x: Vec<usize>,
}

impl Cvr {
    /// Whether `v` contains all or none of `[x, x + h_x]` for every `x` on
    /// the up path of `z`; subset lowering over such `v` commutes with
    /// straightening.
    pub fn admits_subset(&self, v: &[usize]) -> bool {
        let ell = self.weight.len();
        self.uppath.iter().zip(&self.h_x).all(|(&x, &hx)| {
            let inside = (x..=(x + hx).min(ell)).filter(|i| v.contains(i)).count();
            inside == 0 || inside == (x + hx).min(ell) + 1 - x
        })
    }
}

/// Computes `cvr_z(lambda)` for `lambda` in `Par^k_ell` given as a weight of
/// length `ell`, and `z` in `1..=ell` with `lambda_z > 0`.
pub fn cvr(lambda: &Weight, z: usize, k: usize) -> Result<Cvr> {
    let ell = lambda.len();
    if !lambda.is_partition() || lambda.0.first().is_some_and(|&x| x > k as i64) {
        return Err(Error::NotBounded(lambda.0.iter().map(|&x| x.max(0) as usize).collect(), k));
    }
    if z == 0 || z > ell {
        return Err(Error::InvalidArgument(format!("row {z} is outside 1..={ell}")));
    }
    if lambda.at(z) == 0 {
        return Err(Error::InvalidArgument(format!("row {z} of {lambda} is empty")));
    }
    let mu = lambda.bump(z, -1);
    let psi = KWeight::new(mu.clone(), k)?.delta_k();
    // Corner conventions: lambda_{ell+1} = mu_{ell+1} = 0.
    let lam = |i: usize| if i > ell { 0 } else { lambda.at(i) };
    let m = |i: usize| if i == 0 { k as i64 } else if i > ell { 0 } else { mu.at(i) };

    let uppath = psi.uppath(z);
    let c = uppath.len();
    let mut start = Some(z + 1);
    if z < ell {
        for _ in 0..c {
            start = start.and_then(|x| psi.up(x));
        }
    }
    let constant = |a: usize, b: usize| a >= 1 && b <= ell && (a..b).all(|i| m(i) == m(i + 1));

    let mut h = 0;
    let mut y = None;
    if z < ell && lam(z) == lam(z + 1) {
        if let Some(y1) = start {
            y = Some(y1 - 1);
            for cand in 1..=ell - z {
                let ok = constant(z + 1, z + cand)
                    && uppath[1..].iter().all(|&x| constant(x, x + cand))
                    && constant(y1, y1 + cand - 1);
                if ok {
                    h = cand;
                }
            }
        }
    }
    if h == 0 {
        y = None;
    }

    let mut w = lambda.clone();
    if let Some(y) = y {
        for i in y + 1..=y + h {
            w = w.bump(i, 1);
        }
    }
    for i in z..=z + h {
        w = w.bump(i, -1);
    }
    let is_partition = lam(z + h) > lam(z + h + 1);

    let c_prime: i64 = if is_partition {
        -1
    } else {
        (0..c)
            .filter(|&i| {
                if i == 0 {
                    return true;
                }
                match psi.bpath(uppath[i], uppath[1]) {
                    Some(path) => path.iter().all(|&x| m(x + h) == m(x + h + 1)),
                    None => false,
                }
            })
            .max()
            .map_or(-1, |i| i as i64)
    };
    let h_x = (0..c).map(|s| if (s as i64) <= c_prime { h + 1 } else { h }).collect();

    Ok(Cvr { weight: w, bounce: h * c, is_partition, h, c, uppath, h_x })
}

/// `s^(k)_{lambda - e_z}` in the `k`-Schur basis: zero, or
/// `t^bounce s^(k)_{cvr_z(lambda)}`.
pub fn straighten(lambda: &Weight, z: usize, k: usize) -> Result<KExpansion> {
    let r = cvr(lambda, z, k)?;
    if !r.is_partition {
        return Ok(KExpansion::zero(k));
    }
    let p: Partition = r.weight.to_partition()?;
    let mut e = KExpansion::zero(k);
    e.add_term(p, TPoly::one().shift(r.bounce))?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        Weight(s.chars().map(|c| c.to_digit(10).unwrap() as i64).collect())
    }

    #[test]
    fn first_example() {
        let r = cvr(&w("222222221"), 6, 4).unwrap();
        assert_eq!(r.weight, w("332221111"));
        assert_eq!((r.c, r.h, r.bounce), (2, 2, 4));
        assert!(r.is_partition);
        assert_eq!(r.h_x, vec![2, 2]);
    }

    #[test]
    fn vanishing_examples() {
        let r = cvr(&w("222222222"), 6, 4).unwrap();
        assert_eq!(r.weight, w("332221112"));
        assert!(!r.is_partition);
        assert_eq!(r.uppath, vec![6, 3]);
        assert_eq!(r.h_x, vec![3, 2]);
        let r = cvr(&w("432222222"), 6, 4).unwrap();
        assert_eq!(r.weight, w("442221122"));
        assert!(!r.is_partition);
        assert_eq!(r.h, 1);
        assert_eq!(r.h_x, vec![2, 2]);
    }

    #[test]
    fn trivial_case() {
        let r = cvr(&w("3321"), 4, 4).unwrap();
        assert_eq!(r.weight, w("3320"));
        assert_eq!(r.bounce, 0);
        assert!(r.is_partition);
    }

    #[test]
    fn one_step() {
        let e = straighten(&w("33321"), 2, 4).unwrap();
        assert_eq!(e.to_string(), "(1*t)*s^(4)[4,2,2,2,1]");
    }
}
