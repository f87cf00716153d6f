use num_traits::Zero;

use super::KExpansion;
use crate::cores::{enumerate_tableaux, StrongMarkedTableau};
use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::symfunc::SymFunc;
use crate::tpoly::TPoly;

fn collect(k: usize, tableaux: impl IntoIterator<Item = StrongMarkedTableau>) -> KExpansion {
    let mut out = KExpansion::zero(k);
    for t in tableaux {
        out.add_term(t.inside(), TPoly::t_pow(t.spin()))
            .expect("insides are k-bounded");
    }
    out
}

fn check_bounded(mu: &Partition, k: usize) -> Result<()> {
    if k == 0 || mu.max_part() > k {
        return Err(Error::NotBounded(mu.parts().to_vec(), k));
    }
    Ok(())
}

/// `e_d^perp s^(k)_mu` as a sum over vertical strong marked tableaux of weight `(d)`.
pub fn vertical_pieri(mu: &Partition, k: usize, d: usize) -> Result<KExpansion> {
    check_bounded(mu, k)?;
    if d > mu.size() {
        return Ok(KExpansion::zero(k));
    }
    Ok(collect(k, enumerate_tableaux(mu, k, &[d], true)?))
}

/// `h_d^perp s^(k)_mu` as a sum over strong marked tableaux of weight `(d)`.
pub fn horizontal_pieri(mu: &Partition, k: usize, d: usize) -> Result<KExpansion> {
    check_bounded(mu, k)?;
    if d > mu.size() {
        return Ok(KExpansion::zero(k));
    }
    Ok(collect(k, enumerate_tableaux(mu, k, &[d], false)?))
}

/// The vertical Pieri sum restricted to tableaux whose marks all lie in `1..=m`.
pub fn partial_restriction(mu: &Partition, k: usize, d: usize, m: usize) -> Result<KExpansion> {
    check_bounded(mu, k)?;
    if d > mu.size() {
        return Ok(KExpansion::zero(k));
    }
    let ts = enumerate_tableaux(mu, k, &[d], true)?;
    Ok(collect(k, ts.into_iter().filter(|t| t.marks().iter().all(|&r| r <= m))))
}

/// The difference of consecutive partial restrictions at `m` and `m-1`:
/// tableaux whose largest mark is exactly `m`.
pub fn last_mark_difference(mu: &Partition, k: usize, d: usize, m: usize) -> Result<KExpansion> {
    check_bounded(mu, k)?;
    if d > mu.size() {
        return Ok(KExpansion::zero(k));
    }
    let ts = enumerate_tableaux(mu, k, &[d], true)?;
    Ok(collect(k, ts.into_iter().filter(|t| t.marks().iter().max() == Some(&m))))
}

/// `s^(k)_mu` in the `(k+1)`-Schur basis, for `mu` given with an explicit
/// length `ell` (trailing zeros allowed).
pub fn branch(mu: &Weight, k: usize) -> Result<KExpansion> {
    let lam = mu.to_partition()?;
    check_bounded(&lam, k)?;
    let ell = mu.len();
    let shifted = Partition::new(mu.0.iter().map(|&x| x as usize + 1).collect())?;
    let ts = enumerate_tableaux(&shifted, k + 1, &[ell], true)?;
    Ok(collect(k + 1, ts))
}

/// The Schur expansion of `s^(k)_mu` as a positive sum over vertical strong
/// marked tableaux, with `m = max(|mu| - k, 0)` and `mu` of length `ell`.
pub fn schur_expand(mu: &Weight, k: usize) -> Result<SymFunc> {
    let lam = mu.to_partition()?;
    check_bounded(&lam, k)?;
    let ell = mu.len();
    let m = lam.size().saturating_sub(k);
    if m == 0 {
        return Ok(SymFunc::schur(lam));
    }
    let shifted = Partition::new(mu.0.iter().map(|&x| x as usize + m).collect())?;
    let ts = enumerate_tableaux(&shifted, k + m, &vec![ell; m], true)?;
    let mut out = SymFunc::zero();
    for t in ts {
        out.add_term(t.inside(), TPoly::t_pow(t.spin()));
    }
    Ok(out)
}

/// `sum_{T in SMT^k_eta(mu)} t^spin(T)`.
pub fn smt_weight_poly(mu: &Partition, k: usize, eta: &[usize]) -> Result<TPoly> {
    check_bounded(mu, k)?;
    let mut out = TPoly::zero();
    for t in enumerate_tableaux(mu, k, eta, false)? {
        out += TPoly::t_pow(t.spin());
    }
    Ok(out)
}

/// The right action of `e~_d` on a `k`-Schur expansion: each
/// `s^(k)_mu` goes to its vertical Pieri sum.
pub fn e_tilde(f: &KExpansion, d: usize) -> Result<KExpansion> {
    act(f, |mu| vertical_pieri(mu, f.k(), d))
}

/// The right action of `h~_d`, via horizontal Pieri sums.
pub fn h_tilde(f: &KExpansion, d: usize) -> Result<KExpansion> {
    act(f, |mu| horizontal_pieri(mu, f.k(), d))
}

fn act(f: &KExpansion, mut op: impl FnMut(&Partition) -> Result<KExpansion>) -> Result<KExpansion> {
    let mut out = KExpansion::zero(f.k());
    for (mu, c) in f.terms() {
        out.add_scaled(&op(mu)?, c)?;
    }
    Ok(out)
}
