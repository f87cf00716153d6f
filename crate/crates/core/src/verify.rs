//! Named identity sweeps. Each suite checks one family of identities over a
//! finite range and reports the number of cases and any failures.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::cores::{k_skew, strong_covers_below, to_core, Core};
use crate::error::{Error, Result};
use crate::kschur::{
    branch, chen_ideal, cvr, e_tilde, h_tilde, hl_expand, horizontal_pieri, kschur, last_mark_difference,
    par_k_ell, partial_restriction, schur_expand, skew_linking_check, smt_weight_poly, straighten, vertical_pieri,
    KExpansion, KWeight,
};
use crate::oracle;
use crate::partition::{distinct_permutations, partitions_bounded, partitions_of, vectors_in_range, Partition, Weight};
use crate::rootcat::{
    all_root_ideals, catalan_chl, catalan_series, catalan_t1, expand_recurrence, raise_over, mirror_predicates, subset_lower,
    subset_lower_sum, IndexedRootIdeal, MirrorOutcome, RecurrenceMode, RootIdeal,
};
use crate::symfunc::{dominance_leq, e_perp, h_perp, hall_pair_h, omega, SymFunc};
use crate::tpoly::TPoly;
use crate::vertexops::VertexCache;

/// Optional overrides for a suite's default sweep bounds. Each suite reads
/// `k_max` and `size_max` as its own natural bounds (documented per suite).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ranges {
    pub k_max: Option<usize>,
    pub size_max: Option<usize>,
}

impl Ranges {
    fn k(&self, default: usize) -> usize {
        self.k_max.unwrap_or(default)
    }

    fn size(&self, default: usize) -> usize {
        self.size_max.unwrap_or(default)
    }
}

const MAX_SAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failed: usize,
    /// Descriptions of the first few failures.
    pub samples: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), cases: 0, failed: 0, samples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(what());
            }
        }
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, lhs: &T, rhs: &T, what: impl FnOnce() -> String) {
        self.check(lhs == rhs, || format!("{}: {lhs} != {rhs}", what()));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} cases, {} failed [{status}]", self.suite, self.cases, self.failed)?;
        for s in &self.samples {
            write!(f, "\n  {s}")?;
        }
        Ok(())
    }
}

type SuiteFn = fn(&Ranges) -> Report;

const SUITES: &[(&str, SuiteFn, &str)] = &[
    ("straighten-jt", straighten_jt, "Schur straightening vs Jacobi-Trudi determinants (size_max bounds each entry)"),
    ("perp-adjoint", perp_adjoint, "e_d^perp and h_d^perp are adjoint to Pieri multiplication"),
    ("perp-commute", perp_commute, "e_d^perp and h_d^perp commute pairwise"),
    ("kostka", kostka, "Hall pairing with h_lambda gives Kostka numbers"),
    ("omega", omega_suite, "omega is the conjugation involution"),
    ("vertex-commutation", vertex_commutation, "exchange relation for B_m B_n"),
    ("vertex-eperp", vertex_eperp, "e_d^perp B_m = B_m e_d^perp + B_{m-1} e_{d-1}^perp"),
    ("chl-positive", chl_positive, "H_mu is Schur positive and H_mu(t=1) = h_mu"),
    ("chl-negative-tail", chl_negative_tail, "H_gamma = 0 when the last entry is negative"),
    ("dominance-span", dominance_span, "H_gamma lies in the span of H_lambda, lambda dominating gamma"),
    ("evaluators", evaluators, "the series, row-wise vertex-operator, flat subset and t=1 Catalan evaluators agree"),
    ("recurrences", recurrences, "addable, removable and downpath recurrences"),
    ("sl2", sl2, "sl2 cancellation for tau_i-invariant ideals"),
    ("eperp-pushdown", eperp_pushdown, "e_d^perp H(Psi;gamma) = subset lowering over all rows"),
    ("trailing-zeros", trailing_zeros, "a trailing zero can be dropped with the last row and column"),
    ("mirror", mirror, "mirror lemmas and their subset-lowering variants"),
    ("core-bijection", core_bijection, "cores and bounded partitions are in bijection"),
    ("offsets", offsets, "offset sequences rebuild the boundary and shift correctly"),
    ("cover-validity", cover_validity, "every cover is a union of equal-height ribbons"),
    ("dictionary", dictionary, "covers, markings and spins match straightening and bounce paths"),
    ("pieri", pieri, "vertical and horizontal dual Pieri rules"),
    ("shift-invariance", shift_invariance, "e_ell^perp s^(k+1)_{mu+1^ell} = s^(k)_mu"),
    ("stability", stability, "s^(k)_mu = s_mu when k >= |mu|"),
    ("hall-pairing", hall_pairing, "<s^(k)_mu, h_eta> counts strong marked tableaux, in any order of eta"),
    ("straightening", straightening, "k-Schur straightening, with and without subset lowering"),
    ("operator-algebra", operator_algebra, "alternating sum of h~ e~ vanishes on the k-Schur basis"),
    ("schur-positivity", schur_positivity, "the tableau Schur expansion is positive and equals s^(k)_mu"),
    ("branching", branching, "k-Schur into (k+1)-Schur branching"),
    ("partial-restriction", partial_restriction_suite, "mark-restricted vertical tableaux = subset lowering"),
    ("chen", chen, "the Chen ideal of the k-skew diagram gives s^(k)_lambda"),
    ("basis", basis, "hl_expand of s^(k)_mu is unitriangular in dominance order"),
];

/// Names of all suites, in run order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

pub fn suite_description(name: &str) -> Option<&'static str> {
    SUITES.iter().find(|s| s.0 == name).map(|s| s.2)
}

pub fn run_suite(name: &str, ranges: &Ranges) -> Result<Report> {
    let (_, f, _) = SUITES
        .iter()
        .find(|s| s.0 == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{name}'")))?;
    Ok(f(ranges))
}

pub fn run_all(ranges: &Ranges) -> Vec<Report> {
    SUITES.iter().map(|(_, f, _)| f(ranges)).collect()
}

fn all_partitions_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn ideals_upto(ell: usize) -> impl Iterator<Item = RootIdeal> {
    (1..=ell).flat_map(all_root_ideals)
}

fn iri(psi: &RootIdeal, gamma: Weight) -> IndexedRootIdeal {
    IndexedRootIdeal::new(psi.clone(), gamma).expect("lengths agree")
}

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// Subsets of `1..=ell` as sorted vectors.
fn subsets(ell: usize) -> Vec<Vec<usize>> {
    (0u32..1 << ell)
        .map(|mask| (1..=ell).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn kschur_w(cache: &mut VertexCache, mu: &Weight, k: usize) -> SymFunc {
    kschur(cache, &KWeight::new(mu.clone(), k).expect("valid k-weight"))
}

fn kschur_p(cache: &mut VertexCache, mu: &Partition, k: usize) -> SymFunc {
    kschur_w(cache, &mu.to_weight(mu.len()), k)
}

/// Catalan functions memoised by indexed root ideal.
struct Memo {
    cache: VertexCache,
    table: HashMap<IndexedRootIdeal, SymFunc>,
}

impl Memo {
    fn new() -> Self {
        Memo { cache: VertexCache::new(), table: HashMap::new() }
    }

    fn h(&mut self, x: &IndexedRootIdeal) -> SymFunc {
        if let Some(f) = self.table.get(x) {
            return f.clone();
        }
        let f = catalan_chl(&mut self.cache, x);
        self.table.insert(x.clone(), f.clone());
        f
    }

    /// `sum_{S subset of v, |S| = d} H(Psi; gamma - e_S)`.
    fn lower(&mut self, d: usize, v: &[usize], x: &IndexedRootIdeal) -> SymFunc {
        let mut out = SymFunc::zero();
        for s in subsets(v.len()).into_iter().filter(|s| s.len() == d) {
            let mut g = x.gamma.clone();
            for i in s {
                g = g.bump(v[i - 1], -1);
            }
            out.add_assign(&self.h(&x.with_gamma(g)));
        }
        out
    }
}

/// `h_alpha` through repeated oracle Pieri products, memoised.
#[derive(Default)]
struct HOracle {
    times: HashMap<(usize, Partition), SymFunc>,
    products: HashMap<Vec<usize>, SymFunc>,
}

impl HOracle {
    fn product(&mut self, alpha: &[i64]) -> SymFunc {
        if alpha.iter().any(|&a| a < 0) {
            return SymFunc::zero();
        }
        let mut key: Vec<usize> = alpha.iter().filter(|&&a| a > 0).map(|&a| a as usize).collect();
        key.sort_unstable();
        self.sorted(&key)
    }

    fn sorted(&mut self, key: &[usize]) -> SymFunc {
        if key.is_empty() {
            return SymFunc::one();
        }
        if let Some(f) = self.products.get(key) {
            return f.clone();
        }
        let rest = self.sorted(&key[1..]);
        let mut out = SymFunc::zero();
        for (lam, c) in rest.terms() {
            let g = self
                .times
                .entry((key[0], lam.clone()))
                .or_insert_with(|| oracle::h_times_schur(key[0], lam))
                .clone();
            out.add_scaled(&g, c);
        }
        self.products.insert(key.to_vec(), out.clone());
        out
    }

    fn jacobi_trudi(&mut self, gamma: &[i64]) -> SymFunc {
        let n = gamma.len();
        let mut out = SymFunc::zero();
        for sigma in distinct_permutations(&(0..n).collect::<Vec<_>>()) {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| sigma[i] > sigma[j]).count();
            let alpha: Vec<i64> = (0..n).map(|i| gamma[i] + sigma[i] as i64 - i as i64).collect();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            out.add_scaled(&self.product(&alpha), &TPoly::constant(sign));
        }
        out
    }
}

// ----- symmetric functions -----

/// `size_max` caps the entries of `gamma` (default 6); lengths up to 4.
fn straighten_jt(r: &Ranges) -> Report {
    let mut rep = Report::new("straighten-jt");
    let hi = r.size(6) as i64;
    let mut h = HOracle::default();
    for ell in 1..=4 {
        for g in vectors_in_range(ell, -3, hi) {
            let jt = h.jacobi_trudi(&g.0);
            let ours = crate::symfunc::schur_of_weight(&g.0);
            rep.equal(&ours, &jt, || format!("s_{g}"));
        }
    }
    rep
}

/// `size_max` bounds `|lambda|` (default 6).
fn perp_adjoint(r: &Ranges) -> Report {
    let mut rep = Report::new("perp-adjoint");
    for lam in all_partitions_upto(r.size(6)) {
        let s = SymFunc::schur(lam.clone());
        for d in 0..=lam.size() {
            let (ep, hp) = (e_perp(d, &s), h_perp(d, &s));
            for mu in partitions_of(lam.size() - d) {
                let e_mult = oracle::e_times_schur(d, &mu).coeff(&lam);
                let h_mult = oracle::h_times_schur(d, &mu).coeff(&lam);
                rep.equal(&ep.coeff(&mu), &e_mult, || format!("<e_{d}^perp s_{lam}, s_{mu}>"));
                rep.equal(&hp.coeff(&mu), &h_mult, || format!("<h_{d}^perp s_{lam}, s_{mu}>"));
            }
        }
    }
    rep
}

/// `size_max` bounds `|lambda|` (default 6).
fn perp_commute(r: &Ranges) -> Report {
    let mut rep = Report::new("perp-commute");
    type Op = fn(usize, &SymFunc) -> SymFunc;
    let ops: [(&str, Op); 2] = [("e", e_perp), ("h", h_perp)];
    for lam in all_partitions_upto(r.size(6)) {
        let s = SymFunc::schur(lam.clone());
        for (na, a) in ops {
            for (nb, b) in ops {
                for d in 0..=3 {
                    for d2 in 0..=3 {
                        let x = a(d, &b(d2, &s));
                        let y = b(d2, &a(d, &s));
                        rep.equal(&x, &y, || format!("{na}_{d} {nb}_{d2} on s_{lam}"));
                    }
                }
            }
        }
    }
    rep
}

/// `size_max` bounds `|mu|` (default 6).
fn kostka(r: &Ranges) -> Report {
    let mut rep = Report::new("kostka");
    for n in 0..=r.size(6) {
        for mu in partitions_of(n) {
            let s = SymFunc::schur(mu.clone());
            for lam in partitions_of(n) {
                let k = oracle::kostka(&mu, lam.parts());
                let pair = hall_pair_h(&s, lam.parts());
                rep.equal(&pair, &TPoly::constant(k as i64), || format!("<s_{mu}, h_{lam}>"));
                let dom = dominance_leq(&lam.to_weight(n).0, &mu.to_weight(n).0).unwrap();
                rep.check(dom || k == 0, || format!("K_{mu},{lam} nonzero without dominance"));
            }
            rep.check(oracle::kostka(&mu, mu.parts()) == 1, || format!("K_{mu},{mu} != 1"));
        }
    }
    rep
}

/// `size_max` bounds `|lambda|` (default 8).
fn omega_suite(r: &Ranges) -> Report {
    let mut rep = Report::new("omega");
    for lam in all_partitions_upto(r.size(8)) {
        let s = SymFunc::schur(lam.clone());
        rep.equal(&omega(&omega(&s)), &s, || format!("omega^2 s_{lam}"));
        rep.equal(&omega(&s), &SymFunc::schur(lam.conjugate()), || format!("omega s_{lam}"));
        for d in 0..=3 {
            rep.equal(&omega(&e_perp(d, &s)), &h_perp(d, &omega(&s)), || format!("omega e_{d}^perp s_{lam}"));
        }
    }
    rep
}

// ----- vertex operators -----

/// `k_max` bounds `|m|, |n|` (default 4); `size_max` bounds `deg f` (default 5).
fn vertex_commutation(r: &Ranges) -> Report {
    let mut rep = Report::new("vertex-commutation");
    let b = r.k(4) as i64;
    let mut cache = VertexCache::new();
    for lam in all_partitions_upto(r.size(5)) {
        let f = SymFunc::schur(lam.clone());
        for m in -b..=b {
            for n in m + 1..=b {
                let (lhs, rhs) = crate::vertexops::commutation_sides(&mut cache, m, n, &f);
                rep.equal(&lhs, &rhs, || format!("B_{m} B_{n} s_{lam}"));
            }
        }
    }
    rep
}

/// `k_max` bounds `|m|` (default 3); `size_max` bounds `deg f` (default 5).
fn vertex_eperp(r: &Ranges) -> Report {
    let mut rep = Report::new("vertex-eperp");
    let b = r.k(3) as i64;
    let mut cache = VertexCache::new();
    for lam in all_partitions_upto(r.size(5)) {
        let f = SymFunc::schur(lam.clone());
        for m in -b..=b {
            for d in 0..=3 {
                let (lhs, rhs) = crate::vertexops::eperp_commutator_sides(&mut cache, d, m, &f);
                rep.equal(&lhs, &rhs, || format!("e_{d}^perp B_{m} s_{lam}"));
            }
        }
    }
    rep
}

/// `size_max` bounds `|mu|` (default 6).
fn chl_positive(r: &Ranges) -> Report {
    let mut rep = Report::new("chl-positive");
    let mut cache = VertexCache::new();
    for mu in all_partitions_upto(r.size(6)) {
        let h = cache.chl(&mu.to_weight(mu.len()).0);
        rep.check(h.is_schur_positive(), || format!("H_{mu} is not Schur positive: {h}"));
        let alpha: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
        rep.equal(&h.at_t_one(), &oracle::h_product(&alpha), || format!("H_{mu}(t=1)"));
    }
    rep
}

fn chl_negative_tail(_: &Ranges) -> Report {
    let mut rep = Report::new("chl-negative-tail");
    let mut cache = VertexCache::new();
    for len in 0..=3 {
        for g in vectors_in_range(len, -2, 3) {
            for m in -3..0 {
                let mut gamma = g.0.clone();
                gamma.push(m);
                let h = cache.chl(&gamma);
                rep.check(h.is_zero(), || format!("H_{gamma:?} = {h}"));
            }
        }
    }
    rep
}

/// `k_max` bounds the largest entry (default 3); lengths up to 3.
fn dominance_span(r: &Ranges) -> Report {
    let mut rep = Report::new("dominance-span");
    let mut cache = VertexCache::new();
    for k in 1..=r.k(3) {
        for ell in 1..=3 {
            for g in vectors_in_range(ell, -1, k as i64) {
                if g.0.iter().max() != Some(&(k as i64)) {
                    continue;
                }
                let h = cache.chl(&g.0);
                match hl_expand(&mut cache, &h, k, ell) {
                    Err(e) => rep.check(false, || format!("H_{g}: {e}")),
                    Ok(coeffs) => {
                        let mut back = SymFunc::zero();
                        for (lam, c) in &coeffs {
                            let dom = dominance_leq(&g.0, &lam.to_weight(ell).0).unwrap();
                            rep.check(dom, || format!("H_{g} uses H_{lam}, which does not dominate"));
                            back.add_scaled(&cache.chl(&lam.to_weight(ell).0), c);
                        }
                        rep.equal(&back, &h, || format!("H_{g} rebuilt"));
                    }
                }
            }
        }
    }
    rep
}

// ----- root ideals and Catalan functions -----

/// `size_max` bounds `ell` (default 4); entries in `-1..=3`.
fn evaluators(r: &Ranges) -> Report {
    let mut rep = Report::new("evaluators");
    let mut cache = VertexCache::new();
    for psi in ideals_upto(r.size(4)) {
        for g in vectors_in_range(psi.ell(), -1, 3) {
            let x = iri(&psi, g);
            let chl = catalan_chl(&mut cache, &x);
            rep.equal(&catalan_series(&x), &chl, || format!("series {:?} {}", psi.rowcounts(), x.gamma));
            rep.equal(&catalan_t1(&x), &chl.at_t_one(), || format!("t=1 {:?} {}", psi.rowcounts(), x.gamma));
            let mut flat = SymFunc::zero();
            for (w, c) in raise_over(&x.gamma, &psi.complement(), &TPoly::monomial(-1, 1)) {
                flat.add_scaled(&cache.chl(w.as_slice()), &c);
            }
            rep.equal(&flat, &chl, || format!("subset expansion {:?} {}", psi.rowcounts(), x.gamma));
        }
    }
    rep
}

fn recurrences(_: &Ranges) -> Report {
    let mut rep = Report::new("recurrences");
    let mut cache = VertexCache::new();
    for psi in all_root_ideals(3) {
        for g in vectors_in_range(3, 0, 2) {
            let x = iri(&psi, g);
            let h = catalan_chl(&mut cache, &x);
            for beta in psi.addable_roots() {
                let terms = expand_recurrence(&x, RecurrenceMode::Addable(beta)).unwrap();
                rep.equal(&subset_lower_sum(&mut cache, &terms), &h, || format!("add {beta:?} to {:?}", psi.rowcounts()));
            }
            for alpha in psi.removable_roots() {
                let terms = expand_recurrence(&x, RecurrenceMode::Removable(alpha)).unwrap();
                rep.equal(&subset_lower_sum(&mut cache, &terms), &h, || format!("remove {alpha:?} from {:?}", psi.rowcounts()));
            }
        }
    }
    let mus: Vec<Weight> = partitions_bounded_all(2, 4).into_iter().map(|p| p.to_weight(4)).collect();
    for psi in all_root_ideals(4).into_iter().filter(|p| p.len() <= 4) {
        for mu in &mus {
            let x = iri(&psi, mu.clone());
            let h = catalan_chl(&mut cache, &x);
            for m in 1..=4 {
                let terms = expand_recurrence(&x, RecurrenceMode::Downpath(m)).unwrap();
                rep.equal(&subset_lower_sum(&mut cache, &terms), &h, || {
                    format!("downpath {m} on {:?} {mu}", psi.rowcounts())
                });
            }
        }
    }
    rep
}

fn partitions_bounded_all(max_part: usize, max_len: usize) -> Vec<Partition> {
    crate::partition::partitions_in_box(max_part, max_len)
}

fn is_swap_invariant(psi: &RootIdeal, i: usize) -> bool {
    let s = |x: usize| if x == i { i + 1 } else if x == i + 1 { i } else { x };
    psi.roots().iter().all(|&(a, b)| {
        let (c, d) = (s(a), s(b));
        c < d && psi.contains(c, d)
    })
}

/// `size_max` bounds `ell` (default 4); entries in `-1..=3`.
fn sl2(r: &Ranges) -> Report {
    let mut rep = Report::new("sl2");
    let mut cache = VertexCache::new();
    for psi in ideals_upto(r.size(4)) {
        let ell = psi.ell();
        for i in 1..ell {
            if !is_swap_invariant(&psi, i) {
                continue;
            }
            for g in vectors_in_range(ell, -1, 3) {
                let mut swapped = g.0.clone();
                swapped.swap(i - 1, i);
                swapped[i - 1] -= 1;
                swapped[i] += 1;
                let a = catalan_chl(&mut cache, &iri(&psi, g.clone()));
                let b = catalan_chl(&mut cache, &iri(&psi, Weight(swapped)));
                rep.check(a.add(&b).is_zero(), || format!("tau_{i} on {:?} {g}", psi.rowcounts()));
            }
        }
    }
    rep
}

/// `size_max` bounds `ell` (default 4); entries in `0..=3`.
fn eperp_pushdown(r: &Ranges) -> Report {
    let mut rep = Report::new("eperp-pushdown");
    let mut cache = VertexCache::new();
    for psi in ideals_upto(r.size(4)) {
        let ell = psi.ell();
        let all = range(1, ell);
        for g in vectors_in_range(ell, 0, 3) {
            let x = iri(&psi, g);
            let h = catalan_chl(&mut cache, &x);
            for d in 0..=ell {
                let lowered = subset_lower(&mut cache, d, &all, &x);
                rep.equal(&e_perp(d, &h), &lowered, || format!("e_{d}^perp on {:?} {}", psi.rowcounts(), x.gamma));
            }
        }
    }
    rep
}

/// `size_max` bounds `ell` (default 4); entries in `-1..=3`.
fn trailing_zeros(r: &Ranges) -> Report {
    let mut rep = Report::new("trailing-zeros");
    let mut cache = VertexCache::new();
    for psi in ideals_upto(r.size(4)).filter(|p| p.ell() >= 2) {
        let ell = psi.ell();
        for g in vectors_in_range(ell - 1, -1, 3) {
            let mut full = g.0.clone();
            full.push(0);
            let a = catalan_chl(&mut cache, &iri(&psi, Weight(full)));
            let b = catalan_chl(&mut cache, &iri(&psi.truncate_last(), g.clone()));
            rep.equal(&a, &b, || format!("{:?} {g},0", psi.rowcounts()));
        }
    }
    rep
}

/// `size_max` bounds `ell` (default 5); entries in `0..=3`.
fn mirror(r: &Ranges) -> Report {
    let mut rep = Report::new("mirror");
    let mut memo = Memo::new();
    for psi in ideals_upto(r.size(5)).filter(|p| p.ell() >= 2) {
        let ell = psi.ell();
        let vs = subsets(ell);
        for g in vectors_in_range(ell, 0, 3) {
            let x = iri(&psi, g);
            for y in 1..ell {
                for w in y..ell {
                    for z in y..=w {
                        let outcome = mirror_predicates(&x, y, z, w, None);
                        if outcome == MirrorOutcome::NotApplicable {
                            continue;
                        }
                        let fits: Vec<&Vec<usize>> = vs
                            .iter()
                            .filter(|v| mirror_predicates(&x, y, z, w, Some(v)) == outcome)
                            .collect();
                        check_mirror(&mut rep, &mut memo, &x, &outcome, &fits, (y, z, w));
                    }
                }
            }
        }
    }
    rep
}

fn check_mirror(
    rep: &mut Report,
    memo: &mut Memo,
    x: &IndexedRootIdeal,
    outcome: &MirrorOutcome,
    vs: &[&Vec<usize>],
    (y, z, w): (usize, usize, usize),
) {
    let label = || format!("{:?} {} y={y} z={z} w={w}", x.psi.rowcounts(), x.gamma);
    match outcome {
        MirrorOutcome::Vanishes => {
            rep.check(memo.h(x).is_zero(), || format!("{} does not vanish", label()));
            for v in vs {
                for d in 0..=v.len() {
                    let s = memo.lower(d, v, x);
                    rep.check(s.is_zero(), || format!("{} lowered by {d} over {v:?} does not vanish", label()));
                }
            }
        }
        MirrorOutcome::RemovableInvariant { roots } => {
            let h = memo.h(x);
            for &alpha in roots {
                let smaller = x.with_psi(x.psi.without_root(alpha).expect("removable"));
                rep.equal(&memo.h(&smaller), &h, || format!("{} minus {alpha:?}", label()));
                for v in vs {
                    for d in 0..=v.len() {
                        let a = memo.lower(d, v, x);
                        let b = memo.lower(d, v, &smaller);
                        rep.equal(&a, &b, || format!("{} minus {alpha:?} lowered by {d} over {v:?}", label()));
                    }
                }
            }
        }
        MirrorOutcome::NotApplicable => {}
    }
}

// ----- cores -----

/// All `n`-cores found among partitions of size at most `max_cells`.
fn cores_upto(n: usize, max_cells: usize) -> Vec<Partition> {
    all_partitions_upto(max_cells)
        .into_iter()
        .filter(|p| oracle::is_core_by_hooks(p, n))
        .collect()
}

/// `k_max` bounds `k` (default 4); `size_max` bounds `|lambda|` (default 8).
fn core_bijection(r: &Ranges) -> Report {
    let mut rep = Report::new("core-bijection");
    let size = r.size(8);
    for k in 1..=r.k(4) {
        let mut max_core = 0;
        for lam in (0..=size).flat_map(|n| partitions_bounded(n, k, n)) {
            let core = to_core(&lam, k).unwrap();
            max_core = max_core.max(core.shape().size());
            rep.check(oracle::is_core_by_hooks(core.shape(), k + 1), || format!("core of {lam} (k={k}) is not a core"));
            rep.equal(&core.to_bounded(), &lam, || format!("round trip of {lam} (k={k})"));
            let (kappa, eta) = k_skew(&lam, k).unwrap();
            let rows: Vec<usize> = (0..kappa.len()).map(|i| kappa.part(i) - eta.part(i)).collect();
            rep.check(rows == lam.parts(), || format!("k-skew rows of {lam} (k={k})"));
        }
        for kappa in cores_upto(k + 1, max_core) {
            let bounded = oracle::small_hooks(&kappa, k + 1);
            if bounded > size {
                continue;
            }
            let core = Core::new(kappa.clone(), k + 1).unwrap();
            let back = to_core(&core.to_bounded(), k).unwrap();
            rep.equal(back.shape(), &kappa, || format!("core {kappa} (n={})", k + 1));
        }
    }
    rep
}

/// `k_max` bounds `k` (default 4); `size_max` bounds `|p(kappa)|` (default 8).
fn offsets(r: &Ranges) -> Report {
    let mut rep = Report::new("offsets");
    for k in 1..=r.k(4) {
        let n = k + 1;
        for lam in (0..=r.size(8)).flat_map(|s| partitions_bounded(s, k, s)) {
            let core = to_core(&lam, k).unwrap();
            let shape = core.shape();
            let edges = core.edges();
            let (lo, hi) = edges.window();
            let conj = shape.conjugate();
            // East steps sit at c - kappa'_c for columns c >= 1.
            let east = |i: i64| {
                i > conj.len() as i64 || (1..=conj.len()).any(|c| c as i64 - conj.part(c - 1) as i64 == i)
            };
            for i in lo..=hi {
                let d = edges.offset(i);
                rep.check((d >= 1) == !east(i), || format!("bit {i} of {shape} (n={n})"));
                rep.check(edges.offset(i - n as i64) == d + 1, || format!("shift at {i} of {shape} (n={n})"));
            }
            for z in 1..=shape.len() + 2 {
                let f = shape.part(z - 1) as i64 - z as i64 + 1;
                rep.check(edges.row_index(z) == f, || format!("row map {z} of {shape}"));
            }
        }
    }
    rep
}

/// `k_max` bounds `k` (default 4); `size_max` bounds `|p(kappa)|` (default 6).
fn cover_validity(r: &Ranges) -> Report {
    let mut rep = Report::new("cover-validity");
    for k in 1..=r.k(4) {
        for lam in (1..=r.size(6)).flat_map(|s| partitions_bounded(s, k, s)) {
            let kappa = to_core(&lam, k).unwrap();
            for c in strong_covers_below(&kappa) {
                let label = || format!("{} => {} (n={})", c.tau, kappa, k + 1);
                rep.check(c.tau.bounded_size() + 1 == kappa.bounded_size(), || format!("{} size", label()));
                let h = c.height();
                rep.check(c.components.iter().all(|x| x.height() == h), || format!("{} heights", label()));
                rep.check(c.components.iter().all(is_ribbon), || format!("{} not ribbons", label()));
                let heads = oracle::component_heads(kappa.shape(), c.tau.shape());
                rep.check(c.marks() == heads, || format!("{} marks", label()));
                rep.check(heads.last() == Some(&c.z), || format!("{} southwest row", label()));
            }
        }
    }
    rep
}

fn is_ribbon(c: &crate::cores::Component) -> bool {
    let cells: std::collections::BTreeSet<(usize, usize)> = c.cells.iter().copied().collect();
    !cells.iter().any(|&(r, col)| {
        cells.contains(&(r + 1, col)) && cells.contains(&(r, col + 1)) && cells.contains(&(r + 1, col + 1))
    })
}

/// `k_max` bounds `k` (default 4, from 3); `size_max` bounds `|p(kappa)|`
/// (default 6).
fn dictionary(r: &Ranges) -> Report {
    let mut rep = Report::new("dictionary");
    let kmax = r.k(4);
    for k in 3.min(kmax)..=kmax {
        let n = k + 1;
        for lam in (1..=r.size(6)).flat_map(|s| partitions_bounded(s, k, s)) {
            let ell = lam.len();
            let lw = lam.to_weight(ell);
            let kappa = to_core(&lam, k).unwrap();
            let phi = KWeight::new(lw.clone(), k).unwrap().delta_k();
            let mut brute: BTreeMap<usize, (Partition, Vec<usize>)> = BTreeMap::new();
            for (tau, heads) in oracle::strong_covers(kappa.shape(), n) {
                let z = *heads.last().expect("nonempty cover");
                let dup = brute.insert(z, (tau, heads)).is_some();
                rep.check(!dup, || format!("two covers of {kappa} share row {z}"));
            }
            let fast = strong_covers_below(&kappa);
            rep.check(fast.len() == brute.len(), || format!("cover count of {kappa}"));
            for z in 1..=ell {
                let label = || format!("{lam} (k={k}) z={z}");
                let cover = fast.iter().find(|c| c.z == z);
                let edge = kappa.edges().cover(z);
                rep.check(edge.as_ref() == brute.get(&z).map(|b| &b.0), || format!("{} cover_z vs brute force", label()));
                let cv = cvr(&lw, z, k).unwrap();
                rep.check(cv.is_partition == cover.is_some(), || format!("{} existence vs cvr", label()));
                let Some(cover) = cover else { continue };
                let p_tau = cover.tau.to_bounded().to_weight(ell);
                rep.equal(&p_tau, &cv.weight, || format!("{} p(cover) vs cvr", label()));
                let mut up = phi.uppath(z);
                up.sort_unstable();
                rep.check(cover.marks() == up, || format!("{} marks {:?} vs uppath {up:?}", label(), cover.marks()));
                for m in cover.marks() {
                    let b = phi.bounce(m, z);
                    let want = b.map(|b| b + cv.bounce);
                    rep.check(want == Some(cover.spin(m)), || format!("{} spin at mark {m}", label()));
                }
            }
        }
    }
    rep
}

// ----- k-Schur functions -----

/// `(mu, k)` with `mu` in `Par^k_3`, `1 <= k <= k_max`, `|mu| <= size_max`.
fn kschur_range(r: &Ranges, kd: usize, sd: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for k in 1..=r.k(kd) {
        for mu in par_k_ell(k, 3, r.size(sd)) {
            out.push((mu, k));
        }
    }
    out
}

/// `k_max` (default 3) and `size_max` (default 7) bound `k` and `|mu|`; `ell <= 3`, `d <= 3`.
fn pieri(r: &Ranges) -> Report {
    let mut rep = Report::new("pieri");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        let f = kschur_p(&mut cache, &mu, k);
        for d in 0..=3 {
            let v = vertical_pieri(&mu, k, d).unwrap().evaluate(&mut cache);
            rep.equal(&v, &e_perp(d, &f), || format!("e_{d}^perp s^({k})_{mu}"));
            let h = horizontal_pieri(&mu, k, d).unwrap().evaluate(&mut cache);
            rep.equal(&h, &h_perp(d, &f), || format!("h_{d}^perp s^({k})_{mu}"));
        }
    }
    rep
}

/// Same range as `pieri`, over every `ell` from `len(mu)` to 3.
fn shift_invariance(r: &Ranges) -> Report {
    let mut rep = Report::new("shift-invariance");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        let f = kschur_p(&mut cache, &mu, k);
        for ell in mu.len().max(1)..=3 {
            let shifted = Weight(mu.to_weight(ell).0.iter().map(|x| x + 1).collect());
            let g = kschur_w(&mut cache, &shifted, k + 1);
            rep.equal(&e_perp(ell, &g), &f, || format!("e_{ell}^perp s^({})_{shifted}", k + 1));
            let same = KWeight::new(mu.to_weight(ell), k).unwrap().delta_k()
                == KWeight::new(shifted.clone(), k + 1).unwrap().delta_k();
            rep.check(same, || format!("Delta^{k}({mu}) vs Delta^{}({shifted})", k + 1));
        }
    }
    rep
}

/// `size_max` bounds `|mu|` (default 7); `k` runs from `|mu|` to `|mu| + 1`.
fn stability(r: &Ranges) -> Report {
    let mut rep = Report::new("stability");
    let mut cache = VertexCache::new();
    for mu in all_partitions_upto(r.size(7)).into_iter().filter(|m| m.len() <= 4) {
        for k in mu.size().max(1)..=mu.size() + 1 {
            for ell in mu.len().max(1)..=4 {
                let f = kschur_w(&mut cache, &mu.to_weight(ell), k);
                rep.equal(&f, &SymFunc::schur(mu.clone()), || format!("s^({k})_{mu} with ell={ell}"));
            }
        }
    }
    rep
}

/// Same range as `pieri`; every partition and every reordering of it.
fn hall_pairing(r: &Ranges) -> Report {
    let mut rep = Report::new("hall-pairing");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        let f = kschur_p(&mut cache, &mu, k);
        for lam in partitions_of(mu.size()) {
            let pair = hall_pair_h(&f, lam.parts());
            for eta in distinct_permutations(lam.parts()) {
                let count = smt_weight_poly(&mu, k, &eta).unwrap();
                rep.equal(&count, &pair, || format!("<s^({k})_{mu}, h_{lam}> with eta={eta:?}"));
            }
        }
    }
    rep
}

/// `k_max` (default 4) bounds `k`, `size_max` (default 8) bounds `|lambda|`,
/// `ell <= 5`. Subset lowering is checked for `ell <= 4` and `|lambda| <= 6`.
fn straightening(r: &Ranges) -> Report {
    let mut rep = Report::new("straightening");
    let mut cache = VertexCache::new();
    let size = r.size(8);
    for k in 1..=r.k(4) {
        for lam in par_k_ell(k, 5, size) {
            for ell in lam.len().max(1)..=5 {
                let lw = lam.to_weight(ell);
                for z in 1..=lam.len() {
                    let mu = lw.bump(z, -1);
                    let kw = KWeight::new(mu.clone(), k).unwrap();
                    let label = || format!("s^({k})_{mu}");
                    let lhs = kschur(&mut cache, &kw);
                    let rhs = straighten(&lw, z, k).unwrap().evaluate(&mut cache);
                    rep.equal(&lhs, &rhs, label);
                    if ell > 4 || lam.size() > 6 {
                        continue;
                    }
                    let cv = cvr(&lw, z, k).unwrap();
                    let src = kw.indexed_ideal();
                    let dst = cv
                        .is_partition
                        .then(|| KWeight::new(cv.weight.clone(), k).unwrap().indexed_ideal());
                    let phi = KWeight::new(lw.clone(), k).unwrap().delta_k();
                    for m in phi.uppath(z) {
                        let v = range(1, m - 1);
                        rep.check(cv.admits_subset(&v), || format!("{} rejects [{}]", label(), m - 1));
                    }
                    for v in subsets(ell).into_iter().filter(|v| cv.admits_subset(v)) {
                        for d in 0..=v.len() {
                            let a = subset_lower(&mut cache, d, &v, &src);
                            let b = match &dst {
                                Some(x) => subset_lower(&mut cache, d, &v, x).scale(&TPoly::t_pow(cv.bounce)),
                                None => SymFunc::zero(),
                            };
                            rep.equal(&a, &b, || format!("{} lowered by {d} over {v:?}", label()));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// `k_max` (default 3) bounds `k`; `size_max` (default 7) bounds `|mu|`;
/// `ell <= 3`, `m <= 3`.
fn operator_algebra(r: &Ranges) -> Report {
    let mut rep = Report::new("operator-algebra");
    for (mu, k) in kschur_range(r, 3, 7) {
        let start = KExpansion::single(k, mu.clone(), TPoly::one()).unwrap();
        for m in 1..=3 {
            let mut total = KExpansion::zero(k);
            for i in 0..=m {
                let x = e_tilde(&h_tilde(&start, m - i).unwrap(), i).unwrap();
                let sign = if i % 2 == 0 { TPoly::one() } else { -TPoly::one() };
                total.add_scaled(&x, &sign).unwrap();
            }
            rep.check(total.is_zero(), || format!("m={m} on s^({k})_{mu}: {total}"));
        }
    }
    rep
}

/// `k_max` (default 3) and `size_max` (default 7); `ell` from `len(mu)` to 3.
fn schur_positivity(r: &Ranges) -> Report {
    let mut rep = Report::new("schur-positivity");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        let f = kschur_p(&mut cache, &mu, k);
        for ell in mu.len().max(1)..=3 {
            let g = schur_expand(&mu.to_weight(ell), k).unwrap();
            rep.check(g.is_schur_positive(), || format!("s^({k})_{mu} not positive"));
            rep.equal(&g, &f, || format!("s^({k})_{mu} with ell={ell}"));
        }
    }
    rep
}

/// `k_max` (default 3) and `size_max` (default 7); `ell` from `len(mu)` to 3.
fn branching(r: &Ranges) -> Report {
    let mut rep = Report::new("branching");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        let f = kschur_p(&mut cache, &mu, k);
        for ell in mu.len().max(1)..=3 {
            let b = branch(&mu.to_weight(ell), k).unwrap();
            rep.check(b.terms().all(|(_, c)| c.is_nonneg()), || format!("branch s^({k})_{mu}: {b}"));
            rep.equal(&b.evaluate(&mut cache), &f, || format!("branch s^({k})_{mu} with ell={ell}"));
        }
    }
    rep
}

/// `k_max` (default 3) and `size_max` (default 7); `ell <= 3`, `d <= 3`.
fn partial_restriction_suite(r: &Ranges) -> Report {
    let mut rep = Report::new("partial-restriction");
    let mut cache = VertexCache::new();
    for (mu, k) in kschur_range(r, 3, 7) {
        for ell in mu.len().max(1)..=3 {
            let kw = KWeight::new(mu.to_weight(ell), k).unwrap();
            let x = kw.indexed_ideal();
            let phi = kw.delta_k();
            for d in 0..=3 {
                for m in 1..=ell {
                    let label = || format!("s^({k})_{mu}, ell={ell}, d={d}, m={m}");
                    let lhs = partial_restriction(&mu, k, d, m).unwrap().evaluate(&mut cache);
                    let upto = range(1, m);
                    let below = range(1, m - 1);
                    let rhs = subset_lower(&mut cache, d, &upto, &x);
                    rep.equal(&lhs, &rhs, label);
                    let diff = last_mark_difference(&mu, k, d, m).unwrap().evaluate(&mut cache);
                    let l_dm = rhs.sub(&subset_lower(&mut cache, d, &below, &x));
                    rep.equal(&diff, &l_dm, || format!("{} last mark", label()));
                    if d == 1 && mu.part(m - 1) > 0 {
                        let lowered = catalan_chl(&mut cache, &x.with_gamma(x.gamma.bump(m, -1)));
                        rep.equal(&diff, &lowered, || format!("{} H(Phi; mu - e_m)", label()));
                        let mut via = SymFunc::zero();
                        for z in phi.downpath(m) {
                            let b = phi.bounce(m, z).unwrap();
                            let s = if x.gamma.at(z) > 0 {
                                straighten(&x.gamma, z, k).unwrap().evaluate(&mut cache)
                            } else {
                                kschur_w(&mut cache, &x.gamma.bump(z, -1), k)
                            };
                            via.add_scaled(&s, &TPoly::t_pow(b));
                        }
                        rep.equal(&diff, &via, || format!("{} downpath straightening", label()));
                    }
                }
            }
        }
    }
    rep
}

/// `k_max` is the single `k` (default 4); `size_max` bounds `ell` (default 5).
fn chen(r: &Ranges) -> Report {
    let mut rep = Report::new("chen");
    let mut cache = VertexCache::new();
    let k = r.k(4);
    for lam in crate::partition::partitions_in_box(k, r.size(5)) {
        if lam.is_empty() {
            continue;
        }
        let (kappa, eta) = k_skew(&lam, k).unwrap();
        rep.check(skew_linking_check(&kappa, &eta).unwrap(), || format!("k-skew of {lam} not skew-linking"));
        let phi = chen_ideal(&kappa, &eta).unwrap();
        let x = IndexedRootIdeal::new(phi, lam.to_weight(kappa.len())).unwrap();
        let a = catalan_chl(&mut cache, &x);
        let b = kschur_p(&mut cache, &lam, k);
        rep.equal(&a, &b, || format!("lambda={lam}, k={k}"));
    }
    rep
}

/// `k_max` bounds `k` (default 3, from 2); `ell = 3`.
fn basis(r: &Ranges) -> Report {
    let mut rep = Report::new("basis");
    let mut cache = VertexCache::new();
    let kmax = r.k(3);
    for k in 2.min(kmax)..=kmax {
        for mu in crate::partition::partitions_in_box(k, 3) {
            let f = kschur_p(&mut cache, &mu, k);
            match hl_expand(&mut cache, &f, k, 3) {
                Err(e) => rep.check(false, || format!("s^({k})_{mu}: {e}")),
                Ok(coeffs) => {
                    rep.check(coeffs.get(&mu) == Some(&TPoly::one()), || format!("s^({k})_{mu} diagonal"));
                    for lam in coeffs.keys() {
                        let dom = dominance_leq(&mu.to_weight(3).0, &lam.to_weight(3).0).unwrap();
                        rep.check(dom, || format!("s^({k})_{mu} uses H_{lam}"));
                    }
                    let h = cache.chl(&mu.to_weight(3).0);
                    let single = hl_expand(&mut cache, &h, k, 3).unwrap();
                    rep.check(single.len() == 1 && single.get(&mu) == Some(&TPoly::one()), || format!("H_{mu}"));
                }
            }
        }
    }
    rep
}
