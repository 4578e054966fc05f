//! The identity verification suite.
//!
//! Each identity is an exact equality between two sides computed by
//! structurally independent code paths: no bracket or partial sum computed
//! for one side is reused on the other, so a shared bug cannot cancel out of
//! the comparison. The shared vocabulary is only the primitive producers
//! (Bernoulli/Euler/harmonic values, binomial rows and polynomials) from
//! [`SequenceCache`].
//!
//! Scalar identities compare [`Rat`] values, the master identities compare
//! univariate polynomials coefficient-wise, and the lemma-level identities
//! compare sparse bivariate polynomials coefficient-wise — never by point
//! sampling. Every mismatching report carries a witness naming the first
//! differing value or monomial.

mod consistency;
mod poly_ids;
mod scalar;
#[cfg(test)]
mod tests;

pub use consistency::{check_eq7_slice_matches_eq3, check_lemma4_derivative_matches_eq7};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::arith::{is_prime, primes_below, Rat, Valuation};
use crate::par::map_items;
use crate::poly::{BiPoly, UniPoly};
use crate::sequences::SequenceCache;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameter n must be at least {min}, got {got}")]
    BadN { min: u32, got: u32 },
    #[error("parameter r must lie in [{lo}, {hi}], got {got}")]
    BadR { lo: u32, hi: u32, got: u32 },
    #[error("p must be a prime >= 5, got {0}")]
    BadPrime(u64),
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
}

/// Every identity the suite can check. The declaration order is the
/// canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Eq1,
    Eq1Restated,
    RewriteH,
    RewriteL,
    Eq2,
    Eq3,
    Lemma4,
    Eq5,
    Eq6,
    DerivFacts,
    Ratio,
    Eq7,
    Eq8,
    AltRecurrence,
    PIntegralEq1,
}

pub const ALL_IDENTITIES: [IdentityId; 15] = [
    IdentityId::Eq1,
    IdentityId::Eq1Restated,
    IdentityId::RewriteH,
    IdentityId::RewriteL,
    IdentityId::Eq2,
    IdentityId::Eq3,
    IdentityId::Lemma4,
    IdentityId::Eq5,
    IdentityId::Eq6,
    IdentityId::DerivFacts,
    IdentityId::Ratio,
    IdentityId::Eq7,
    IdentityId::Eq8,
    IdentityId::AltRecurrence,
    IdentityId::PIntegralEq1,
];

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq1Restated => "eq1-restated",
            IdentityId::RewriteH => "rewrite-h",
            IdentityId::RewriteL => "rewrite-l",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Lemma4 => "lemma4",
            IdentityId::Eq5 => "eq5",
            IdentityId::Eq6 => "eq6",
            IdentityId::DerivFacts => "deriv-facts",
            IdentityId::Ratio => "ratio",
            IdentityId::Eq7 => "eq7",
            IdentityId::Eq8 => "eq8",
            IdentityId::AltRecurrence => "recurrence",
            IdentityId::PIntegralEq1 => "pintegral",
        }
    }

    /// Default sweep bound used when the caller does not pin one: the scalar
    /// identities run to 200, the master polynomial identities to 60, the
    /// bivariate lemma identities to 40 and the double-parameter one to 30.
    pub fn default_bound(&self) -> u32 {
        match self {
            IdentityId::Eq7 | IdentityId::Eq8 => 60,
            IdentityId::Lemma4 | IdentityId::Eq5 => 40,
            IdentityId::Eq6 => 30,
            _ => 200,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_IDENTITIES
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| ParamError::UnknownId(s.to_owned()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// The parameter tuple of one report. Identities use the subset of fields
/// that applies to them; unset fields are omitted from serialized output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl Params {
    pub fn n(n: u32) -> Self {
        Params {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn nr(n: u32, r: u32) -> Self {
        Params {
            n: Some(n),
            r: Some(r),
            ..Default::default()
        }
    }

    pub fn nd(n: u32, d: u32) -> Self {
        Params {
            n: Some(n),
            d: Some(d),
            ..Default::default()
        }
    }

    pub fn p(p: u64) -> Self {
        Params {
            p: Some(p),
            ..Default::default()
        }
    }

    fn sort_key(&self) -> (u64, u64, u64) {
        let primary = self.n.map(u64::from).or(self.p).unwrap_or(0);
        (
            primary,
            self.r.map(u64::from).unwrap_or(0),
            self.d.map(u64::from).unwrap_or(0),
        )
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields = [
            ("n", self.n.map(u64::from)),
            ("r", self.r.map(u64::from)),
            ("d", self.d.map(u64::from)),
            ("p", self.p),
        ];
        let mut first = true;
        for (name, value) in fields {
            if let Some(v) = value {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Structured verdict for one identity instance.
///
/// `lhs` and `rhs` are the canonical renderings of the two computed sides.
/// For the equation identities `equal` means the canonical forms are
/// structurally identical; for the p-integrality check it means both
/// valuations are nonnegative. `witness` is empty exactly when `equal`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub witness: String,
}

/// Aggregated result of a suite run. Reports are ordered by
/// `(identity, n, r, d)` regardless of the execution schedule.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub reports: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn all_equal(&self) -> bool {
        self.reports.iter().all(|r| r.equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.equal)
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

impl Serialize for SuiteReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SuiteReport", 2)?;
        st.serialize_field("reports", &self.reports)?;
        st.serialize_field(
            "summary",
            &Summary {
                total: self.reports.len(),
                failed: self.mismatches().count(),
                all_equal: self.all_equal(),
            },
        )?;
        st.end()
    }
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    failed: usize,
    all_equal: bool,
}

/// Options for [`run_suite`].
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Sweep bound for every selected identity; `None` applies each
    /// identity's [`IdentityId::default_bound`]. For `pintegral` the bound is
    /// exclusive (all primes `5 <= p < bound`); everywhere else inclusive.
    pub n_max: Option<u32>,
    /// Overrides the `d` grid of `eq6`; the default grid is `0..=3`.
    pub d_values: Option<Vec<u32>>,
    /// Testing hook: corrupt the left side of the named identity before
    /// comparison, to exercise the mismatch reporting path.
    pub perturb: Option<IdentityId>,
}

enum WorkItem {
    Single(IdentityId, Params),
    /// One batch computes all `r` for a fixed `n`; suffix sums make that
    /// linear instead of quadratic in `n`.
    Batch(IdentityId, u32),
}

fn grid(id: IdentityId, bound: u32, d_values: &[u32]) -> Vec<WorkItem> {
    use IdentityId::*;
    match id {
        Eq1 | Eq1Restated | Eq2 | Eq3 | Lemma4 | Eq5 | Eq7 | Eq8 => (1..=bound)
            .map(|n| WorkItem::Single(id, Params::n(n)))
            .collect(),
        Eq6 => (0..=bound)
            .flat_map(|n| {
                d_values
                    .iter()
                    .map(move |&d| WorkItem::Single(id, Params::nd(n, d)))
            })
            .collect(),
        RewriteH | RewriteL | Ratio | DerivFacts => {
            let lo = if id == DerivFacts { 1 } else { 2 };
            (lo..=bound).map(|n| WorkItem::Batch(id, n)).collect()
        }
        AltRecurrence => (0..=bound)
            .map(|n| WorkItem::Single(id, Params::n(n)))
            .collect(),
        PIntegralEq1 => primes_below(bound as u64)
            .into_iter()
            .filter(|&p| p >= 5)
            .map(|p| WorkItem::Single(id, Params::p(p)))
            .collect(),
    }
}

fn warm_for(cache: &mut SequenceCache, id: IdentityId, bound: u32) {
    use IdentityId::*;
    match id {
        Eq1 | Eq1Restated | Eq2 | Eq3 => {
            cache.ensure_bernoulli(bound);
            cache.ensure_harmonic(bound);
        }
        RewriteH | RewriteL => cache.ensure_harmonic(bound),
        Ratio => {}
        Lemma4 => {
            cache.ensure_bernoulli_polys(bound + 1);
            cache.ensure_binom_polys(bound);
            cache.ensure_quotient_polys(bound.max(1));
        }
        Eq5 => {
            cache.ensure_binom_polys(bound);
            cache.ensure_quotient_polys(bound.max(1));
        }
        // Callers fold the largest d offset into the bound.
        Eq6 => cache.ensure_binom_polys(bound),
        DerivFacts => {
            cache.ensure_binom_polys(bound);
            cache.ensure_quotient_polys(bound.max(1));
            cache.ensure_harmonic(bound);
        }
        Eq7 => {
            cache.ensure_bernoulli_polys(bound + 1);
            cache.ensure_harmonic(bound);
        }
        Eq8 => {
            cache.ensure_euler_polys(bound + 1);
            cache.ensure_harmonic(bound);
        }
        AltRecurrence => cache.ensure_bernoulli(bound),
        PIntegralEq1 => {
            cache.ensure_bernoulli(bound);
            cache.ensure_harmonic(bound);
        }
    }
}

fn execute(cache: &SequenceCache, item: &WorkItem, perturb: Option<IdentityId>) -> Vec<IdentityReport> {
    use IdentityId::*;
    match *item {
        WorkItem::Single(id, params) => {
            let poke = perturb == Some(id);
            let report = match id {
                Eq1 => scalar::eq1_report(cache, params.n.expect("n"), poke),
                Eq1Restated => scalar::eq1_restated_report(cache, params.n.expect("n"), poke),
                Eq2 => scalar::eq2_report(cache, params.n.expect("n"), poke),
                Eq3 => scalar::eq3_report(cache, params.n.expect("n"), poke),
                Lemma4 => poly_ids::lemma4_report(cache, params.n.expect("n"), poke),
                Eq5 => poly_ids::eq5_report(cache, params.n.expect("n"), poke),
                Eq6 => poly_ids::eq6_report(
                    cache,
                    params.n.expect("n"),
                    params.d.expect("d"),
                    poke,
                ),
                Eq7 => poly_ids::eq7_report(cache, params.n.expect("n"), poke),
                Eq8 => poly_ids::eq8_report(cache, params.n.expect("n"), poke),
                AltRecurrence => scalar::alternating_recurrence_report(cache, params.n.expect("n"), poke),
                PIntegralEq1 => scalar::p_integrality_report(cache, params.p.expect("p"), poke),
                RewriteH | RewriteL | Ratio | DerivFacts => unreachable!("batched identities"),
            };
            vec![report]
        }
        WorkItem::Batch(id, n) => {
            let poke = perturb == Some(id);
            match id {
                RewriteH => scalar::rewrite_h_batch(cache, n, poke),
                RewriteL => scalar::rewrite_l_batch(cache, n, poke),
                Ratio => scalar::ratio_batch(n, poke),
                DerivFacts => poly_ids::deriv_facts_batch(cache, n, poke),
                _ => unreachable!("only per-r identities are batched"),
            }
        }
    }
}

/// Runs every selected identity over its full parameter grid and aggregates
/// the reports. Individual failures are collected, never short-circuited.
///
/// The cache is warmed up front; the sweep itself only reads it, so grid
/// items are verified in parallel when the `parallel` feature is enabled.
pub fn run_suite(
    cache: &mut SequenceCache,
    ids: &[IdentityId],
    options: &SuiteOptions,
) -> SuiteReport {
    let mut ids: Vec<IdentityId> = ids.to_vec();
    ids.sort();
    ids.dedup();

    let default_d: Vec<u32> = vec![0, 1, 2, 3];
    let d_values = options.d_values.as_deref().unwrap_or(&default_d);

    let mut items = Vec::new();
    for &id in &ids {
        let bound = options.n_max.unwrap_or_else(|| id.default_bound());
        let warm_bound = if id == IdentityId::Eq6 {
            bound + d_values.iter().copied().max().unwrap_or(0)
        } else {
            bound
        };
        warm_for(cache, id, warm_bound);
        items.extend(grid(id, bound, d_values));
    }

    let shared: &SequenceCache = cache;
    let perturb = options.perturb;
    let mut reports: Vec<IdentityReport> = map_items(items, |item| execute(shared, &item, perturb))
        .into_iter()
        .flatten()
        .collect();
    reports.sort_by_key(|r| (r.id, r.params.sort_key()));
    SuiteReport { reports }
}

// ---- report builders shared by the verifiers ---------------------------

fn render_witness_rat(lhs: &Rat, rhs: &Rat) -> String {
    format!("sides differ by lhs - rhs = {}", lhs - rhs)
}

pub(crate) fn rat_report(
    id: IdentityId,
    params: Params,
    mut lhs: Rat,
    rhs: Rat,
    perturb: bool,
) -> IdentityReport {
    if perturb {
        lhs += Rat::one();
    }
    let equal = lhs == rhs;
    IdentityReport {
        id,
        params,
        witness: if equal {
            String::new()
        } else {
            render_witness_rat(&lhs, &rhs)
        },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        equal,
    }
}

pub(crate) fn poly_report(
    id: IdentityId,
    params: Params,
    mut lhs: UniPoly,
    rhs: UniPoly,
    perturb: bool,
) -> IdentityReport {
    if perturb {
        lhs = lhs
            .checked_add(&UniPoly::one(lhs.var().to_owned()))
            .expect("same ring");
    }
    let diff = crate::poly::first_coeff_diff(&lhs, &rhs);
    let equal = diff.is_none();
    IdentityReport {
        id,
        params,
        witness: match diff {
            None => String::new(),
            Some((k, a, b)) => {
                format!("coefficient of {}^{k} differs: lhs {a}, rhs {b}", lhs.var())
            }
        },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        equal,
    }
}

pub(crate) fn bipoly_report(
    id: IdentityId,
    params: Params,
    mut lhs: BiPoly,
    rhs: BiPoly,
    perturb: bool,
) -> IdentityReport {
    if perturb {
        lhs.add_term(0, 0, Rat::one());
    }
    let diff = crate::poly::first_term_diff(&lhs, &rhs);
    let equal = diff.is_none();
    let (v1, v2) = {
        let (a, b) = lhs.vars();
        (a.to_owned(), b.to_owned())
    };
    IdentityReport {
        id,
        params,
        witness: match diff {
            None => String::new(),
            Some(((i, j), a, b)) => format!(
                "coefficient of {v1}^{i} {v2}^{j} differs: lhs {a}, rhs {b}"
            ),
        },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        equal,
    }
}

/// Report over a list of labelled scalar facts checked pairwise.
pub(crate) fn facts_report(
    id: IdentityId,
    params: Params,
    mut lhs: Vec<(&'static str, Rat)>,
    rhs: Vec<(&'static str, Rat)>,
    perturb: bool,
) -> IdentityReport {
    debug_assert_eq!(lhs.len(), rhs.len());
    if perturb {
        if let Some((_, v)) = lhs.first_mut() {
            *v += Rat::one();
        }
    }
    let witness = lhs
        .iter()
        .zip(&rhs)
        .find(|((_, a), (_, b))| a != b)
        .map(|((label, a), (_, b))| format!("{label} differs: lhs {a}, rhs {b}"))
        .unwrap_or_default();
    let render = |side: &[(&'static str, Rat)]| {
        side.iter()
            .map(|(label, v)| format!("{label} = {v}"))
            .collect::<Vec<_>>()
            .join("; ")
    };
    IdentityReport {
        id,
        params,
        lhs: render(&lhs),
        rhs: render(&rhs),
        equal: witness.is_empty(),
        witness,
    }
}

pub(crate) fn valuation_report(
    id: IdentityId,
    params: Params,
    p: u64,
    lhs: Valuation,
    rhs: Valuation,
) -> IdentityReport {
    let equal = lhs.is_nonnegative() && rhs.is_nonnegative();
    let witness = if equal {
        String::new()
    } else {
        let side = if lhs.is_nonnegative() { "right" } else { "left" };
        let v = if lhs.is_nonnegative() { rhs } else { lhs };
        format!("{side} side is not {p}-integral: valuation {v} < 0")
    };
    IdentityReport {
        id,
        params,
        lhs: format!("v_{p} = {lhs}"),
        rhs: format!("v_{p} = {rhs}"),
        equal,
        witness,
    }
}

// ---- public single-instance verifiers ----------------------------------

fn need_n(n: u32, min: u32) -> Result<(), ParamError> {
    if n < min {
        return Err(ParamError::BadN { min, got: n });
    }
    Ok(())
}

fn need_r(r: u32, lo: u32, hi: u32) -> Result<(), ParamError> {
    if r < lo || r > hi {
        return Err(ParamError::BadR { lo, hi, got: r });
    }
    Ok(())
}

/// The central Bernoulli-number identity over the double sum.
pub fn verify_eq1(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq1, n);
    Ok(scalar::eq1_report(cache, n, false))
}

/// The equivalent restatement of the central identity.
pub fn verify_eq1_restated(
    cache: &mut SequenceCache,
    n: u32,
) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq1Restated, n);
    Ok(scalar::eq1_restated_report(cache, n, false))
}

/// The harmonic-weighted sum rewrite used to restate the central identity.
pub fn verify_rewrite_h(
    cache: &mut SequenceCache,
    n: u32,
    r: u32,
) -> Result<IdentityReport, ParamError> {
    need_n(n, 2)?;
    need_r(r, 1, n)?;
    warm_for(cache, IdentityId::RewriteH, n);
    let reports = scalar::rewrite_h_batch(cache, n, false);
    Ok(reports.into_iter().nth(r as usize - 1).expect("r in range"))
}

/// The 1/l-weighted sum rewrite.
pub fn verify_rewrite_l(
    cache: &mut SequenceCache,
    n: u32,
    r: u32,
) -> Result<IdentityReport, ParamError> {
    need_n(n, 2)?;
    need_r(r, 1, n)?;
    warm_for(cache, IdentityId::RewriteL, n);
    let reports = scalar::rewrite_l_batch(cache, n, false);
    Ok(reports.into_iter().nth(r as usize - 1).expect("r in range"))
}

/// The induction target identity.
pub fn verify_eq2(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq2, n);
    Ok(scalar::eq2_report(cache, n, false))
}

/// The reduced induction target identity.
pub fn verify_eq3(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq3, n);
    Ok(scalar::eq3_report(cache, n, false))
}

/// The bivariate lemma behind the master identities.
pub fn verify_lemma4(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Lemma4, n);
    Ok(poly_ids::lemma4_report(cache, n, false))
}

/// The power-sum form of the lemma.
pub fn verify_eq5(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq5, n);
    Ok(poly_ids::eq5_report(cache, n, false))
}

/// The Vandermonde-style rebasing identity, with free offset `d`.
pub fn verify_eq6(
    cache: &mut SequenceCache,
    n: u32,
    d: u32,
) -> Result<IdentityReport, ParamError> {
    cache.ensure_binom_polys(n + d);
    Ok(poly_ids::eq6_report(cache, n, d, false))
}

/// The three derivative evaluations at y = -1.
pub fn verify_derivative_facts(
    cache: &mut SequenceCache,
    n: u32,
    r: u32,
) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    need_r(r, 1, n)?;
    warm_for(cache, IdentityId::DerivFacts, n);
    Ok(poly_ids::deriv_facts_one(cache, n, r, false))
}

/// The binomial ratio difference identity.
pub fn verify_ratio_identity(n: u32, r: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 2)?;
    need_r(r, 1, n - 1)?;
    Ok(scalar::ratio_one(n, r, false))
}

/// The master Bernoulli polynomial identity.
pub fn verify_eq7(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq7, n);
    Ok(poly_ids::eq7_report(cache, n, false))
}

/// The Euler polynomial analogue of the master identity.
pub fn verify_eq8(cache: &mut SequenceCache, n: u32) -> Result<IdentityReport, ParamError> {
    need_n(n, 1)?;
    warm_for(cache, IdentityId::Eq8, n);
    Ok(poly_ids::eq8_report(cache, n, false))
}

/// The alternating Bernoulli recurrence, checked as a theorem.
pub fn verify_alternating_recurrence(
    cache: &mut SequenceCache,
    n: u32,
) -> Result<IdentityReport, ParamError> {
    warm_for(cache, IdentityId::AltRecurrence, n);
    Ok(scalar::alternating_recurrence_report(cache, n, false))
}

/// p-integrality of both sides of the central identity at n = p.
pub fn p_integrality_eq1(
    cache: &mut SequenceCache,
    p: u64,
) -> Result<IdentityReport, ParamError> {
    let small_p = u32::try_from(p).map_err(|_| ParamError::BadPrime(p))?;
    if p < 5 || !is_prime(p) {
        return Err(ParamError::BadPrime(p));
    }
    warm_for(cache, IdentityId::PIntegralEq1, small_p);
    Ok(scalar::p_integrality_report(cache, p, false))
}
