//! Verifiers for the scalar (rational-valued) identities.
//!
//! Every `*_sides` function computes its two sides through separate loops
//! over separately built binomial rows; nothing flows from one side to the
//! other. Batched verifiers walk `r` downward so the suffix sums that appear
//! on both sides come out in linear total time per `n`, one suffix
//! accumulator per side.

use crate::arith::{binomial_row, padic_valuation, Int, Rat};
use crate::sequences::SequenceCache;

use super::{rat_report, valuation_report, IdentityId, IdentityReport, Params};

fn rat(i: i64) -> Rat {
    Rat::from_int(i)
}

fn inv(i: i64) -> Rat {
    Rat::new(1, i).expect("nonzero denominator")
}

/// 1/(a*b), widened so the product cannot wrap for any u32 inputs.
pub(super) fn inv2(a: u32, b: u32) -> Rat {
    Rat::new(1, Int::from(a as i128 * b as i128)).expect("nonzero denominator")
}

/// 1/(a*b*c), widened likewise.
pub(super) fn inv3(a: u32, b: u32, c: u32) -> Rat {
    Rat::new(1, Int::from(a as i128 * b as i128 * c as i128)).expect("nonzero denominator")
}

fn sign(k: u32) -> Rat {
    Rat::alternating(k as u64)
}

/// Row lookup under the out-of-range-zero convention, for indices like
/// `r - 2` at `r = 1`.
fn row_get(row: &[Int], idx: i64) -> Rat {
    if idx < 0 || idx as usize >= row.len() {
        Rat::zero()
    } else {
        Rat::from_int(row[idx as usize].clone())
    }
}

// ---- eq1: the central identity ------------------------------------------

pub(super) fn eq1_lhs(cache: &SequenceCache, n: u32) -> Rat {
    // sum_{r=1}^{n-1} ((-1)^r B_r / r) ( (1/n) sum_{l=r}^{n} (-1)^l C(n,l) H_{l-1}
    //                                    + 1/(r(n-r)) )
    let row = binomial_row(n as u64);
    let over_n = inv(n as i64);
    let mut inner = Rat::zero(); // suffix sum over l in [r, n]
    let mut total = Rat::zero();
    for r in (1..=n).rev() {
        inner += &(&sign(r) * &(&row_get(&row, r as i64) * cache.h1(r - 1)));
        if r < n {
            let b = cache.bernoulli(r);
            if b.is_zero() {
                continue;
            }
            let bracket =
                &(&inner * &over_n) + &inv2(r, n - r);
            total += &(&(&sign(r) * b) * &(&inv(r as i64) * &bracket));
        }
    }
    total
}

pub(super) fn eq1_rhs(cache: &SequenceCache, n: u32) -> Rat {
    let n_rat = rat(n as i64);
    cache.h2(n - 1) / &n_rat + cache.h1(n - 1) / &(&n_rat * &n_rat)
}

pub(super) fn eq1_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    rat_report(
        IdentityId::Eq1,
        Params::n(n),
        eq1_lhs(cache, n),
        eq1_rhs(cache, n),
        perturb,
    )
}

// ---- eq1 restated --------------------------------------------------------

fn eq1_restated_lhs(cache: &SequenceCache, n: u32) -> Rat {
    // sum_{r=1}^{n-1} (-1)^r (B_r/r) ( n/(r(n-r))
    //                                  - sum_{l=r}^{n-1} ((-1)^l / l) C(n-1,l)
    //                                  + (-1)^r C(n-1,r-1) H_{r-1} )
    if n < 2 {
        return Rat::zero();
    }
    let row = binomial_row(n as u64 - 1);
    let mut inner = Rat::zero(); // suffix sum over l in [r, n-1]
    let mut total = Rat::zero();
    for r in (1..=n - 1).rev() {
        inner += &(&sign(r) * &(&row_get(&row, r as i64) * &inv(r as i64)));
        let b = cache.bernoulli(r);
        if b.is_zero() {
            continue;
        }
        let bracket = &(&rat(n as i64) * &inv2(r, n - r)) - &inner
            + &(&sign(r) * &(&row_get(&row, r as i64 - 1) * cache.h1(r - 1)));
        total += &(&(&sign(r) * b) * &(&inv(r as i64) * &bracket));
    }
    total
}

fn eq1_restated_rhs(cache: &SequenceCache, n: u32) -> Rat {
    cache.h2(n - 1) + &(cache.h1(n - 1) * &inv(n as i64))
}

pub(super) fn eq1_restated_report(
    cache: &SequenceCache,
    n: u32,
    perturb: bool,
) -> IdentityReport {
    rat_report(
        IdentityId::Eq1Restated,
        Params::n(n),
        eq1_restated_lhs(cache, n),
        eq1_restated_rhs(cache, n),
        perturb,
    )
}

// ---- the two sum rewrites, batched over r --------------------------------

/// sum_{l=r}^{n} (-1)^l C(n,l) H_{l-1}
///   = - sum_{l=r}^{n-1} ((-1)^l / l) C(n-1,l) + (-1)^r C(n-1,r-1) H_{r-1}
pub(super) fn rewrite_h_batch(cache: &SequenceCache, n: u32, perturb: bool) -> Vec<IdentityReport> {
    debug_assert!(n >= 2);
    let row_n = binomial_row(n as u64);
    let mut lhs_suffix = Rat::zero();
    let mut lhs_values = Vec::with_capacity(n as usize);
    for r in (1..=n).rev() {
        lhs_suffix += &(&sign(r) * &(&row_get(&row_n, r as i64) * cache.h1(r - 1)));
        lhs_values.push(lhs_suffix.clone());
    }
    lhs_values.reverse(); // lhs_values[r-1] = sum over l in [r, n]

    let row_prev = binomial_row(n as u64 - 1);
    let mut rhs_suffix = Rat::zero();
    let mut rhs_values = Vec::with_capacity(n as usize);
    for r in (1..=n).rev() {
        if r < n {
            rhs_suffix += &(&sign(r) * &(&row_get(&row_prev, r as i64) * &inv(r as i64)));
        }
        let value =
            -&rhs_suffix + &(&sign(r) * &(&row_get(&row_prev, r as i64 - 1) * cache.h1(r - 1)));
        rhs_values.push(value);
    }
    rhs_values.reverse();

    lhs_values
        .into_iter()
        .zip(rhs_values)
        .enumerate()
        .map(|(i, (lhs, rhs))| {
            rat_report(
                IdentityId::RewriteH,
                Params::nr(n, i as u32 + 1),
                lhs,
                rhs,
                perturb,
            )
        })
        .collect()
}

/// sum_{l=r}^{n} ((-1)^l / l) C(n,l)
///   = sum_{l=r}^{n-1} ((-1)^l / l) C(n-1,l) + ((-1)^r / n) C(n-1,r-1)
pub(super) fn rewrite_l_batch(_cache: &SequenceCache, n: u32, perturb: bool) -> Vec<IdentityReport> {
    debug_assert!(n >= 2);
    let row_n = binomial_row(n as u64);
    let mut lhs_suffix = Rat::zero();
    let mut lhs_values = Vec::with_capacity(n as usize);
    for r in (1..=n).rev() {
        lhs_suffix += &(&sign(r) * &(&row_get(&row_n, r as i64) * &inv(r as i64)));
        lhs_values.push(lhs_suffix.clone());
    }
    lhs_values.reverse();

    let row_prev = binomial_row(n as u64 - 1);
    let over_n = inv(n as i64);
    let mut rhs_suffix = Rat::zero();
    let mut rhs_values = Vec::with_capacity(n as usize);
    for r in (1..=n).rev() {
        if r < n {
            rhs_suffix += &(&sign(r) * &(&row_get(&row_prev, r as i64) * &inv(r as i64)));
        }
        let value = &rhs_suffix + &(&sign(r) * &(&row_get(&row_prev, r as i64 - 1) * &over_n));
        rhs_values.push(value);
    }
    rhs_values.reverse();

    lhs_values
        .into_iter()
        .zip(rhs_values)
        .enumerate()
        .map(|(i, (lhs, rhs))| {
            rat_report(
                IdentityId::RewriteL,
                Params::nr(n, i as u32 + 1),
                lhs,
                rhs,
                perturb,
            )
        })
        .collect()
}

// ---- eq2 and eq3: the induction identities -------------------------------

fn eq2_lhs(cache: &SequenceCache, n: u32) -> Rat {
    let row_prev = binomial_row(n as u64 - 1);
    let mut first = Rat::zero();
    let mut second = Rat::zero();
    for r in 1..n {
        let b = cache.bernoulli(r);
        if b.is_zero() {
            continue;
        }
        first += &(&(b * &inv(r as i64)) * &(&row_get(&row_prev, r as i64 - 2) * cache.h1(r - 1)));
        second += &(&(&sign(r) * b)
            * &inv3(r, n + 1 - r, n - r));
    }
    let mut third = Rat::zero();
    let over_n = inv(n as i64);
    for r in 1..=n {
        let b = cache.bernoulli(r);
        if b.is_zero() {
            continue;
        }
        third += &(&(b * &inv(r as i64)) * &(&over_n * &row_get(&row_prev, r as i64 - 1)));
    }
    &(&first - &second) - &third
}

fn eq2_rhs(cache: &SequenceCache, n: u32) -> Rat {
    let n_i = n as i64;
    let n_sq = inv2(n, n);
    let bn = cache.bernoulli(n);
    let alt = sign(n);
    &n_sq + &(cache.h1(n) * &inv(n_i + 1))
        - &(cache.h1(n - 1) * &inv(n_i))
        - &(&(&alt * bn) * &n_sq)
        - &(&(&alt * bn) * &inv(n_i))
        - &(bn * cache.h1(n - 1))
}

pub(super) fn eq2_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    rat_report(
        IdentityId::Eq2,
        Params::n(n),
        eq2_lhs(cache, n),
        eq2_rhs(cache, n),
        perturb,
    )
}

pub(super) fn eq3_lhs(cache: &SequenceCache, n: u32) -> Rat {
    let row_prev = binomial_row(n as u64 - 1);
    let mut first = Rat::zero();
    let mut second = Rat::zero();
    for r in 1..n {
        let b = cache.bernoulli(r);
        if b.is_zero() {
            continue;
        }
        first += &(&(b * &inv(r as i64)) * &(&row_get(&row_prev, r as i64 - 2) * cache.h1(r - 1)));
        second += &(&(&sign(r) * b)
            * &inv3(r, n + 1 - r, n - r));
    }
    &first - &second
}

pub(super) fn eq3_rhs(cache: &SequenceCache, n: u32) -> Rat {
    let n_i = n as i64;
    let bn = cache.bernoulli(n);
    (cache.h1(n) * &inv(n_i + 1)) - &(cache.h1(n - 1) * &inv(n_i))
        - &(&(&sign(n) * bn) * &inv(n_i))
        - &(cache.h1(n - 1) * bn)
}

pub(super) fn eq3_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    rat_report(
        IdentityId::Eq3,
        Params::n(n),
        eq3_lhs(cache, n),
        eq3_rhs(cache, n),
        perturb,
    )
}

// ---- the binomial ratio identity -----------------------------------------

pub(super) fn ratio_one(n: u32, r: u32, perturb: bool) -> IdentityReport {
    debug_assert!(n >= 2 && (1..n).contains(&r));
    let row = binomial_row(n as u64 - 1);
    let n_rat = rat(n as i64);
    let lhs = &(&row_get(&row, r as i64 - 1) / &(&n_rat * &row_get(&row, r as i64)))
        - &(&row_get(&row, r as i64 - 2) / &(&n_rat * &row_get(&row, r as i64 - 1)));
    let rhs = inv2(n - r, n - r + 1);
    rat_report(IdentityId::Ratio, Params::nr(n, r), lhs, rhs, perturb)
}

pub(super) fn ratio_batch(n: u32, perturb: bool) -> Vec<IdentityReport> {
    (1..n).map(|r| ratio_one(n, r, perturb)).collect()
}

// ---- the alternating Bernoulli recurrence ---------------------------------

pub(super) fn alternating_recurrence_report(
    cache: &SequenceCache,
    n: u32,
    perturb: bool,
) -> IdentityReport {
    let lhs = &sign(n) * cache.bernoulli(n);
    let row = binomial_row(n as u64);
    let mut rhs = Rat::zero();
    for r in 0..=n {
        let b = cache.bernoulli(r);
        if !b.is_zero() {
            rhs += &(b * &row_get(&row, r as i64));
        }
    }
    rat_report(
        IdentityId::AltRecurrence,
        Params::n(n),
        lhs,
        rhs,
        perturb,
    )
}

// ---- p-integrality of eq1 at n = p ----------------------------------------

pub(super) fn p_integrality_report(
    cache: &SequenceCache,
    p: u64,
    perturb: bool,
) -> IdentityReport {
    let mut lhs = eq1_lhs(cache, p as u32);
    if perturb {
        // Corrupt the left side so it is guaranteed to lose p-integrality.
        let v = match padic_valuation(&lhs, p).expect("p is prime") {
            crate::arith::Valuation::Finite(v) => v.max(0),
            crate::arith::Valuation::Infinite => 0,
        };
        let mut penalty = Rat::one();
        for _ in 0..=v {
            penalty = penalty * inv(p as i64);
        }
        lhs = if lhs.is_zero() { penalty } else { lhs * penalty };
    }
    let rhs = eq1_rhs(cache, p as u32);
    valuation_report(
        IdentityId::PIntegralEq1,
        Params::p(p),
        p,
        padic_valuation(&lhs, p).expect("p is prime"),
        padic_valuation(&rhs, p).expect("p is prime"),
    )
}
