//! Cross-identity consistency checks.
//!
//! These re-derive one identity from another along the same route the
//! algebra takes, and demand exact agreement of both sides — a much
//! stronger cross-validation than checking each identity in isolation.

use crate::arith::Rat;
use crate::sequences::SequenceCache;

use super::scalar::inv3;
use super::{poly_ids, scalar, warm_for, IdentityId};

fn inv(i: i64) -> Rat {
    Rat::new(1, i).expect("nonzero denominator")
}

/// Substituting x = 0 into the master Bernoulli identity must reproduce both
/// sides of the scalar identity `eq3` exactly.
///
/// The slice of the left side carries two extra terms (r = n and r = n+1)
/// beyond eq3's sum; moving them across, together with the first sum of the
/// right side, leaves precisely eq3's two sides. The residual equality of
/// the right sides is where the vanishing of odd-index Bernoulli numbers
/// does its work — as exact rational arithmetic, not case analysis.
pub fn check_eq7_slice_matches_eq3(cache: &mut SequenceCache, n: u32) -> bool {
    assert!(n >= 1);
    warm_for(cache, IdentityId::Eq7, n);
    warm_for(cache, IdentityId::Eq3, n);
    let cache: &SequenceCache = cache;

    let (lhs7, rhs7) = poly_ids::eq7_sides(cache, n);
    let at_zero = Rat::zero();
    let x = lhs7.eval(&at_zero);
    let y = rhs7.eval(&at_zero);

    // The r = n and r = n+1 terms of the sliced left side.
    let n_i = n as i64;
    let transfer = &(&(&Rat::from_int(n_i - 1) * cache.bernoulli(n)) * cache.h1(n - 1))
        * &inv(n_i)
        + &(&(cache.bernoulli(n + 1) * cache.h1(n)) * &inv(n_i + 1));

    // The first sum of the sliced right side, sharing eq3's denominators
    // (n-r)(n-r+1) = (n+1-r)(n-r).
    let mut first_sum = Rat::zero();
    for r in 1..n {
        let b = cache.bernoulli(r);
        if !b.is_zero() {
            first_sum += &(&(&Rat::alternating(r as u64) * b)
                * &inv3(r, n - r, n - r + 1));
        }
    }

    let derived_lhs = &(&x - &transfer) - &first_sum;
    let derived_rhs = &(&y - &first_sum) - &transfer;
    derived_lhs == scalar::eq3_lhs(cache, n) && derived_rhs == scalar::eq3_rhs(cache, n)
}

/// Differentiating both sides of the bivariate lemma with respect to y and
/// evaluating at y = -1 must reproduce both sides of the master identity,
/// side for side, as exact univariate polynomials in x.
pub fn check_lemma4_derivative_matches_eq7(cache: &mut SequenceCache, n: u32) -> bool {
    assert!(n >= 1);
    warm_for(cache, IdentityId::Lemma4, n);
    warm_for(cache, IdentityId::Eq7, n);
    let cache: &SequenceCache = cache;

    let (lhs4, rhs4) = poly_ids::lemma4_sides(cache, n);
    let minus_one = -Rat::one();
    let sliced_lhs = lhs4
        .derivative("y")
        .expect("y is an indeterminate of the lemma")
        .eval_partial("y", &minus_one)
        .expect("y is an indeterminate of the lemma");
    let sliced_rhs = rhs4
        .derivative("y")
        .expect("y is an indeterminate of the lemma")
        .eval_partial("y", &minus_one)
        .expect("y is an indeterminate of the lemma");

    let (lhs7, rhs7) = poly_ids::eq7_sides(cache, n);
    sliced_lhs == lhs7 && sliced_rhs == rhs7
}
