//! Verifiers for the polynomial-valued identities: the bivariate lemma and
//! its helpers, the two master identities, and the derivative facts.
//!
//! Bivariate identities are decided by exact coefficient-wise equality of
//! sparse polynomials in (x, y); point sampling appears only in property
//! tests as a sanity cross-check, never as the equality criterion.

use crate::arith::{binomial_row, Int, Rat};
use crate::poly::{BiPoly, UniPoly};
use crate::sequences::SequenceCache;

use super::scalar::{inv2, inv3};
use super::{bipoly_report, facts_report, poly_report, IdentityId, IdentityReport, Params};

fn rat(i: i64) -> Rat {
    Rat::from_int(i)
}

fn inv(i: i64) -> Rat {
    Rat::new(1, i).expect("nonzero denominator")
}

fn sign(k: u32) -> Rat {
    Rat::alternating(k as u64)
}

fn row_rat(row: &[Int], idx: i64) -> Rat {
    if idx < 0 || idx as usize >= row.len() {
        Rat::zero()
    } else {
        Rat::from_int(row[idx as usize].clone())
    }
}

fn accumulate(acc: &mut BiPoly, term: BiPoly) {
    for (&(i, j), c) in term.terms() {
        acc.add_term(i, j, c.clone());
    }
}

/// C(y + c, k) as a polynomial in y, built as the integer product
/// `(y+c)(y+c-1)...(y+c-k+1)` over `k!`. Equivalent to shifting the cached
/// binomial polynomial, but the product form stays in integer arithmetic
/// until one exact division per coefficient at the end, which keeps the
/// bivariate sweeps fast.
pub(super) fn shifted_binom(k: u32, c: u32) -> UniPoly {
    let mut ints = vec![Int::from(1)];
    let mut factorial = Int::from(1);
    for i in 0..k {
        let a = Int::from(c as i64 - i as i64);
        let mut next = vec![Int::from(0); ints.len() + 1];
        for (j, v) in ints.iter().enumerate() {
            next[j + 1] += v;
            next[j] += v * &a;
        }
        ints = next;
        factorial *= Int::from(i + 1);
    }
    UniPoly::new(
        "y",
        ints.into_iter()
            .map(|v| Rat::new(v, factorial.clone()).expect("k! > 0"))
            .collect(),
    )
}

// ---- lemma (4) -------------------------------------------------------------

pub(super) fn lemma4_sides(cache: &SequenceCache, n: u32) -> (BiPoly, BiPoly) {
    let row = binomial_row(n as u64 - 1);
    // lhs: sum_{r=2}^{n+1} ((-1)^r / r) C(n-1, r-2) B_r(x) C(y, r-1)
    let mut lhs = BiPoly::zero("x", "y");
    for r in 2..=n + 1 {
        let scalar = &(&sign(r) * &inv(r as i64)) * &row_rat(&row, r as i64 - 2);
        if scalar.is_zero() {
            continue;
        }
        let xp = cache.bpoly(r).scale(&scalar);
        let term = BiPoly::tensor(&xp, cache.cpoly(r - 1)).expect("distinct vars");
        accumulate(&mut lhs, term);
    }

    // rhs: sum_{r=1}^{n} C(n-1, r-1) (B_{r+1}(-x)/(r+1) + B_r(-x)/r) C(y+n-r, n)
    //      + Q_n(y)
    let row2 = binomial_row(n as u64 - 1);
    let mut rhs = BiPoly::zero("x", "y");
    for r in 1..=n {
        let c = row_rat(&row2, r as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let bracket = cache
            .bpoly_neg(r + 1)
            .scale(&inv(r as i64 + 1))
            .checked_add(&cache.bpoly_neg(r).scale(&inv(r as i64)))
            .expect("same ring");
        let yp = shifted_binom(n, n - r);
        let term = BiPoly::tensor(&bracket.scale(&c), &yp).expect("distinct vars");
        accumulate(&mut rhs, term);
    }
    let quotient_term =
        BiPoly::tensor(&UniPoly::one("x"), cache.quotient(n)).expect("distinct vars");
    accumulate(&mut rhs, quotient_term);

    (lhs, rhs)
}

pub(super) fn lemma4_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = lemma4_sides(cache, n);
    bipoly_report(IdentityId::Lemma4, Params::n(n), lhs, rhs, perturb)
}

// ---- eq (5) ----------------------------------------------------------------

pub(super) fn eq5_sides(cache: &SequenceCache, n: u32) -> (BiPoly, BiPoly) {
    let row = binomial_row(n as u64 - 1);
    // lhs: sum_{r=2}^{n+1} (x^r / r) C(n-1, r-2) C(y, r-1)
    let mut lhs = BiPoly::zero("x", "y");
    for r in 2..=n + 1 {
        let scalar = &inv(r as i64) * &row_rat(&row, r as i64 - 2);
        if scalar.is_zero() {
            continue;
        }
        let xp = UniPoly::monomial("x", scalar, r as usize);
        accumulate(&mut lhs, BiPoly::tensor(&xp, cache.cpoly(r - 1)).expect("distinct vars"));
    }

    // rhs: Q_n(y) + sum_{r=1}^{n} C(n-1, r-1)
    //         ((x-1)^{r+1}/(r+1) + (x-1)^r/r) C(y+n-r, n)
    let row2 = binomial_row(n as u64 - 1);
    let mut rhs = BiPoly::zero("x", "y");
    accumulate(
        &mut rhs,
        BiPoly::tensor(&UniPoly::one("x"), cache.quotient(n)).expect("distinct vars"),
    );
    let x_minus_one = UniPoly::new("x", vec![-Rat::one(), Rat::one()]);
    let mut power = x_minus_one.clone(); // (x-1)^r, starting at r = 1
    for r in 1..=n {
        let next_power = power.checked_mul(&x_minus_one).expect("same ring");
        let c = row_rat(&row2, r as i64 - 1);
        if !c.is_zero() {
            let bracket = next_power
                .scale(&inv(r as i64 + 1))
                .checked_add(&power.scale(&inv(r as i64)))
                .expect("same ring");
            let yp = shifted_binom(n, n - r);
            accumulate(
                &mut rhs,
                BiPoly::tensor(&bracket.scale(&c), &yp).expect("distinct vars"),
            );
        }
        power = next_power;
    }
    (lhs, rhs)
}

pub(super) fn eq5_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = eq5_sides(cache, n);
    bipoly_report(IdentityId::Eq5, Params::n(n), lhs, rhs, perturb)
}

// ---- eq (6) ----------------------------------------------------------------

pub(super) fn eq6_sides(cache: &SequenceCache, n: u32, d: u32) -> (BiPoly, BiPoly) {
    let row = binomial_row(n as u64);
    // lhs: sum_{r=0}^{n} x^r C(n,r) C(y, r+d)
    let mut lhs = BiPoly::zero("x", "y");
    for r in 0..=n {
        let xp = UniPoly::monomial("x", row_rat(&row, r as i64), r as usize);
        accumulate(&mut lhs, BiPoly::tensor(&xp, cache.cpoly(r + d)).expect("distinct vars"));
    }

    // rhs: sum_{j=0}^{n} (x-1)^j C(n,j) C(y+n-j, n+d)
    let row2 = binomial_row(n as u64);
    let mut rhs = BiPoly::zero("x", "y");
    let x_minus_one = UniPoly::new("x", vec![-Rat::one(), Rat::one()]);
    let mut power = UniPoly::one("x"); // (x-1)^j
    for j in 0..=n {
        let xp = power.scale(&row_rat(&row2, j as i64));
        let yp = shifted_binom(n + d, n - j);
        accumulate(&mut rhs, BiPoly::tensor(&xp, &yp).expect("distinct vars"));
        if j < n {
            power = power.checked_mul(&x_minus_one).expect("same ring");
        }
    }
    (lhs, rhs)
}

pub(super) fn eq6_report(cache: &SequenceCache, n: u32, d: u32, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = eq6_sides(cache, n, d);
    bipoly_report(IdentityId::Eq6, Params::nd(n, d), lhs, rhs, perturb)
}

// ---- the derivative facts at y = -1 ----------------------------------------

pub(super) fn deriv_facts_one(
    cache: &SequenceCache,
    n: u32,
    r: u32,
    perturb: bool,
) -> IdentityReport {
    let mut lhs = Vec::with_capacity(3);
    let mut rhs = Vec::with_capacity(3);

    // Fact 1: d/dy C(y, r-1) at y = -1 equals (-1)^r H_{r-1}.
    lhs.push(("f1", cache.cpoly_deriv_scaled(r - 1).eval_int(-1)));
    rhs.push(("f1", &sign(r) * cache.h1(r - 1)));

    // Fact 2: d/dy Q_n(y) at y = -1 equals (1 - H_{n-1})/(n(n+1)).
    lhs.push(("f2", cache.quotient_deriv_scaled(n).eval_int(-1)));
    rhs.push((
        "f2",
        &(&Rat::one() - cache.h1(n - 1)) * &inv2(n, n + 1),
    ));

    // Fact 3 (1 <= r <= n-1): d/dy C(y+n-r, n) at y = -1
    // equals (-1)^r / (n C(n-1, r)).
    if r < n {
        lhs.push(("f3", cache.cpoly_deriv_scaled(n).eval_int((n - r) as i64 - 1)));
        let denom = &rat(n as i64) * &Rat::from_int(crate::arith::binomial(n as u64 - 1, r as i64));
        rhs.push(("f3", &sign(r) / &denom));
    }

    facts_report(IdentityId::DerivFacts, Params::nr(n, r), lhs, rhs, perturb)
}

pub(super) fn deriv_facts_batch(
    cache: &SequenceCache,
    n: u32,
    perturb: bool,
) -> Vec<IdentityReport> {
    (1..=n).map(|r| deriv_facts_one(cache, n, r, perturb)).collect()
}

// ---- eq (7) and eq (8): the master identities -------------------------------

/// Shared shape of the two master identities, instantiated with either the
/// Bernoulli or the Euler polynomial family.
fn master_sides(
    cache: &SequenceCache,
    n: u32,
    poly: &dyn Fn(&SequenceCache, u32) -> UniPoly,
    poly_neg: &dyn Fn(&SequenceCache, u32) -> UniPoly,
) -> (UniPoly, UniPoly) {
    let row = binomial_row(n as u64 - 1);
    // lhs: sum_{r=1}^{n+1} (P_r(x)/r) C(n-1, r-2) H_{r-1}
    let mut lhs = UniPoly::zero("x");
    for r in 1..=n + 1 {
        let scalar = &(&row_rat(&row, r as i64 - 2) * cache.h1(r - 1)) * &inv(r as i64);
        if !scalar.is_zero() {
            lhs = lhs
                .checked_add(&poly(cache, r).scale(&scalar))
                .expect("same ring");
        }
    }

    // rhs: sum_{r=1}^{n-1} (-1)^r P_r(-x) / (r(n-r)(n-r+1))
    //      + (-1)^{n-1} (n-1) P_n(-x) / n^2
    //      + (-1)^{n+1} H_n (P_{n+1}(-x)/(n+1) + P_n(-x)/n)
    //      + (1 - H_{n-1})/(n(n+1))
    let mut rhs = UniPoly::zero("x");
    for r in 1..n {
        let scalar = &sign(r) * &inv3(r, n - r, n - r + 1);
        rhs = rhs
            .checked_add(&poly_neg(cache, r).scale(&scalar))
            .expect("same ring");
    }
    let n_i = n as i64;
    rhs = rhs
        .checked_add(
            &poly_neg(cache, n).scale(&(&(&sign(n + 1) * &rat(n_i - 1)) * &inv2(n, n))),
        )
        .expect("same ring");
    let tail = poly_neg(cache, n + 1)
        .scale(&inv(n_i + 1))
        .checked_add(&poly_neg(cache, n).scale(&inv(n_i)))
        .expect("same ring");
    rhs = rhs
        .checked_add(&tail.scale(&(&sign(n + 1) * cache.h1(n))))
        .expect("same ring");
    let constant = &(&Rat::one() - cache.h1(n - 1)) * &inv2(n, n + 1);
    rhs = rhs
        .checked_add(&UniPoly::constant("x", constant))
        .expect("same ring");

    (lhs, rhs)
}

pub(super) fn eq7_sides(cache: &SequenceCache, n: u32) -> (UniPoly, UniPoly) {
    master_sides(
        cache,
        n,
        &|c, r| c.bpoly(r).clone(),
        &|c, r| c.bpoly_neg(r).clone(),
    )
}

pub(super) fn eq7_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = eq7_sides(cache, n);
    poly_report(IdentityId::Eq7, Params::n(n), lhs, rhs, perturb)
}

pub(super) fn eq8_sides(cache: &SequenceCache, n: u32) -> (UniPoly, UniPoly) {
    master_sides(
        cache,
        n,
        &|c, r| c.epoly(r).clone(),
        &|c, r| c.epoly_neg(r).clone(),
    )
}

pub(super) fn eq8_report(cache: &SequenceCache, n: u32, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = eq8_sides(cache, n);
    poly_report(IdentityId::Eq8, Params::n(n), lhs, rhs, perturb)
}
