use super::*;
use crate::arith::binomial_row;
use crate::poly::BiPoly;

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d).unwrap()
}

fn cache() -> SequenceCache {
    SequenceCache::new()
}

fn assert_both(report: &IdentityReport, value: &str) {
    assert!(report.equal, "unexpected mismatch: {}", report.witness);
    assert_eq!(report.lhs, value);
    assert_eq!(report.rhs, value);
    assert!(report.witness.is_empty());
}

// ---- eq1 -----------------------------------------------------------------

#[test]
fn eq1_small_cases() {
    let mut c = cache();
    assert_both(&verify_eq1(&mut c, 1).unwrap(), "0");
    assert_both(&verify_eq1(&mut c, 2).unwrap(), "3/4");
    assert!(verify_eq1(&mut c, 10).unwrap().equal);
    assert_eq!(
        verify_eq1(&mut c, 0),
        Err(ParamError::BadN { min: 1, got: 0 })
    );
}

/// The suffix-accumulated left side must agree with a plain forward double
/// loop; exact arithmetic is order-independent.
#[test]
fn eq1_lhs_sum_order_independent() {
    let mut c = cache();
    c.ensure_bernoulli(25);
    c.ensure_harmonic(25);
    for n in 1..=25u32 {
        let row = binomial_row(n as u64);
        let mut naive = Rat::zero();
        for big_r in 1..n {
            let mut inner = Rat::zero();
            for l in big_r..=n {
                inner += &(&Rat::alternating(l as u64)
                    * &(&Rat::from_int(row[l as usize].clone()) * c.h1(l - 1)));
            }
            let bracket = &(&inner * &r(1, n as i64)) + &r(1, big_r as i64 * (n - big_r) as i64);
            naive += &(&(&Rat::alternating(big_r as u64) * c.bernoulli(big_r))
                * &(&r(1, big_r as i64) * &bracket));
        }
        assert_eq!(naive, scalar::eq1_lhs(&c, n), "order dependence at n = {n}");
    }
}

#[test]
fn eq1_restated_small_cases() {
    let mut c = cache();
    assert_both(&verify_eq1_restated(&mut c, 1).unwrap(), "0");
    assert_both(&verify_eq1_restated(&mut c, 2).unwrap(), "3/2");
    assert!(verify_eq1_restated(&mut c, 25).unwrap().equal);
}

// ---- the rewrites ----------------------------------------------------------

#[test]
fn rewrite_h_cases() {
    let mut c = cache();
    assert_both(&verify_rewrite_h(&mut c, 3, 1).unwrap(), "3/2");
    // r = n: both sides collapse to (-1)^n H_{n-1}.
    assert_both(&verify_rewrite_h(&mut c, 5, 5).unwrap(), "-25/12");
    assert!(verify_rewrite_h(&mut c, 4, 2).unwrap().equal);
    assert_eq!(
        verify_rewrite_h(&mut c, 4, 5),
        Err(ParamError::BadR { lo: 1, hi: 4, got: 5 })
    );
    assert_eq!(
        verify_rewrite_h(&mut c, 1, 1),
        Err(ParamError::BadN { min: 2, got: 1 })
    );
}

#[test]
fn rewrite_l_cases() {
    let mut c = cache();
    assert_both(&verify_rewrite_l(&mut c, 3, 2).unwrap(), "7/6");
    // r = n: both sides are (-1)^n / n.
    assert_both(&verify_rewrite_l(&mut c, 5, 5).unwrap(), "-1/5");
    assert!(verify_rewrite_l(&mut c, 5, 1).unwrap().equal);
}

// ---- eq2 / eq3 ---------------------------------------------------------------

#[test]
fn eq2_small_cases() {
    let mut c = cache();
    assert_both(&verify_eq2(&mut c, 1).unwrap(), "1/2");
    assert!(verify_eq2(&mut c, 2).unwrap().equal);
    assert!(verify_eq2(&mut c, 12).unwrap().equal);
}

#[test]
fn eq3_small_cases() {
    let mut c = cache();
    assert_both(&verify_eq3(&mut c, 1).unwrap(), "0");
    assert_both(&verify_eq3(&mut c, 2).unwrap(), "-1/4");
    assert!(verify_eq3(&mut c, 20).unwrap().equal);
}

// ---- lemma (4) and eq (5), eq (6) ---------------------------------------------

#[test]
fn lemma4_n1_is_half_y_b2() {
    let mut c = cache();
    let report = verify_lemma4(&mut c, 1).unwrap();
    assert!(report.equal, "{}", report.witness);

    // Both sides must equal (y/2) B_2(x) = 1/2 x^2 y - 1/2 x y + 1/12 y.
    let (lhs, rhs) = poly_ids::lemma4_sides(&c, 1);
    let mut expect = BiPoly::zero("x", "y");
    expect.add_term(2, 1, r(1, 2));
    expect.add_term(1, 1, r(-1, 2));
    expect.add_term(0, 1, r(1, 12));
    assert_eq!(lhs, expect);
    assert_eq!(rhs, expect);
}

#[test]
fn lemma4_degree_in_y_is_n() {
    let mut c = cache();
    for n in 1..=6u32 {
        verify_lemma4(&mut c, n).unwrap();
        let (lhs, rhs) = poly_ids::lemma4_sides(&c, n);
        assert_eq!(lhs.degree_in("y").unwrap(), Some(n));
        assert_eq!(rhs.degree_in("y").unwrap(), Some(n));
    }
}

#[test]
fn lemma4_holds_up_to_8() {
    let mut c = cache();
    for n in 1..=8 {
        let report = verify_lemma4(&mut c, n).unwrap();
        assert!(report.equal, "lemma4 failed at n = {n}: {}", report.witness);
    }
}

#[test]
fn eq5_cases_and_x1_slice() {
    let mut c = cache();
    assert!(verify_eq5(&mut c, 1).unwrap().equal);
    assert!(verify_eq5(&mut c, 4).unwrap().equal);
    // At x = 1 the left side collapses to the cleared quotient Q_n.
    for n in 1..=6u32 {
        verify_eq5(&mut c, n).unwrap();
        let (lhs, _) = poly_ids::eq5_sides(&c, n);
        let slice = lhs.eval_partial("x", &Rat::one()).unwrap();
        assert_eq!(&slice, c.quotient(n), "x = 1 slice differs at n = {n}");
    }
}

#[test]
fn eq6_cases() {
    let mut c = cache();
    let report = verify_eq6(&mut c, 0, 0).unwrap();
    assert_both(&report, "1");
    assert!(verify_eq6(&mut c, 3, 1).unwrap().equal);
    // (n, d) = (2, 0): at x = 1 both sides collapse to C(y+2, 2).
    verify_eq6(&mut c, 2, 0).unwrap();
    let (lhs, rhs) = poly_ids::eq6_sides(&c, 2, 0);
    let expect = c
        .binom_poly(2)
        .substitute_linear(&Rat::one(), &Rat::from_int(2));
    assert_eq!(lhs.eval_partial("x", &Rat::one()).unwrap(), expect);
    assert_eq!(rhs.eval_partial("x", &Rat::one()).unwrap(), expect);
}

// ---- derivative facts and the ratio identity -----------------------------------

#[test]
fn derivative_fact_values() {
    let mut c = cache();
    // r = 3: d/dy C(y,2) at -1 is -3/2 = (-1)^3 H_2.
    let report = verify_derivative_facts(&mut c, 3, 3).unwrap();
    assert!(report.equal, "{}", report.witness);
    assert_eq!(report.lhs, "f1 = -3/2; f2 = -1/24");
    // n = 2: the quotient derivative fact evaluates to (1 - H_1)/6 = 0.
    let report = verify_derivative_facts(&mut c, 2, 1).unwrap();
    assert!(report.equal);
    assert_eq!(report.lhs, "f1 = 0; f2 = 0; f3 = -1/2");
    // (n, r) = (3, 1): the shifted fact gives -1/6 = (-1)^1/(3 C(2,1)).
    let report = verify_derivative_facts(&mut c, 3, 1).unwrap();
    assert!(report.equal);
    assert_eq!(report.lhs, "f1 = 0; f2 = -1/24; f3 = -1/6");
    assert_eq!(
        verify_derivative_facts(&mut c, 3, 4),
        Err(ParamError::BadR { lo: 1, hi: 3, got: 4 })
    );
}

#[test]
fn ratio_identity_cases() {
    assert_both(&verify_ratio_identity(5, 2).unwrap(), "1/12");
    assert_both(&verify_ratio_identity(7, 4).unwrap(), "1/12");
    // r = 1: the second term vanishes by the out-of-range convention.
    let report = verify_ratio_identity(6, 1).unwrap();
    assert_both(&report, "1/30");
    assert_eq!(
        verify_ratio_identity(5, 5),
        Err(ParamError::BadR { lo: 1, hi: 4, got: 5 })
    );
}

// ---- the master identities -------------------------------------------------

#[test]
fn eq7_n1_is_half_b2() {
    let mut c = cache();
    let report = verify_eq7(&mut c, 1).unwrap();
    assert_both(&report, "1/2 x^2 - 1/2 x + 1/12");
}

#[test]
fn eq7_holds_small_range() {
    let mut c = cache();
    for n in 1..=12 {
        let report = verify_eq7(&mut c, n).unwrap();
        assert!(report.equal, "eq7 failed at n = {n}: {}", report.witness);
    }
}

#[test]
fn eq8_n1_is_half_e2() {
    let mut c = cache();
    let report = verify_eq8(&mut c, 1).unwrap();
    assert_both(&report, "1/2 x^2 - 1/2 x");
}

#[test]
fn eq8_holds_small_range() {
    let mut c = cache();
    for n in [2, 10] {
        let report = verify_eq8(&mut c, n).unwrap();
        assert!(report.equal, "eq8 failed at n = {n}: {}", report.witness);
    }
}

// ---- recurrence and p-integrality ---------------------------------------------

#[test]
fn alternating_recurrence_reports() {
    let mut c = cache();
    for n in [0, 1, 6, 20] {
        assert!(verify_alternating_recurrence(&mut c, n).unwrap().equal);
    }
    // n = 1: both sides are 1/2.
    assert_both(&verify_alternating_recurrence(&mut c, 1).unwrap(), "1/2");
}

#[test]
fn p_integrality_cases() {
    let mut c = cache();
    for p in [5u64, 7, 13] {
        let report = p_integrality_eq1(&mut c, p).unwrap();
        assert!(report.equal, "not {p}-integral: {}", report.witness);
        assert!(report.witness.is_empty());
    }
    assert_eq!(p_integrality_eq1(&mut c, 6), Err(ParamError::BadPrime(6)));
    assert_eq!(p_integrality_eq1(&mut c, 3), Err(ParamError::BadPrime(3)));
}

// ---- consistency chains ------------------------------------------------------

#[test]
fn eq7_slice_reconciles_with_eq3_small_range() {
    let mut c = cache();
    for n in 1..=12 {
        assert!(
            check_eq7_slice_matches_eq3(&mut c, n),
            "slice reconciliation failed at n = {n}"
        );
    }
}

#[test]
fn lemma4_derivative_reconciles_with_eq7_small_range() {
    let mut c = cache();
    for n in 1..=8 {
        assert!(
            check_lemma4_derivative_matches_eq7(&mut c, n),
            "lemma derivative reconciliation failed at n = {n}"
        );
    }
}

// ---- the suite runner ---------------------------------------------------------

#[test]
fn suite_single_identity_smallest_grid() {
    let mut c = cache();
    let report = run_suite(
        &mut c,
        &[IdentityId::Eq1],
        &SuiteOptions {
            n_max: Some(1),
            ..Default::default()
        },
    );
    assert_eq!(report.len(), 1);
    assert!(report.all_equal());
}

#[test]
fn suite_all_identities_small_grid() {
    let mut c = cache();
    let report = run_suite(
        &mut c,
        &ALL_IDENTITIES,
        &SuiteOptions {
            n_max: Some(2),
            ..Default::default()
        },
    );
    assert!(report.all_equal());
    // Spot-check the grid shape: eq6 runs n in [0,2] x d in [0,3].
    let eq6_count = report
        .reports
        .iter()
        .filter(|r| r.id == IdentityId::Eq6)
        .count();
    assert_eq!(eq6_count, 12);
    // No primes below 2, so the p-integrality grid is empty.
    assert!(!report.reports.iter().any(|r| r.id == IdentityId::PIntegralEq1));
    // Reports are sorted by (id, parameters).
    let mut sorted = report.reports.clone();
    sorted.sort_by_key(|a| (a.id, a.params.sort_key()));
    assert_eq!(
        report
            .reports
            .iter()
            .map(|r| (r.id, r.params))
            .collect::<Vec<_>>(),
        sorted.iter().map(|r| (r.id, r.params)).collect::<Vec<_>>()
    );
}

#[test]
fn suite_runs_are_deterministic() {
    let run = || {
        let mut c = cache();
        let report = run_suite(
            &mut c,
            &[IdentityId::Eq1, IdentityId::Lemma4, IdentityId::DerivFacts],
            &SuiteOptions {
                n_max: Some(6),
                ..Default::default()
            },
        );
        report
            .reports
            .iter()
            .map(|r| format!("{}|{}|{}|{}|{}", r.id, r.params, r.lhs, r.rhs, r.equal))
            .collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn perturbed_suite_reports_witnesses() {
    let mut c = cache();
    let report = run_suite(
        &mut c,
        &[IdentityId::Eq3, IdentityId::Eq7, IdentityId::Lemma4, IdentityId::PIntegralEq1],
        &SuiteOptions {
            n_max: Some(6),
            perturb: Some(IdentityId::Eq3),
            ..Default::default()
        },
    );
    assert!(!report.all_equal());
    for rep in report.reports {
        if rep.id == IdentityId::Eq3 {
            assert!(!rep.equal);
            assert!(!rep.witness.is_empty(), "mismatch must carry a witness");
        } else {
            assert!(rep.equal, "only the perturbed identity may fail");
        }
    }
}

#[test]
fn perturbing_every_identity_kind_yields_witnesses() {
    // One representative per side-value shape: rational, univariate,
    // bivariate, fact list, valuation.
    for id in [
        IdentityId::Eq1,
        IdentityId::Eq7,
        IdentityId::Lemma4,
        IdentityId::DerivFacts,
        IdentityId::RewriteH,
        IdentityId::PIntegralEq1,
    ] {
        let mut c = cache();
        let report = run_suite(
            &mut c,
            &[id],
            &SuiteOptions {
                n_max: Some(8),
                perturb: Some(id),
                ..Default::default()
            },
        );
        assert!(!report.is_empty());
        for rep in report.reports {
            assert!(!rep.equal, "{id}: perturbed report still equal");
            assert!(!rep.witness.is_empty(), "{id}: empty witness");
        }
    }
}

/// The integer-product construction of shifted binomial polynomials must
/// agree with shifting the cached rational polynomial.
#[test]
fn shifted_binom_matches_substitution() {
    let mut c = cache();
    c.ensure_binom_polys(12);
    for k in 0..=12u32 {
        for shift in 0..=12u32 {
            assert_eq!(
                poly_ids::shifted_binom(k, shift),
                c.cpoly(k)
                    .substitute_linear(&Rat::one(), &Rat::from_int(shift as i64)),
                "shifted binomial differs at k = {k}, c = {shift}"
            );
        }
    }
}

#[test]
fn identity_id_round_trips() {
    for id in ALL_IDENTITIES {
        assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
    }
    assert_eq!(
        "eq9".parse::<IdentityId>(),
        Err(ParamError::UnknownId("eq9".into()))
    );
}

#[test]
fn params_render_in_canonical_order() {
    assert_eq!(Params::nr(4, 2).to_string(), "n=4 r=2");
    assert_eq!(Params::nd(3, 1).to_string(), "n=3 d=1");
    assert_eq!(Params::p(7).to_string(), "p=7");
}

#[test]
fn report_serializes_with_stable_fields() {
    let mut c = cache();
    let report = verify_eq1(&mut c, 2).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["id"], "eq1");
    assert_eq!(json["params"]["n"], 2);
    assert_eq!(json["lhs"], "3/4");
    assert_eq!(json["rhs"], "3/4");
    assert_eq!(json["equal"], true);
    assert_eq!(json["witness"], "");
}
