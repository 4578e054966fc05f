//! Canonical producers of the Bernoulli/Euler/harmonic families, with
//! memoization, plus the von Staudt-Clausen and Wolstenholme side checks.
//!
//! Generation conventions:
//! - `B_n` comes from the recurrence `sum_{k=0}^{n} C(n+1,k) B_k = 0`
//!   (n >= 1), which pins `B_1 = -1/2`. The alternating relation
//!   `(-1)^n B_n = sum_r C(n,r) B_r` is *verified* as a theorem elsewhere,
//!   never used as the generator: for even n it collapses to `0 = 0` and
//!   determines nothing.
//! - `B_n(x)` is the explicit expansion `sum_k C(n,k) B_k x^{n-k}`.
//! - `E_n(x)` inverts the signed-sum operator on `2 x^n`, the relation that
//!   characterizes Euler polynomials.
//!
//! The cache only ever grows, and an entry never changes once computed. The
//! `&mut self` producers extend it on demand; the `&self` accessors expect a
//! warmed cache and are safe to share across verification threads (build-up
//! happens-before the parallel read pass).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{
    binomial_row, is_prime, padic_valuation, primes_below, Int, Rat, Valuation,
};
use crate::poly::{ScaledIntPoly, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("wolstenholme check requires a prime p >= 5, got {0}")]
    BadWolstenholmePrime(u64),
    #[error("preloaded Bernoulli values disagree with the computed prefix at index {0}")]
    PreloadMismatch(usize),
}

/// Which harmonic family: `H_n` or the second-order `H_n^(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicOrder {
    One,
    Two,
}

/// Memoized sequence storage. See the module docs for the generation rules.
#[derive(Default)]
pub struct SequenceCache {
    bernoulli: Vec<Rat>,
    harmonic1: Vec<Rat>,
    harmonic2: Vec<Rat>,
    bern_polys: Vec<UniPoly>,
    bern_polys_neg: Vec<UniPoly>,
    euler_polys: Vec<UniPoly>,
    euler_polys_neg: Vec<UniPoly>,
    /// C(y, k) and the denominator-cleared form of its derivative.
    binom_polys: Vec<UniPoly>,
    binom_deriv_scaled: Vec<ScaledIntPoly>,
    /// Last row of the falling factorial y(y-1)...(y-k+1), integer
    /// coefficients; the increment source for `binom_polys`.
    falling_last: Vec<Int>,
    factorials: Vec<Int>,
    /// Q_n = C(y+n, n+1)/(y+1) for n >= 1 (index 0 holds a placeholder),
    /// plus the cleared form of its derivative.
    quotient_polys: Vec<UniPoly>,
    quotient_deriv_scaled: Vec<ScaledIntPoly>,
    /// Last numerator row of (y)(y+1)...(y+n), the increment source for
    /// `quotient_polys`.
    rising_last: Vec<Int>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure_factorials(&mut self, upto: usize) {
        if self.factorials.is_empty() {
            self.factorials.push(Int::one());
        }
        while self.factorials.len() <= upto {
            let n = self.factorials.len();
            let next = self.factorials[n - 1].clone() * Int::from(n);
            self.factorials.push(next);
        }
    }

    // ---- Bernoulli numbers --------------------------------------------

    pub fn ensure_bernoulli(&mut self, upto: u32) {
        if self.bernoulli.is_empty() {
            self.bernoulli.push(Rat::one());
        }
        while self.bernoulli.len() <= upto as usize {
            let n = self.bernoulli.len();
            // B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) B_k
            let row = binomial_row(n as u64 + 1);
            let mut acc = Rat::zero();
            for (k, b) in self.bernoulli.iter().enumerate() {
                if !b.is_zero() {
                    acc += &(b * &Rat::from_int(row[k].clone()));
                }
            }
            let value = -acc / Rat::from_int(n as i64 + 1);
            self.bernoulli.push(value);
        }
    }

    /// Exact `B_n` under the generating-function convention (`B_1 = -1/2`).
    pub fn bernoulli_number(&mut self, n: u32) -> Rat {
        self.ensure_bernoulli(n);
        self.bernoulli[n as usize].clone()
    }

    /// Warmed read access; `ensure_bernoulli` must have covered `n`.
    pub fn bernoulli(&self, n: u32) -> &Rat {
        self.bernoulli
            .get(n as usize)
            .expect("sequence cache not warmed: bernoulli")
    }

    pub fn bernoulli_len(&self) -> usize {
        self.bernoulli.len()
    }

    pub fn bernoulli_values(&self) -> &[Rat] {
        &self.bernoulli
    }

    /// Installs externally loaded Bernoulli values (e.g. from the on-disk
    /// cache). Any overlap with already computed entries must agree.
    pub fn preload_bernoulli(&mut self, values: Vec<Rat>) -> Result<(), SequenceError> {
        for (i, (old, new)) in self.bernoulli.iter().zip(&values).enumerate() {
            if old != new {
                return Err(SequenceError::PreloadMismatch(i));
            }
        }
        if values.len() > self.bernoulli.len() {
            self.bernoulli = values;
        }
        Ok(())
    }

    /// The alternating recurrence `(-1)^n B_n = sum_{r=0}^{n} B_r C(n,r)`,
    /// checked as a theorem against the generated values.
    pub fn verify_alternating_recurrence(&mut self, n: u32) -> bool {
        self.ensure_bernoulli(n);
        let row = binomial_row(n as u64);
        let mut rhs = Rat::zero();
        for (r, b) in self.bernoulli.iter().take(n as usize + 1).enumerate() {
            if !b.is_zero() {
                rhs += &(b * &Rat::from_int(row[r].clone()));
            }
        }
        let lhs = &Rat::alternating(n as u64) * self.bernoulli(n);
        lhs == rhs
    }

    // ---- Harmonic numbers ---------------------------------------------

    pub fn ensure_harmonic(&mut self, upto: u32) {
        if self.harmonic1.is_empty() {
            self.harmonic1.push(Rat::zero());
            self.harmonic2.push(Rat::zero());
        }
        while self.harmonic1.len() <= upto as usize {
            let k = self.harmonic1.len() as i64;
            let h1 = self.harmonic1.last().expect("nonempty") + &Rat::new(1, k).expect("k > 0");
            let h2 =
                self.harmonic2.last().expect("nonempty") + &Rat::new(1, k * k).expect("k > 0");
            self.harmonic1.push(h1);
            self.harmonic2.push(h2);
        }
    }

    /// Exact partial sum `H_n` or `H_n^(2)`; the empty sum `H_0` is 0.
    pub fn harmonic(&mut self, n: u32, order: HarmonicOrder) -> Rat {
        self.ensure_harmonic(n);
        match order {
            HarmonicOrder::One => self.harmonic1[n as usize].clone(),
            HarmonicOrder::Two => self.harmonic2[n as usize].clone(),
        }
    }

    pub fn h1(&self, n: u32) -> &Rat {
        self.harmonic1
            .get(n as usize)
            .expect("sequence cache not warmed: harmonic")
    }

    pub fn h2(&self, n: u32) -> &Rat {
        self.harmonic2
            .get(n as usize)
            .expect("sequence cache not warmed: harmonic")
    }

    // ---- Bernoulli and Euler polynomials ------------------------------

    pub fn ensure_bernoulli_polys(&mut self, upto: u32) {
        self.ensure_bernoulli(upto);
        while self.bern_polys.len() <= upto as usize {
            let n = self.bern_polys.len();
            // B_n(x) = sum_k C(n,k) B_k x^(n-k)
            let row = binomial_row(n as u64);
            let coeffs = (0..=n)
                .map(|j| {
                    // coefficient of x^j comes from k = n - j
                    let k = n - j;
                    &Rat::from_int(row[k].clone()) * &self.bernoulli[k]
                })
                .collect();
            let poly = UniPoly::new("x", coeffs);
            self.bern_polys_neg
                .push(poly.substitute_linear(&-Rat::one(), &Rat::zero()));
            self.bern_polys.push(poly);
        }
    }

    /// Monic degree-n Bernoulli polynomial with `B_n(0) = B_n`.
    pub fn bernoulli_poly(&mut self, n: u32) -> UniPoly {
        self.ensure_bernoulli_polys(n);
        self.bern_polys[n as usize].clone()
    }

    pub fn bpoly(&self, n: u32) -> &UniPoly {
        self.bern_polys
            .get(n as usize)
            .expect("sequence cache not warmed: bernoulli polynomials")
    }

    /// `B_n(-x)`, cached alongside the plain polynomial.
    pub fn bpoly_neg(&self, n: u32) -> &UniPoly {
        self.bern_polys_neg
            .get(n as usize)
            .expect("sequence cache not warmed: bernoulli polynomials")
    }

    pub fn ensure_euler_polys(&mut self, upto: u32) {
        while self.euler_polys.len() <= upto as usize {
            let n = self.euler_polys.len();
            // The unique F with F(x+1) + F(x) = 2 x^n.
            let target = UniPoly::monomial("x", Rat::from_int(2), n);
            let poly = target.solve_signed_sum();
            self.euler_polys_neg
                .push(poly.substitute_linear(&-Rat::one(), &Rat::zero()));
            self.euler_polys.push(poly);
        }
    }

    /// Monic degree-n Euler polynomial, defined by `E_n(x+1) + E_n(x) = 2 x^n`.
    pub fn euler_poly(&mut self, n: u32) -> UniPoly {
        self.ensure_euler_polys(n);
        self.euler_polys[n as usize].clone()
    }

    pub fn epoly(&self, n: u32) -> &UniPoly {
        self.euler_polys
            .get(n as usize)
            .expect("sequence cache not warmed: euler polynomials")
    }

    pub fn epoly_neg(&self, n: u32) -> &UniPoly {
        self.euler_polys_neg
            .get(n as usize)
            .expect("sequence cache not warmed: euler polynomials")
    }

    // ---- Binomial polynomials C(y, k) ---------------------------------

    pub fn ensure_binom_polys(&mut self, upto: u32) {
        self.ensure_factorials(upto as usize);
        if self.binom_polys.is_empty() {
            self.falling_last = vec![Int::one()];
            self.binom_polys.push(UniPoly::one("y"));
            self.binom_deriv_scaled
                .push(ScaledIntPoly::from_parts(vec![], Int::one()));
        }
        while self.binom_polys.len() <= upto as usize {
            let k = self.binom_polys.len();
            // falling <- falling * (y - (k-1)), integer coefficients
            let shift = Int::from(k as i64 - 1);
            let prev = &self.falling_last;
            let mut next = vec![Int::zero(); prev.len() + 1];
            for (j, c) in prev.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * &shift;
            }
            self.falling_last = next;
            let kfact = &self.factorials[k];
            let poly = UniPoly::new(
                "y",
                self.falling_last
                    .iter()
                    .map(|c| Rat::new(c.clone(), kfact.clone()).expect("k! > 0"))
                    .collect(),
            );
            let deriv = self
                .falling_last
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * Int::from(j))
                .collect();
            self.binom_polys.push(poly);
            self.binom_deriv_scaled
                .push(ScaledIntPoly::from_parts(deriv, kfact.clone()));
        }
    }

    /// The binomial polynomial C(y, k) = y(y-1)...(y-k+1)/k!.
    pub fn binom_poly(&mut self, k: u32) -> UniPoly {
        self.ensure_binom_polys(k);
        self.binom_polys[k as usize].clone()
    }

    pub fn cpoly(&self, k: u32) -> &UniPoly {
        self.binom_polys
            .get(k as usize)
            .expect("sequence cache not warmed: binomial polynomials")
    }

    /// Denominator-cleared `d/dy C(y, k)`, for fast evaluation at integers.
    pub(crate) fn cpoly_deriv_scaled(&self, k: u32) -> &ScaledIntPoly {
        self.binom_deriv_scaled
            .get(k as usize)
            .expect("sequence cache not warmed: binomial polynomials")
    }

    // ---- The cleared-quotient polynomials Q_n --------------------------

    pub fn ensure_quotient_polys(&mut self, upto: u32) {
        self.ensure_factorials(upto as usize + 1);
        if self.quotient_polys.is_empty() {
            // Index 0 is never a valid query; hold placeholders.
            self.rising_last = vec![Int::zero(), Int::one()]; // y
            self.quotient_polys.push(UniPoly::zero("y"));
            self.quotient_deriv_scaled
                .push(ScaledIntPoly::from_parts(vec![], Int::one()));
        }
        while self.quotient_polys.len() <= upto as usize {
            let n = self.quotient_polys.len();
            // rising <- y(y+1)...(y+n) = previous * (y + n)
            let shift = Int::from(n);
            let prev = &self.rising_last;
            let mut next = vec![Int::zero(); prev.len() + 1];
            for (j, c) in prev.iter().enumerate() {
                next[j + 1] += c;
                next[j] += c * &shift;
            }
            self.rising_last = next;
            // C(y+n, n+1) = rising/(n+1)!; divide the integer numerator by
            // (y + 1) exactly, asserting a zero remainder.
            let quotient_ints = divide_by_linear_unit(&self.rising_last)
                .expect("y + 1 divides y(y+1)...(y+n) for n >= 1");
            let fact = &self.factorials[n + 1];
            let poly = UniPoly::new(
                "y",
                quotient_ints
                    .iter()
                    .map(|c| Rat::new(c.clone(), fact.clone()).expect("(n+1)! > 0"))
                    .collect(),
            );
            let deriv = quotient_ints
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * Int::from(j))
                .collect();
            self.quotient_polys.push(poly);
            self.quotient_deriv_scaled
                .push(ScaledIntPoly::from_parts(deriv, fact.clone()));
        }
    }

    /// `Q_n(y) = C(y+n, n+1)/(y+1)`, a polynomial because `(y+1)` divides the
    /// falling factorial; constructed by exact division with the remainder
    /// asserted zero. Requires `n >= 1`.
    pub fn quotient_poly(&mut self, n: u32) -> UniPoly {
        assert!(n >= 1, "Q_n is defined for n >= 1");
        self.ensure_quotient_polys(n);
        self.quotient_polys[n as usize].clone()
    }

    pub fn quotient(&self, n: u32) -> &UniPoly {
        assert!(n >= 1, "Q_n is defined for n >= 1");
        self.quotient_polys
            .get(n as usize)
            .expect("sequence cache not warmed: quotient polynomials")
    }

    pub(crate) fn quotient_deriv_scaled(&self, n: u32) -> &ScaledIntPoly {
        assert!(n >= 1, "Q_n is defined for n >= 1");
        self.quotient_deriv_scaled
            .get(n as usize)
            .expect("sequence cache not warmed: quotient polynomials")
    }

    // ---- Number-theoretic side checks ----------------------------------

    /// Von Staudt-Clausen: `B_2k + sum_{(p-1) | 2k} 1/p` is an integer.
    pub fn vsc_check(&mut self, k: u32) -> bool {
        assert!(k >= 1, "vsc_check requires k >= 1");
        let n = 2 * k;
        let mut sum = self.bernoulli_number(n);
        for p in primes_below(n as u64 + 2) {
            if (n as u64).is_multiple_of(p - 1) {
                sum += &Rat::new(1, p as i64).expect("p > 0");
            }
        }
        sum.is_integer()
    }

    /// Wolstenholme: for prime p >= 5, `v_p(H_{p-1}) >= 2` and
    /// `v_p(H_{p-1}^(2)) >= 1`.
    pub fn wolstenholme_check(&mut self, p: u64) -> Result<bool, SequenceError> {
        if p < 5 || !is_prime(p) {
            return Err(SequenceError::BadWolstenholmePrime(p));
        }
        let n = (p - 1) as u32;
        self.ensure_harmonic(n);
        let v1 = padic_valuation(self.h1(n), p).expect("p is prime");
        let v2 = padic_valuation(self.h2(n), p).expect("p is prime");
        Ok(v1 >= Valuation::Finite(2) && v2 >= Valuation::Finite(1))
    }
}

/// Divides an integer-coefficient polynomial by `(t + 1)`, returning the
/// quotient when the remainder is zero.
fn divide_by_linear_unit(coeffs: &[Int]) -> Option<Vec<Int>> {
    if coeffs.is_empty() {
        return Some(Vec::new());
    }
    let mut quotient = vec![Int::zero(); coeffs.len() - 1];
    let mut carry = Int::zero();
    for j in (1..coeffs.len()).rev() {
        let q = &coeffs[j] - &carry;
        carry = q.clone();
        quotient[j - 1] = q;
    }
    (&coeffs[0] - carry).is_zero().then_some(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn bernoulli_values() {
        let mut cache = SequenceCache::new();
        assert_eq!(cache.bernoulli_number(0), Rat::one());
        assert_eq!(cache.bernoulli_number(1), r(-1, 2));
        assert_eq!(cache.bernoulli_number(2), r(1, 6));
        assert_eq!(cache.bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        let mut cache = SequenceCache::new();
        for n in (3..=41).step_by(2) {
            assert!(cache.bernoulli_number(n).is_zero(), "B_{n} should be 0");
        }
        assert!(!cache.bernoulli_number(1).is_zero());
    }

    #[test]
    fn alternating_recurrence_holds() {
        let mut cache = SequenceCache::new();
        for n in [0u32, 1, 6, 17, 30] {
            assert!(cache.verify_alternating_recurrence(n), "recurrence failed at {n}");
        }
    }

    #[test]
    fn harmonic_values() {
        let mut cache = SequenceCache::new();
        assert_eq!(cache.harmonic(0, HarmonicOrder::One), Rat::zero());
        assert_eq!(cache.harmonic(0, HarmonicOrder::Two), Rat::zero());
        assert_eq!(cache.harmonic(4, HarmonicOrder::One), r(25, 12));
        assert_eq!(cache.harmonic(4, HarmonicOrder::Two), r(205, 144));
    }

    #[test]
    fn bernoulli_poly_values() {
        let mut cache = SequenceCache::new();
        assert_eq!(cache.bernoulli_poly(0), UniPoly::one("x"));
        assert_eq!(
            cache.bernoulli_poly(1),
            UniPoly::new("x", vec![r(-1, 2), Rat::one()])
        );
        assert_eq!(
            cache.bernoulli_poly(2),
            UniPoly::new("x", vec![r(1, 6), r(-1, 1), Rat::one()])
        );
    }

    #[test]
    fn euler_poly_values() {
        let mut cache = SequenceCache::new();
        assert_eq!(cache.euler_poly(0), UniPoly::one("x"));
        assert_eq!(
            cache.euler_poly(1),
            UniPoly::new("x", vec![r(-1, 2), Rat::one()])
        );
        assert_eq!(
            cache.euler_poly(2),
            UniPoly::new("x", vec![Rat::zero(), r(-1, 1), Rat::one()])
        );
    }

    #[test]
    fn binom_poly_values() {
        let mut cache = SequenceCache::new();
        assert_eq!(cache.binom_poly(0), UniPoly::one("y"));
        assert_eq!(cache.binom_poly(1), UniPoly::var_poly("y"));
        assert_eq!(
            cache.binom_poly(2),
            UniPoly::new("y", vec![Rat::zero(), r(-1, 2), r(1, 2)])
        );
        // C(y, k) at integer y agrees with the binomial coefficient.
        for k in 0..=12u32 {
            let poly = cache.binom_poly(k);
            for y in 0..=15u64 {
                assert_eq!(
                    poly.eval(&Rat::from_int(y as i64)),
                    Rat::from_int(crate::arith::binomial(y, k as i64))
                );
            }
        }
    }

    #[test]
    fn quotient_poly_values() {
        let mut cache = SequenceCache::new();
        // Q_1 = C(y+1, 2)/(y+1) = y/2
        assert_eq!(
            cache.quotient_poly(1),
            UniPoly::new("y", vec![Rat::zero(), r(1, 2)])
        );
        // Q_2 = C(y+2, 3)/(y+1) = y(y+2)/6
        assert_eq!(
            cache.quotient_poly(2),
            UniPoly::new("y", vec![Rat::zero(), r(1, 3), r(1, 6)])
        );
        // Cross-check against rational division of C(y+n, n+1) by (y+1).
        for n in 1..=10u32 {
            cache.ensure_binom_polys(n + 1);
            let shifted = cache
                .cpoly(n + 1)
                .substitute_linear(&Rat::one(), &Rat::from_int(n as i64));
            let divisor = UniPoly::new("y", vec![Rat::one(), Rat::one()]);
            assert_eq!(shifted.div_exact(&divisor).unwrap(), cache.quotient_poly(n));
        }
    }

    #[test]
    fn scaled_derivative_matches_rational_derivative() {
        let mut cache = SequenceCache::new();
        cache.ensure_binom_polys(20);
        cache.ensure_quotient_polys(20);
        for k in 0..=20u32 {
            let expect = cache.cpoly(k).derivative();
            for t in [-2i64, -1, 0, 3] {
                assert_eq!(
                    cache.cpoly_deriv_scaled(k).eval_int(t),
                    expect.eval(&Rat::from_int(t))
                );
            }
        }
        for n in 1..=20u32 {
            let expect = cache.quotient(n).derivative();
            assert_eq!(
                cache.quotient_deriv_scaled(n).eval_int(-1),
                expect.eval(&r(-1, 1))
            );
        }
    }

    #[test]
    fn vsc_examples() {
        let mut cache = SequenceCache::new();
        assert!(cache.vsc_check(1));
        assert!(cache.vsc_check(2));
        assert!(cache.vsc_check(3));
        // The k = 1 sum is exactly 1: B_2 + 1/2 + 1/3.
        let sum = cache.bernoulli_number(2) + r(1, 2) + r(1, 3);
        assert_eq!(sum, Rat::one());
    }

    #[test]
    fn wolstenholme_examples() {
        let mut cache = SequenceCache::new();
        assert!(cache.wolstenholme_check(5).unwrap());
        assert!(cache.wolstenholme_check(7).unwrap());
        assert!(cache.wolstenholme_check(11).unwrap());
        assert_eq!(
            cache.wolstenholme_check(4),
            Err(SequenceError::BadWolstenholmePrime(4))
        );
        assert_eq!(
            cache.wolstenholme_check(3),
            Err(SequenceError::BadWolstenholmePrime(3))
        );
    }

    #[test]
    fn preload_checks_overlap() {
        let mut cache = SequenceCache::new();
        cache.ensure_bernoulli(2);
        assert_eq!(
            cache.preload_bernoulli(vec![Rat::one(), r(-1, 2), r(1, 6), Rat::zero()]),
            Ok(())
        );
        assert_eq!(cache.bernoulli_len(), 4);
        assert_eq!(
            cache.preload_bernoulli(vec![Rat::one(), r(1, 2)]),
            Err(SequenceError::PreloadMismatch(1))
        );
    }

    #[test]
    fn egf_oracle_agrees_on_numbers() {
        let mut cache = SequenceCache::new();
        let order = 40;
        let egf = series::bernoulli_egf(order);
        let mut fact = Rat::one();
        for n in 0..=order {
            if n > 0 {
                fact = fact * Rat::from_int(n as i64);
            }
            assert_eq!(
                egf.coeff(n) * &fact,
                cache.bernoulli_number(n as u32),
                "EGF disagrees at n = {n}"
            );
        }
    }

    #[test]
    fn egf_oracle_agrees_on_polynomials() {
        let mut cache = SequenceCache::new();
        let order = 12;
        let begf = series::bernoulli_poly_egf(order);
        let eegf = series::euler_poly_egf(order);
        let mut fact = Rat::one();
        for n in 0..=order {
            if n > 0 {
                fact = fact * Rat::from_int(n as i64);
            }
            assert_eq!(begf.coeff(n).scale(&fact), cache.bernoulli_poly(n as u32));
            assert_eq!(eegf.coeff(n).scale(&fact), cache.euler_poly(n as u32));
        }
    }

    #[test]
    fn structural_relations_small_range() {
        let mut cache = SequenceCache::new();
        cache.ensure_bernoulli_polys(21);
        cache.ensure_euler_polys(21);
        for n in 0..=20u32 {
            let b = cache.bpoly(n).clone();
            let bn1 = cache.bpoly(n + 1).clone();
            let e = cache.epoly(n).clone();
            let en1 = cache.epoly(n + 1).clone();
            let reflect = |p: &UniPoly| p.substitute_linear(&r(-1, 1), &Rat::one());
            let sign = Rat::alternating(n as u64);

            assert_eq!(bn1.derivative(), b.scale(&Rat::from_int(n as i64 + 1)));
            assert_eq!(reflect(&b), b.scale(&sign));
            assert_eq!(
                bn1.forward_difference(),
                UniPoly::monomial("x", Rat::from_int(n as i64 + 1), n as usize)
            );
            assert_eq!(en1.derivative(), e.scale(&Rat::from_int(n as i64 + 1)));
            assert_eq!(reflect(&e), e.scale(&sign));
            assert_eq!(
                e.signed_sum(),
                UniPoly::monomial("x", Rat::from_int(2), n as usize)
            );
            assert_eq!(b.eval(&Rat::zero()), *cache.bernoulli(n));
        }
    }
}
