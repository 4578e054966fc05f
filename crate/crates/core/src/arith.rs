//! Exact scalar arithmetic: arbitrary-precision integers, normalized
//! rationals, binomial coefficients, primality and p-adic valuations.
//!
//! Every value is immutable after construction and every operation is exact.
//! `Rat` is kept normalized at all times: `gcd(|num|, den) = 1`, `den > 0`,
//! and zero is stored as `0/1`. The canonical string form is `num/den`, with
//! the denominator omitted when it is 1 (`"-691/2730"`, `"3"`, `"0"`).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use thiserror::Error;

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not a prime (p >= 2 required)")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `num/den`, normalizing sign and common factors.
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Self, ArithError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    /// Exact division; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Rat) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(num_traits::Pow::pow(&self.0, exp as i32))
    }

    /// `(-1)^k` as a rational.
    pub fn alternating(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Rat::one()
        } else {
            -Rat::one()
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational already renders "num/den" and drops a unit denominator.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({})", self.0)
    }
}

impl FromStr for Rat {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| Int::from_str(t).map_err(|_| ArithError::Parse(s.to_owned()));
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(ArithError::ZeroDenominator);
                }
                Ok(Rat(BigRational::new(parse_int(num)?, den)))
            }
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<Int> for Rat {
    fn from(n: Int) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! rat_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $Op<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $Op<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $Op<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Exact binomial coefficient C(n, k).
///
/// Out-of-range `k` (negative or above `n`) yields 0; the sum manipulations
/// in the identity suite rely on that convention, e.g. the `r = 1` term of
/// C(n-1, r-2). Negative `n` is unrepresentable by the signature.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

/// The full row C(n, 0..=n), computed incrementally. Cheaper than repeated
/// `binomial` calls when a sum walks the whole row.
pub fn binomial_row(n: u64) -> Vec<Int> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Int::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * Int::from(n - k) / Int::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// Deterministic trial-division primality check. The inputs in this crate
/// stay tiny (< 10^4), so nothing faster is warranted.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes strictly below `bound`, by sieve of Eratosthenes.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound <= 2 {
        return Vec::new();
    }
    let bound = bound as usize;
    let mut sieve = vec![true; bound];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p < bound {
        if sieve[p] {
            let mut q = p * p;
            while q < bound {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &is_p)| is_p.then_some(i as u64))
        .collect()
}

/// A p-adic valuation: finite, or +infinity for the zero rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_nonnegative(&self) -> bool {
        match self {
            Valuation::Finite(v) => *v >= 0,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

fn int_valuation(n: &Int, p: &Int) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// p-adic valuation v_p(q) = v_p(num) - v_p(den), with v_p(0) = +infinity.
///
/// Rejects non-prime `p`; a rational is p-integral iff its valuation is >= 0.
pub fn padic_valuation(q: &Rat, p: u64) -> Result<Valuation, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = Int::from(p);
    Ok(Valuation::Finite(
        int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p),
    ))
}

/// True iff v_p(q) >= 0 (denominator coprime to p).
pub fn is_p_integral(q: &Rat, p: u64) -> Result<bool, ArithError> {
    Ok(padic_valuation(q, p)?.is_nonnegative())
}
