//! Truncated formal power series: the generating-function oracle.
//!
//! A [`Series`] of order `N` stores exactly the coefficients `c_0..c_N` and
//! never reads beyond them. Mixing truncation orders is an error rather than
//! an implicit re-truncation, so a sloppy oracle comparison cannot hide a
//! missing term. The coefficient ring is either [`Rat`] or [`UniPoly`]
//! (polynomials in `x`), which covers the three exponential generating
//! functions used here: t/(e^t - 1), t e^{xt}/(e^t - 1) and 2 e^{xt}/(e^t + 1).

use thiserror::Error;

use crate::arith::Rat;
use crate::poly::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("division requires an invertible constant term")]
    NonInvertibleConstant,
}

/// Coefficient ring for a series: exact ring operations plus the two scalar
/// helpers series arithmetic needs.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact division by a positive integer scalar.
    fn div_int(&self, k: u64) -> Self;
    /// Multiplicative inverse when one exists in the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_int(&self, k: u64) -> Self {
        self * &Rat::new(1, k as i64).expect("k > 0")
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero("x")
    }
    fn one() -> Self {
        UniPoly::one("x")
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("series coefficient ring")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("series coefficient ring")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("series coefficient ring")
    }
    fn div_int(&self, k: u64) -> Self {
        self.scale(&Rat::new(1, k as i64).expect("k > 0"))
    }
    /// Only nonzero constants are invertible in the polynomial ring.
    fn inverse(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            let c = self.coeff(0).recip().ok()?;
            Some(UniPoly::constant(self.var().to_owned(), c))
        } else {
            None
        }
    }
}

/// A formal power series truncated at order `N`: exactly `N + 1` stored
/// coefficients of `t^0..t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Builds a series from coefficients `c_0..c_N`; the order is implied by
    /// the length, which must be at least 1.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    /// Cauchy product truncated at the shared order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(Series { coeffs })
    }

    /// Truncated division; requires the divisor's constant term to be
    /// invertible in the coefficient ring.
    pub fn try_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let inv = other.coeffs[0]
            .inverse()
            .ok_or(SeriesError::NonInvertibleConstant)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            // c_k = inv * (a_k - sum_{i=1..=k} b_i c_{k-i})
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &other.coeffs[i];
                if !b.is_zero() {
                    acc = acc.sub(&b.mul(&out[k - i]));
                }
            }
            out.push(inv.mul(&acc));
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, factor: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mul(factor)).collect(),
        }
    }
}

impl Series<Rat> {
    /// Reinterprets rational coefficients as constant polynomials in `x`.
    pub fn lift_to_poly(&self) -> Series<UniPoly> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| UniPoly::constant("x", c.clone()))
                .collect(),
        }
    }
}

/// The exponential series of `scale * t`: coefficients `scale^k / k!`.
pub fn exp_series<C: Coeff>(scale: &C, order: usize) -> Series<C> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(C::one());
    for k in 1..=order {
        let prev: &C = &coeffs[k - 1];
        coeffs.push(prev.mul(scale).div_int(k as u64));
    }
    Series::from_coeffs(coeffs)
}

/// `(e^t - 1)/t` built directly with coefficients `1/(k+1)!`, sidestepping
/// the removable singularity at t = 0.
fn exp_minus_one_over_t(order: usize) -> Series<Rat> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rat::one());
    for k in 1..=order {
        let prev = coeffs[k - 1].clone();
        coeffs.push(prev.div_int(k as u64 + 1));
    }
    Series::from_coeffs(coeffs)
}

/// Exponential generating function of the Bernoulli numbers,
/// `t/(e^t - 1)`: coefficient `n` is `B_n / n!`.
pub fn bernoulli_egf(order: usize) -> Series<Rat> {
    Series::one(order)
        .try_div(&exp_minus_one_over_t(order))
        .expect("constant term 1 is invertible")
}

/// Exponential generating function of the Bernoulli polynomials,
/// `t e^{xt}/(e^t - 1)`: coefficient `n` is `B_n(x) / n!`.
pub fn bernoulli_poly_egf(order: usize) -> Series<UniPoly> {
    let x = UniPoly::var_poly("x");
    bernoulli_egf(order)
        .lift_to_poly()
        .try_mul(&exp_series(&x, order))
        .expect("same order")
}

/// Exponential generating function of the Euler polynomials,
/// `2 e^{xt}/(e^t + 1)`: coefficient `n` is `E_n(x) / n!`.
pub fn euler_poly_egf(order: usize) -> Series<UniPoly> {
    let x = UniPoly::var_poly("x");
    let numerator = exp_series(&x, order).scale(&UniPoly::constant("x", Rat::from_int(2)));
    // e^t + 1 over constant polynomials: 2, 1, 1/2!, 1/3!, ...
    let mut denom = Vec::with_capacity(order + 1);
    denom.push(UniPoly::constant("x", Rat::from_int(2)));
    let mut factorial = Rat::one();
    for k in 1..=order {
        factorial = factorial.div_int(k as u64);
        denom.push(UniPoly::constant("x", factorial.clone()));
    }
    numerator
        .try_div(&Series::from_coeffs(denom))
        .expect("constant term 2 is invertible")
}
