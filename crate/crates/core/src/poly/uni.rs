use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::arith::{binomial_row, Int, Rat};

use super::PolyError;

/// A dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored ascending (`coeffs[k]` multiplies `var^k`) and
/// kept canonical: the vector never ends in a zero, so the zero polynomial
/// has an empty vector and [`UniPoly::degree`] returns `None` for it.
#[derive(Clone, Debug)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly {
            var: var.into(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(var: impl Into<String>) -> Self {
        UniPoly {
            var: var.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: impl Into<String>, value: Rat) -> Self {
        Self::new(var, vec![value])
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, Rat::one())
    }

    /// The polynomial `coeff * var^k`.
    pub fn monomial(var: impl Into<String>, coeff: Rat, k: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = coeff;
        UniPoly {
            var: var.into(),
            coeffs,
        }
    }

    /// The identity polynomial `var`.
    pub fn var_poly(var: impl Into<String>) -> Self {
        Self::monomial(var, Rat::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Picks the indeterminate shared by two operands. Constants are
    /// compatible with every ring.
    fn unify_var<'a>(&'a self, other: &'a UniPoly) -> Result<&'a str, PolyError> {
        if self.var == other.var || other.is_constant() {
            Ok(&self.var)
        } else if self.is_constant() {
            Ok(&other.var)
        } else {
            Err(PolyError::VarMismatch(self.var.clone(), other.var.clone()))
        }
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        let var = self.unify_var(other)?.to_owned();
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Ok(UniPoly::new(var, coeffs))
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        let var = self.unify_var(other)?.to_owned();
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(var));
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(UniPoly::new(var, coeffs))
    }

    pub fn scale(&self, factor: &Rat) -> UniPoly {
        if factor.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        UniPoly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> UniPoly {
        let mut acc = UniPoly::one(self.var.clone());
        for _ in 0..exp {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Formal derivative with respect to the polynomial's own indeterminate.
    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rat::from_int(k as i64))
            .collect();
        UniPoly::new(self.var.clone(), coeffs)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Composition with the linear map `var -> a*var + b`.
    pub fn substitute_linear(&self, a: &Rat, b: &Rat) -> UniPoly {
        let mut acc = UniPoly::zero(self.var.clone());
        for c in self.coeffs.iter().rev() {
            // acc <- acc*(a x + b) + c
            let mut next = vec![Rat::zero(); acc.coeffs.len() + 1];
            for (k, v) in acc.coeffs.iter().enumerate() {
                if !v.is_zero() {
                    next[k + 1] += &(v * a);
                    next[k] += &(v * b);
                }
            }
            next[0] += c;
            acc = UniPoly::new(self.var.clone(), next);
        }
        acc
    }

    /// `f(var + 1)`.
    pub fn shift_one(&self) -> UniPoly {
        self.substitute_linear(&Rat::one(), &Rat::one())
    }

    /// Forward difference `f(var+1) - f(var)`; drops the degree of any
    /// nonconstant polynomial by exactly one.
    pub fn forward_difference(&self) -> UniPoly {
        self.shift_one()
            .checked_sub(self)
            .expect("same ring")
    }

    /// Signed sum `f(var+1) + f(var)`; doubles the leading coefficient.
    pub fn signed_sum(&self) -> UniPoly {
        self.shift_one()
            .checked_add(self)
            .expect("same ring")
    }

    /// The unique `F` with `forward_difference(F) = self` and zero constant
    /// term. The difference operator kills exactly the constants, so this
    /// pins one representative; callers add their own constant if needed.
    pub fn anti_difference(&self) -> UniPoly {
        let Some(deg) = self.degree() else {
            return UniPoly::zero(self.var.clone());
        };
        let mut residue = self.coeffs.clone();
        let mut out = vec![Rat::zero(); deg + 2];
        for k in (1..=deg + 1).rev() {
            let top = residue[k - 1].clone();
            if top.is_zero() {
                continue;
            }
            // forward_difference(x^k) = sum_{j<k} C(k,j) x^j, leading term k x^(k-1)
            let a_k = top / Rat::from_int(k as i64);
            let row = binomial_row(k as u64);
            for (j, c) in row.iter().take(k).enumerate() {
                residue[j] -= &(&a_k * &Rat::from_int(c.clone()));
            }
            out[k] = a_k;
        }
        debug_assert!(residue.iter().all(Rat::is_zero));
        UniPoly::new(self.var.clone(), out)
    }

    /// The unique `F` with `signed_sum(F) = self`. The coefficient map of
    /// the signed sum is upper-triangular with diagonal 2, so the system is
    /// solved exactly from the top degree down.
    pub fn solve_signed_sum(&self) -> UniPoly {
        let Some(deg) = self.degree() else {
            return UniPoly::zero(self.var.clone());
        };
        let mut residue = self.coeffs.clone();
        let mut out = vec![Rat::zero(); deg + 1];
        let two = Rat::from_int(2);
        for k in (0..=deg).rev() {
            let a_k = residue[k].clone() / two.clone();
            if a_k.is_zero() {
                continue;
            }
            // signed_sum(x^k) = 2 x^k + sum_{j<k} C(k,j) x^j
            residue[k] = Rat::zero();
            let row = binomial_row(k as u64);
            for (j, c) in row.iter().take(k).enumerate() {
                residue[j] -= &(&a_k * &Rat::from_int(c.clone()));
            }
            out[k] = a_k;
        }
        debug_assert!(residue.iter().all(Rat::is_zero));
        UniPoly::new(self.var.clone(), out)
    }

    /// Exact division, erroring when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly, PolyError> {
        let var = self.unify_var(divisor)?.to_owned();
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let ddeg = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(ddeg);
        let mut quot = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + ddeg].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&q * d);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonzeroRemainder);
        }
        Ok(UniPoly::new(var, quot))
    }
}

/// Mathematical equality: constants compare equal across indeterminates.
impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.is_constant())
    }
}

impl Eq for UniPoly {}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! uni_binop {
    ($Op:ident, $method:ident, $checked:ident) => {
        impl $Op<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$checked(rhs).expect("mismatched indeterminates")
            }
        }
        impl $Op for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

uni_binop!(Add, add, checked_add);
uni_binop!(Sub, sub, checked_sub);
uni_binop!(Mul, mul, checked_mul);

fn fmt_term(f: &mut fmt::Formatter<'_>, var: &str, c: &Rat, k: usize, first: bool) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if k == 0 {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag} ")?;
    }
    if k == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{k}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_term(f, &self.var, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Locates the lowest-degree differing coefficient between two polynomials,
/// for mismatch witnesses.
pub(crate) fn first_coeff_diff(a: &UniPoly, b: &UniPoly) -> Option<(usize, Rat, Rat)> {
    let len = a.coeffs.len().max(b.coeffs.len());
    (0..len).find_map(|k| {
        let ca = a.coeff(k);
        let cb = b.coeff(k);
        (ca != cb).then_some((k, ca, cb))
    })
}

/// A polynomial with its denominators cleared: `(sum coeffs[k] t^k) / den`.
///
/// Evaluating a big rational polynomial at an integer point by Horner costs a
/// gcd per step; this form does the whole walk in integer arithmetic and
/// reduces once at the end. Used by the derivative-fact sweeps, where the
/// binomial polynomials have factorial-sized denominators.
#[derive(Clone, Debug)]
pub(crate) struct ScaledIntPoly {
    coeffs: Vec<Int>,
    den: Int,
}

impl ScaledIntPoly {
    /// Wraps already-cleared integer coefficients over a fixed denominator.
    pub(crate) fn from_parts(coeffs: Vec<Int>, den: Int) -> Self {
        debug_assert!(!den.is_zero());
        ScaledIntPoly { coeffs, den }
    }

    #[cfg(test)]
    pub(crate) fn from_poly(p: &UniPoly) -> Self {
        use num_integer::Integer;
        use num_traits::One;
        let den = p
            .coeffs()
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        ScaledIntPoly { coeffs, den }
    }

    #[cfg(test)]
    pub(crate) fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Int::from(k))
            .collect();
        ScaledIntPoly {
            coeffs,
            den: self.den.clone(),
        }
    }

    pub(crate) fn eval_int(&self, at: i64) -> Rat {
        let at = Int::from(at);
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &at + c;
        }
        Rat::new(acc, self.den.clone()).expect("nonzero denominator")
    }
}
