use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Rat;

use super::{PolyError, UniPoly};

/// A sparse bivariate polynomial over an ordered pair of indeterminates.
///
/// Terms are stored as `(i, j) -> coefficient` for `first^i * second^j`, and
/// zero coefficients are never kept, so equality is exact coefficient-wise
/// comparison of the maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    vars: (String, String),
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero(first: impl Into<String>, second: impl Into<String>) -> Self {
        let vars = (first.into(), second.into());
        assert_ne!(vars.0, vars.1, "indeterminates must be distinct");
        BiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The product `a(first) * b(second)` of two univariate polynomials in
    /// distinct indeterminates.
    pub fn tensor(a: &UniPoly, b: &UniPoly) -> Result<Self, PolyError> {
        if a.var() == b.var() {
            return Err(PolyError::DuplicateVariable(a.var().to_owned()));
        }
        let mut out = BiPoly::zero(a.var(), b.var());
        for (i, ca) in a.coeffs().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs().iter().enumerate() {
                if !cb.is_zero() {
                    out.add_term(i as u32, j as u32, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    /// Adds `c * first^i * second^j`, dropping the entry if it cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    fn check_vars(&self, other: &BiPoly) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(
                format!("({}, {})", self.vars.0, self.vars.1),
                format!("({}, {})", other.vars.0, other.vars.1),
            ))
        }
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = BiPoly::zero(self.vars.0.clone(), self.vars.1.clone());
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rat) -> BiPoly {
        if factor.is_zero() {
            return BiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        BiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c * factor))
                .collect(),
        }
    }

    fn var_index(&self, var: &str) -> Result<usize, PolyError> {
        if var == self.vars.0 {
            Ok(0)
        } else if var == self.vars.1 {
            Ok(1)
        } else {
            Err(PolyError::UnknownVariable(var.to_owned()))
        }
    }

    /// Formal partial derivative with respect to the named indeterminate.
    pub fn derivative(&self, var: &str) -> Result<BiPoly, PolyError> {
        let idx = self.var_index(var)?;
        let mut out = BiPoly::zero(self.vars.0.clone(), self.vars.1.clone());
        for (&(i, j), c) in &self.terms {
            let (e, rest) = if idx == 0 { (i, (i.wrapping_sub(1), j)) } else { (j, (i, j.wrapping_sub(1))) };
            if e == 0 {
                continue;
            }
            out.add_term(rest.0, rest.1, c * &Rat::from_int(e as i64));
        }
        Ok(out)
    }

    /// Substitutes a rational for one indeterminate, leaving a univariate
    /// polynomial in the other.
    pub fn eval_partial(&self, var: &str, at: &Rat) -> Result<UniPoly, PolyError> {
        let idx = self.var_index(var)?;
        let other = if idx == 0 { &self.vars.1 } else { &self.vars.0 };
        let max_sub = self
            .terms
            .keys()
            .map(|&(i, j)| if idx == 0 { i } else { j })
            .max()
            .unwrap_or(0);
        let mut powers = Vec::with_capacity(max_sub as usize + 1);
        powers.push(Rat::one());
        for _ in 0..max_sub {
            powers.push(powers.last().expect("nonempty") * at);
        }
        let max_keep = self
            .terms
            .keys()
            .map(|&(i, j)| if idx == 0 { j } else { i })
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); max_keep as usize + 1];
        for (&(i, j), c) in &self.terms {
            let (sub, keep) = if idx == 0 { (i, j) } else { (j, i) };
            coeffs[keep as usize] += &(c * &powers[sub as usize]);
        }
        Ok(UniPoly::new(other.clone(), coeffs))
    }

    /// Full evaluation at a point `(first, second)`.
    pub fn eval_full(&self, first: &Rat, second: &Rat) -> Rat {
        let var = self.vars.0.clone();
        self.eval_partial(&var, first)
            .expect("own indeterminate")
            .eval(second)
    }

    /// Degree in the named indeterminate; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u32>, PolyError> {
        let idx = self.var_index(var)?;
        Ok(self
            .terms
            .keys()
            .map(|&(i, j)| if idx == 0 { i } else { j })
            .max())
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

macro_rules! bi_binop {
    ($Op:ident, $method:ident, $checked:ident) => {
        impl $Op<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                self.$checked(rhs).expect("mismatched indeterminates")
            }
        }
        impl $Op for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

bi_binop!(Add, add, checked_add);
bi_binop!(Sub, sub, checked_sub);
bi_binop!(Mul, mul, checked_mul);

/// Graded-lex order on monomials: total degree first, then the power of the
/// first indeterminate. Witness scans and rendering both use it.
fn graded_lex(a: &(u32, u32), b: &(u32, u32)) -> std::cmp::Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// First differing monomial between two bivariate polynomials in ascending
/// graded-lex order, with both coefficients.
pub(crate) fn first_term_diff(a: &BiPoly, b: &BiPoly) -> Option<((u32, u32), Rat, Rat)> {
    let mut keys: Vec<(u32, u32)> = a.terms.keys().chain(b.terms.keys()).copied().collect();
    keys.sort_by(graded_lex);
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let ca = a.coeff(k.0, k.1);
        let cb = b.coeff(k.0, k.1);
        (ca != cb).then_some((k, ca, cb))
    })
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_lex(b, a));
        let mut first = true;
        for &&(i, j) in &keys {
            let c = &self.terms[&(i, j)];
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            for (var, e) in [(&self.vars.0, i), (&self.vars.1, j)] {
                if e == 1 {
                    mono.push_str(&format!("{var} "));
                } else if e > 1 {
                    mono.push_str(&format!("{var}^{e} "));
                }
            }
            let mono = mono.trim_end();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag} {mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn x_plus_y() -> BiPoly {
        let mut p = BiPoly::zero("x", "y");
        p.add_term(1, 0, Rat::one());
        p.add_term(0, 1, Rat::one());
        p
    }

    #[test]
    fn square_of_sum() {
        let sq = x_plus_y().checked_mul(&x_plus_y()).unwrap();
        let mut expect = BiPoly::zero("x", "y");
        expect.add_term(2, 0, Rat::one());
        expect.add_term(1, 1, Rat::from_int(2));
        expect.add_term(0, 2, Rat::one());
        assert_eq!(sq, expect);
    }

    #[test]
    fn cancellation_removes_entries() {
        let p = x_plus_y();
        let diff = p.checked_sub(&p).unwrap();
        assert!(diff.is_zero());
        assert_eq!(diff.terms.len(), 0);
    }

    #[test]
    fn tensor_product() {
        // (x^2 + 1) * y
        let xp = UniPoly::new("x", vec![Rat::one(), Rat::zero(), Rat::one()]);
        let yp = UniPoly::var_poly("y");
        let t = BiPoly::tensor(&xp, &yp).unwrap();
        assert_eq!(t.coeff(2, 1), Rat::one());
        assert_eq!(t.coeff(0, 1), Rat::one());
        assert_eq!(t.coeff(1, 1), Rat::zero());
        assert!(BiPoly::tensor(&xp, &xp).is_err());
    }

    #[test]
    fn derivative_by_name() {
        // x^2 y + y^2
        let mut p = BiPoly::zero("x", "y");
        p.add_term(2, 1, Rat::one());
        p.add_term(0, 2, Rat::one());
        let dy = p.derivative("y").unwrap();
        assert_eq!(dy.coeff(2, 0), Rat::one());
        assert_eq!(dy.coeff(0, 1), Rat::from_int(2));
        let dx = p.derivative("x").unwrap();
        assert_eq!(dx.coeff(1, 1), Rat::from_int(2));
        assert_eq!(
            p.derivative("z"),
            Err(PolyError::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn partial_and_full_eval() {
        // x^2 + y at y = -1 -> x^2 - 1
        let mut p = BiPoly::zero("x", "y");
        p.add_term(2, 0, Rat::one());
        p.add_term(0, 1, Rat::one());
        let sliced = p.eval_partial("y", &r(-1, 1)).unwrap();
        assert_eq!(
            sliced,
            UniPoly::new("x", vec![r(-1, 1), Rat::zero(), Rat::one()])
        );
        assert_eq!(p.eval_full(&r(2, 1), &r(3, 1)), r(7, 1));
        assert_eq!(
            BiPoly::zero("x", "y").eval_full(&r(5, 3), &r(-7, 2)),
            Rat::zero()
        );
    }

    #[test]
    fn degree_in_each_var() {
        let mut p = BiPoly::zero("x", "y");
        p.add_term(3, 1, Rat::one());
        p.add_term(1, 4, r(1, 2));
        assert_eq!(p.degree_in("x").unwrap(), Some(3));
        assert_eq!(p.degree_in("y").unwrap(), Some(4));
        assert_eq!(BiPoly::zero("x", "y").degree_in("x").unwrap(), None);
    }

    #[test]
    fn var_mismatch_rejected() {
        let p = BiPoly::zero("x", "y");
        let q = BiPoly::zero("x", "z");
        assert!(p.checked_add(&q).is_err());
    }

    #[test]
    fn witness_in_graded_lex_order() {
        let mut a = BiPoly::zero("x", "y");
        a.add_term(2, 0, Rat::one());
        a.add_term(0, 1, Rat::one());
        let mut b = BiPoly::zero("x", "y");
        b.add_term(2, 0, r(1, 2));
        b.add_term(0, 1, Rat::one());
        // (0,1) has total degree 1 < 2, and matches; first diff is (2,0).
        assert_eq!(
            first_term_diff(&a, &b),
            Some(((2, 0), Rat::one(), r(1, 2)))
        );
        assert_eq!(first_term_diff(&a, &a), None);
    }

    #[test]
    fn display_graded_lex_descending() {
        let mut p = BiPoly::zero("x", "y");
        p.add_term(2, 1, r(1, 2));
        p.add_term(1, 1, r(-2, 1));
        p.add_term(0, 0, r(1, 6));
        assert_eq!(p.to_string(), "1/2 x^2 y - 2 x y + 1/6");
    }
}
