//! Exact-arithmetic toolkit for Bernoulli numbers, Bernoulli/Euler
//! polynomials and harmonic numbers, together with a verification suite
//! that checks a family of classical identities relating them — all over
//! exact rationals, with an independent generating-function oracle.
//!
//! The crate is organized along its data:
//!
//! - [`arith`]: arbitrary-precision integers and normalized rationals,
//!   binomial coefficients, primes and p-adic valuations.
//! - [`poly`]: dense univariate and sparse bivariate polynomial rings with
//!   the finite-difference calculus (forward difference, signed sum, their
//!   inverses, derivatives, linear substitution).
//! - [`series`]: truncated formal power series over rationals or
//!   polynomials — the generating-function oracle.
//! - [`sequences`]: memoized canonical producers of `B_n`, `B_n(x)`,
//!   `E_n(x)`, `H_n`, `H_n^(2)` and the binomial polynomials `C(y, k)`,
//!   plus the von Staudt–Clausen and Wolstenholme side checks.
//! - [`identity`]: each supported identity encoded as an exact equality of
//!   two independently computed sides, producing structured verdicts.
//!
//! Verification sweeps over parameter grids are embarrassingly parallel and
//! run on rayon when the default `parallel` feature is enabled; disabling it
//! leaves a dependency-free sequential path with identical results.

pub mod arith;
pub mod identity;
mod par;
pub mod poly;
pub mod sequences;
pub mod series;

pub use arith::{binomial, is_p_integral, padic_valuation, Int, Rat, Valuation};
pub use identity::{
    run_suite, IdentityId, IdentityReport, Params, SuiteOptions, SuiteReport, ALL_IDENTITIES,
};
pub use poly::{BiPoly, PolyError, UniPoly};
pub use sequences::{HarmonicOrder, SequenceCache};
pub use series::{bernoulli_egf, bernoulli_poly_egf, euler_poly_egf, exp_series, Series};
