//! Exact polynomial rings over [`Rat`](crate::arith::Rat).
//!
//! [`UniPoly`] is a dense univariate polynomial; [`BiPoly`] is a sparse
//! bivariate polynomial over an ordered pair of indeterminates. Both carry
//! their indeterminate names and reject arithmetic across mismatched rings,
//! with one deliberate loosening: a constant polynomial is compatible with
//! every ring, since constants live in all of them.
//!
//! Rendering is descending by power ("x^2 - x + 1/6"); a coefficient and its
//! monomial are space-separated when both are present.

mod bi;
mod uni;

pub use bi::BiPoly;
pub use uni::UniPoly;
pub(crate) use bi::first_term_diff;
pub(crate) use uni::{first_coeff_diff, ScaledIntPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("mismatched indeterminates: {0:?} vs {1:?}")]
    VarMismatch(String, String),
    #[error("unknown indeterminate {0:?}")]
    UnknownVariable(String),
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("tensor factors must use distinct indeterminates, both named {0:?}")]
    DuplicateVariable(String),
}
