//! Sparse multivariate polynomials over a runtime-chosen field.
//!
//! A [`PolyRing`] fixes the field, the variable names and a global monomial
//! ordering. [`Polynomial`] values hold a shared handle to their ring and a
//! term list sorted strictly descending under that ordering.

mod monomial;
mod ordering;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use ordering::MonomialOrdering;
pub use parse::{parse_terms, ParseError, ParseErrorKind, RawTerm};
pub use polynomial::{PolyRing, Polynomial, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("monomial length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    NoLeadingTerm,
    #[error("invalid ring: {0}")]
    BadRing(String),
    #[error("invalid ordering: {0}")]
    BadOrdering(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
