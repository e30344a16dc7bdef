//! Linear algebra over localizations `S^-1 R`.
//!
//! A row `b` lifts along `A` over `S^-1 R` exactly when the dom ideal
//! `dom_R([b]_A) = { r : r*b in rowspace(A) }` meets `S`. Generators of the
//! dom ideal come with cofactors from the syzygies of `[b; A]`, so a witness
//! `sum a_i r_i` in `S` turns directly into a lift.

mod bl;
mod dom;
mod set;
mod solve;

use std::fmt;

use thiserror::Error;

use crate::matrix::{Matrix, MatrixError};
use crate::poly::Polynomial;
use crate::ring::RingError;

pub use bl::bl_lift_maximal;
pub use dom::{dom_with_cofactors, DomGenerator};
pub use set::{EmptinessCertificate, LocProblem, LocWitness, MultiplicativeSet};
pub use solve::{assemble_lift, lift_from_dom, loc_is_zero, loc_lift, loc_lift_row, loc_syzygies, loc_weak_lift, RowLift};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocError {
    #[error("operands do not match the ring of the multiplicative set")]
    RingMismatch,
    #[error("denominator {0} is not in the multiplicative set")]
    DenominatorNotInSet(String),
    #[error("T*A is not zero in the localization")]
    NotALocalizedSyzygy,
    #[error("{0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl From<MatrixError> for LocError {
    fn from(e: MatrixError) -> Self {
        LocError::Ring(e.into())
    }
}

/// A matrix over `S^-1 R` written as `numerator / denominator` with one common
/// denominator, which is checked to lie in `S` on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct LocMatrix {
    num: Matrix,
    den: Polynomial,
}

impl LocMatrix {
    pub fn new(set: &MultiplicativeSet, num: Matrix, den: Polynomial) -> Result<LocMatrix, LocError> {
        let ring = set.require_ring()?;
        if **num.ring() != **ring.base() {
            return Err(LocError::RingMismatch);
        }
        if !set.contains(&den)? {
            return Err(LocError::DenominatorNotInSet(den.to_string()));
        }
        Ok(LocMatrix {
            num: ring.reduce_matrix(&num),
            den: ring.reduce(&den),
        })
    }

    /// `num / 1`.
    pub fn integral(set: &MultiplicativeSet, num: Matrix) -> Result<LocMatrix, LocError> {
        let one = set.require_ring()?.one();
        LocMatrix::new(set, num, one)
    }

    pub fn numerator(&self) -> &Matrix {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn nrows(&self) -> usize {
        self.num.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.num.ncols()
    }
}

impl fmt::Debug for LocMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / ({})", self.num, self.den)
    }
}

impl fmt::Display for LocMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
