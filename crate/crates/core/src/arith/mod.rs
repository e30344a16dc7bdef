//! Exact coefficient arithmetic: big integers, rationals and prime fields.
//!
//! Every polynomial in the crate has coefficients in a [`Field`], either the
//! rationals or a prime field chosen at runtime. Field elements are values of
//! [`Coeff`]; the two variants never mix inside one ring.

mod coeff;
mod integer;
mod prime_field;

pub use coeff::{Coeff, Field};
pub use integer::{extended_gcd, Integer, Rational};
pub use prime_field::{PrimeField, PrimeFieldElement};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("elements belong to different fields")]
    FieldMismatch,
}

/// The four field operations, for callers that dispatch on an operator value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to two elements of the same field.
pub fn field_arithmetic(a: &Coeff, b: &Coeff, op: FieldOp) -> Result<Coeff, ArithError> {
    if !a.same_field(b) {
        return Err(ArithError::FieldMismatch);
    }
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}
