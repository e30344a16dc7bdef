use crate::matrix::{Matrix, MatrixError};
use crate::poly::Polynomial;

use super::{LocError, LocMatrix, MultiplicativeSet};

/// Lift of `b` along `A` over `R_m` by the method of Barakat and
/// Lange-Hegermann, for a maximal ideal `m = <m_1, ..., m_l>`.
///
/// Solves `X * [A; m_1 b; ...; m_l b] = -b` over `R`. A solution
/// `X = (X1 | X2)` gives `-X1 * A = u * b` with `u = 1 + X2 * m`, which lies
/// in `1 + m`, so `-X1 / u` is the lift.
pub fn bl_lift_maximal(set: &MultiplicativeSet, a: &Matrix, b: &[Polynomial]) -> Result<Option<LocMatrix>, LocError> {
    let ring = set.require_ring()?;
    let maximal = set
        .prime()
        .ok_or_else(|| LocError::Precondition("the BL method needs the complement of a maximal ideal".into()))?;
    if b.len() != a.ncols() {
        return Err(MatrixError::Shape(format!("b has width {}, A has {} columns", b.len(), a.ncols())).into());
    }
    let mut stacked = a.clone();
    for mk in maximal.gens() {
        let row = Matrix::row_vector(ring.base(), b.iter().map(|p| mk * p).collect());
        stacked = stacked.vstack(&row)?;
    }
    let rhs = Matrix::row_vector(ring.base(), b.iter().map(|p| -p).collect());
    let Some(x) = ring.lift(&stacked, &rhs)? else {
        return Ok(None);
    };
    let m = a.nrows();
    let row = x.row(0);
    let num: Vec<Polynomial> = row[..m].iter().map(|p| -p).collect();
    let u = row[m..]
        .iter()
        .zip(maximal.gens())
        .fold(ring.one(), |acc, (c, mk)| &acc + &(c * mk));
    let out = LocMatrix::new(set, Matrix::row_vector(ring.base(), num), u)?;
    let lhs = ring.mul_matrix(out.numerator(), a)?;
    let rhs = Matrix::row_vector(ring.base(), b.iter().map(|p| p * out.denominator()).collect());
    if !ring.is_zero_matrix(&lhs.checked_sub(&rhs)?) {
        return Err(LocError::Invariant("BL lift fails its residual check".into()));
    }
    Ok(Some(out))
}
