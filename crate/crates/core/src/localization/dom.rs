use crate::matrix::{Matrix, MatrixError};
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::LocError;

/// A generator `r` of `dom_R([b]_A)` with its certificate: `r*b + L*A = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomGenerator {
    pub r: Polynomial,
    pub l: Vec<Polynomial>,
}

/// Generators of `dom_R([b]_A)` read off from the syzygies of `[b; A]`.
pub fn dom_with_cofactors(ring: &Ring, a: &Matrix, b: &[Polynomial]) -> Result<Vec<DomGenerator>, LocError> {
    if b.len() != a.ncols() {
        return Err(MatrixError::Shape(format!("b has width {}, A has {} columns", b.len(), a.ncols())).into());
    }
    let stacked = Matrix::row_vector(ring.base(), b.to_vec()).vstack(a)?;
    let syz = ring.syzygies(&stacked)?;
    let gens: Vec<DomGenerator> = (0..syz.nrows())
        .map(|i| {
            let row = syz.row(i);
            // monic r for readable output; the unit scales the cofactors too
            let unit = row[0].leading_coeff().map(|c| c.inv().expect("nonzero"));
            let scale = |p: &Polynomial| unit.as_ref().map_or_else(|| p.clone(), |u| p.scale(u));
            DomGenerator {
                r: scale(&row[0]),
                l: row[1..].iter().map(scale).collect(),
            }
        })
        .collect();
    for g in &gens {
        if !certificate_holds(ring, a, b, g) {
            return Err(LocError::Invariant("dom generator fails r*b + L*A = 0".into()));
        }
    }
    Ok(gens)
}

pub(crate) fn certificate_holds(ring: &Ring, a: &Matrix, b: &[Polynomial], g: &DomGenerator) -> bool {
    (0..a.ncols()).all(|j| {
        let mut acc = &g.r * &b[j];
        for (k, lk) in g.l.iter().enumerate() {
            acc = &acc + &(lk * a.get(k, j));
        }
        ring.is_zero(&acc)
    })
}
