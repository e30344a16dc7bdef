use std::sync::Arc;

use crate::matrix::{Matrix, MatrixError};
use crate::poly::{PolyRing, Polynomial};

use super::reduce::reduce_inner;
use super::{buchberger, normal_form_with_cofactors, ModuleElement, ModuleOrdering};

/// Gröbner basis of the rows of `[A | I_m]` under a left-block-priority ordering.
///
/// Every basis row `w` satisfies `w.left = w.right * A`. Rows whose left block
/// vanishes form a Gröbner basis of the syzygy module of `A`; the others give a
/// Gröbner basis of the row module of `A`. Kept around so that later lifts are
/// single reductions.
#[derive(Debug, Clone)]
pub struct AugmentedGb {
    source: Matrix,
    ordering: ModuleOrdering,
    rows: Vec<ModuleElement>,
    syz_rows: Vec<ModuleElement>,
}

impl AugmentedGb {
    pub fn new(a: &Matrix) -> AugmentedGb {
        let ring = a.ring().clone();
        let (m, n) = (a.nrows(), a.ncols());
        let ordering = ModuleOrdering::left_priority(ring.ordering().clone(), n, m);
        let gens: Vec<ModuleElement> = (0..m)
            .map(|i| {
                let mut comps = a.row(i).to_vec();
                comps.extend((0..m).map(|j| if i == j { ring.one() } else { ring.zero() }));
                ModuleElement::new(&ring, comps)
            })
            .collect();
        let rows = buchberger(&gens, &ordering);
        let syz_rows = rows
            .iter()
            .filter(|r| r.components()[..n].iter().all(Polynomial::is_zero))
            .cloned()
            .collect();
        let out = AugmentedGb {
            source: a.clone(),
            ordering,
            rows,
            syz_rows,
        };
        debug_assert!(out.rows.iter().all(|w| out.row_identity_holds(w)));
        out
    }

    fn row_identity_holds(&self, w: &ModuleElement) -> bool {
        let n = self.source.ncols();
        let right = Matrix::row_vector(self.ring(), w.components()[n..].to_vec());
        let left = Matrix::row_vector(self.ring(), w.components()[..n].to_vec());
        &right * &self.source == left
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.source.ring()
    }

    pub fn source(&self) -> &Matrix {
        &self.source
    }

    pub fn ordering(&self) -> &ModuleOrdering {
        &self.ordering
    }

    pub fn rows(&self) -> &[ModuleElement] {
        &self.rows
    }

    /// The universal syzygy matrix `L` (`o x m`), rows in basis order.
    pub fn syzygies(&self) -> Matrix {
        let n = self.source.ncols();
        let m = self.source.nrows();
        let rows = self
            .syz_rows
            .iter()
            .map(|r| r.components()[n..].to_vec())
            .collect();
        Matrix::from_rows(self.ring(), m, rows)
    }

    /// Some `x` with `x * A = b`, or `None` when `b` is not in the row module.
    pub fn lift_row(&self, b: &[Polynomial]) -> Result<Option<Vec<Polynomial>>, MatrixError> {
        let (m, n) = (self.source.nrows(), self.source.ncols());
        if b.len() != n {
            return Err(MatrixError::Shape(format!(
                "row of width {} against {} columns",
                b.len(),
                n
            )));
        }
        let ring = self.ring();
        let mut comps = b.to_vec();
        comps.extend(std::iter::repeat_n(ring.zero(), m));
        let v = ModuleElement::new(ring, comps);
        let Some(nf) = reduce_inner(&v, &self.rows, &self.ordering, Some(n)) else {
            return Ok(None);
        };
        let rem = nf.remainder.into_components();
        if rem[..n].iter().any(|p| !p.is_zero()) {
            return Err(MatrixError::Invariant("left block survived reduction".into()));
        }
        Ok(Some(rem[n..].iter().map(|p| -p).collect()))
    }

    /// Left block of the normal form of `[b | 0]`; zero exactly when `b` is in
    /// the row module of `A`.
    pub fn residue(&self, b: &[Polynomial]) -> Vec<Polynomial> {
        let (m, n) = (self.source.nrows(), self.source.ncols());
        let ring = self.ring();
        let mut comps = b.to_vec();
        comps.extend(std::iter::repeat_n(ring.zero(), m));
        let v = ModuleElement::new(ring, comps);
        let mut rem = normal_form_with_cofactors(&v, &self.rows, &self.ordering)
            .remainder
            .into_components();
        rem.truncate(n);
        rem
    }

    /// Row-by-row lift of `B` along `A`.
    pub fn lift(&self, b: &Matrix) -> Result<Option<Matrix>, MatrixError> {
        let mut rows = Vec::with_capacity(b.nrows());
        for i in 0..b.nrows() {
            match self.lift_row(b.row(i))? {
                Some(x) => rows.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_rows(self.ring(), self.source.nrows(), rows)))
    }

    /// `U` with `U * L = T` for a syzygy matrix `T` of `A`, by reduction against
    /// the syzygy rows of the basis.
    pub fn lift_along_syzygies(&self, t: &Matrix) -> Result<Matrix, MatrixError> {
        let (m, n) = (self.source.nrows(), self.source.ncols());
        if t.ncols() != m {
            return Err(MatrixError::Shape(format!(
                "T has {} columns, A has {} rows",
                t.ncols(),
                m
            )));
        }
        if !t.checked_mul(&self.source)?.is_zero() {
            return Err(MatrixError::NotASyzygy);
        }
        let ring = self.ring();
        let mut out = Vec::with_capacity(t.nrows());
        for i in 0..t.nrows() {
            let mut comps = vec![ring.zero(); n];
            comps.extend(t.row(i).iter().cloned());
            let v = ModuleElement::new(ring, comps);
            let nf = normal_form_with_cofactors(&v, &self.syz_rows, &self.ordering);
            if !nf.remainder.is_zero() {
                return Err(MatrixError::Invariant(
                    "syzygy did not reduce to zero against the syzygy basis".into(),
                ));
            }
            out.push(nf.cofactors);
        }
        Ok(Matrix::from_rows(ring, self.syz_rows.len(), out))
    }
}

/// Universal row syzygies `L` of `A` (so `L * A = 0`), with the retained basis.
pub fn syzygies_of_rows(a: &Matrix) -> (Matrix, AugmentedGb) {
    let aug = AugmentedGb::new(a);
    let l = aug.syzygies();
    debug_assert!(l.checked_mul(a).map(|p| p.is_zero()).unwrap_or(false));
    (l, aug)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn ideal_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Vec<Polynomial> {
    let ord = ModuleOrdering::pot(ring.ordering().clone(), 1);
    let rows: Vec<ModuleElement> = gens
        .iter()
        .map(|g| ModuleElement::new(ring, vec![g.clone()]))
        .collect();
    buchberger(&rows, &ord)
        .into_iter()
        .map(|e| e.into_components().remove(0))
        .collect()
}

/// Normal form of `f` modulo a Gröbner basis of an ideal.
pub fn reduce_poly(f: &Polynomial, gb: &[Polynomial]) -> Polynomial {
    if gb.is_empty() || f.is_zero() {
        return f.clone();
    }
    let ring = f.ring();
    let ord = ModuleOrdering::pot(ring.ordering().clone(), 1);
    let rows: Vec<ModuleElement> = gb
        .iter()
        .map(|g| ModuleElement::new(ring, vec![g.clone()]))
        .collect();
    let v = ModuleElement::new(ring, vec![f.clone()]);
    normal_form_with_cofactors(&v, &rows, &ord)
        .remainder
        .into_components()
        .remove(0)
}
