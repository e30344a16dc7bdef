//! Computable rings: polynomial rings `k[x_1..x_n]` and their quotients `k[x]/I`.
//!
//! A quotient ring stores elements as normal forms modulo a reduced Gröbner
//! basis of `I`, computed once when the handle is built. Syzygies and lifts
//! over `k[x]/I` are obtained from the base ring by stacking relation rows
//! `f * e_j` under the input matrix.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::groebner::{ideal_basis, reduce_poly, syzygies_of_rows, AugmentedGb};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::{PolyError, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug)]
struct Quotient {
    gens: Vec<Polynomial>,
    gb: Vec<Polynomial>,
}

#[derive(Debug)]
struct Inner {
    base: Arc<PolyRing>,
    quotient: Option<Quotient>,
}

/// Shared, immutable handle to a polynomial ring or a quotient of one.
#[derive(Debug, Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (*self.0.base == *other.0.base && self.ideal_gb() == other.ideal_gb())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.base.field(), self.0.base.vars().join(","))?;
        if let Some(q) = &self.0.quotient {
            let gens: Vec<String> = q.gens.iter().map(|g| g.to_string()).collect();
            write!(f, "/<{}>", gens.join(", "))?;
        }
        Ok(())
    }
}

impl Ring {
    pub fn polynomial(base: &Arc<PolyRing>) -> Ring {
        Ring(Arc::new(Inner {
            base: base.clone(),
            quotient: None,
        }))
    }

    /// `base / <gens>`. The Gröbner basis of the ideal is computed here.
    pub fn quotient(base: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ring, RingError> {
        if gens.iter().any(|g| **g.ring() != **base) {
            return Err(RingError::RingMismatch);
        }
        let gb = ideal_basis(base, &gens);
        Ok(Ring(Arc::new(Inner {
            base: base.clone(),
            quotient: Some(Quotient { gens, gb }),
        })))
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.0.base
    }

    pub fn is_quotient(&self) -> bool {
        self.0.quotient.is_some()
    }

    /// Generators of `I` as supplied (empty for a polynomial ring).
    pub fn ideal_gens(&self) -> &[Polynomial] {
        self.0.quotient.as_ref().map_or(&[], |q| &q.gens)
    }

    /// Reduced Gröbner basis of `I` (empty for a polynomial ring).
    pub fn ideal_gb(&self) -> &[Polynomial] {
        self.0.quotient.as_ref().map_or(&[], |q| &q.gb)
    }

    pub fn zero(&self) -> Polynomial {
        self.0.base.zero()
    }

    pub fn one(&self) -> Polynomial {
        self.reduce(&self.0.base.one())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, RingError> {
        Ok(self.reduce(&self.0.base.parse(text)?))
    }

    pub fn parse_matrix<S: AsRef<str>>(&self, cols: usize, rows: &[Vec<S>]) -> Result<Matrix, RingError> {
        Ok(self.reduce_matrix(&Matrix::parse(&self.0.base, cols, rows)?))
    }

    /// Canonical representative: the normal form modulo `I`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_poly(f, self.ideal_gb())
    }

    pub fn reduce_matrix(&self, m: &Matrix) -> Matrix {
        if self.is_quotient() {
            m.map(|p| self.reduce(p))
        } else {
            m.clone()
        }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&(a * b))
    }

    pub fn mul_matrix(&self, a: &Matrix, b: &Matrix) -> Result<Matrix, RingError> {
        self.check_matrix(a)?;
        self.check_matrix(b)?;
        Ok(self.reduce_matrix(&a.checked_mul(b)?))
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn is_zero_matrix(&self, m: &Matrix) -> bool {
        m.entries().iter().all(|p| self.is_zero(p))
    }

    fn check_matrix(&self, m: &Matrix) -> Result<(), RingError> {
        if **m.ring() == *self.0.base {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    /// `A` stacked over the relation rows `f * e_j`, one per generator `f` of
    /// `I` and column `j`.
    fn stacked(&self, a: &Matrix) -> Matrix {
        let n = a.ncols();
        let gens = self.ideal_gens();
        if gens.is_empty() {
            return a.clone();
        }
        let mut rows: Vec<Vec<Polynomial>> = (0..a.nrows()).map(|i| a.row(i).to_vec()).collect();
        for f in gens {
            for j in 0..n {
                let mut r = vec![self.zero(); n];
                r[j] = f.clone();
                rows.push(r);
            }
        }
        Matrix::from_rows(&self.0.base, n, rows)
    }

    /// Universal row syzygies `L` of `A` over this ring, so `L * A = 0`.
    pub fn syzygies(&self, a: &Matrix) -> Result<Matrix, RingError> {
        self.check_matrix(a)?;
        let m = a.nrows();
        let (l, _) = syzygies_of_rows(&self.stacked(a));
        let l = if self.is_quotient() {
            self.reduce_matrix(&l.columns(0..m))
                .filter_rows(|r| r.iter().any(|p| !p.is_zero()))
        } else {
            l
        };
        debug_assert!(self.is_zero_matrix(&l.checked_mul(a)?));
        Ok(l)
    }

    /// Precomputes the data needed to lift many rows along `A`.
    pub fn lift_oracle(&self, a: &Matrix) -> Result<LiftOracle, RingError> {
        self.check_matrix(a)?;
        Ok(LiftOracle {
            ring: self.clone(),
            m: a.nrows(),
            n: a.ncols(),
            aug: AugmentedGb::new(&self.stacked(a)),
        })
    }

    /// Some `X` with `X * A = B`, or `None` when some row of `B` is not in the
    /// row module of `A`.
    pub fn lift(&self, a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, RingError> {
        self.check_matrix(b)?;
        self.lift_oracle(a)?.lift(b)
    }

    /// Generators of `Ann(v) = { r : r * v = 0 }` for a row `v`.
    pub fn annihilator(&self, v: &[Polynomial]) -> Result<Ideal, RingError> {
        let row = Matrix::row_vector(&self.0.base, v.to_vec());
        let l = self.syzygies(&row)?;
        Ideal::new(self, l.column(0).iter().map(Polynomial::monic).collect())
    }

    /// Cofactors `a` with `sum a_i f_i = f`, or `None` when `f` is not in `I`.
    pub fn membership(&self, f: &Polynomial, ideal: &Ideal) -> Result<Option<Vec<Polynomial>>, RingError> {
        ideal.membership_oracle()?.cofactors(f)
    }

    /// `U` with `U * L = T`, where `L` is a syzygy matrix of `A` returned by
    /// [`Ring::syzygies`] and `T * A = 0`.
    pub fn lift_along_syzygies(&self, a: &Matrix, l: &Matrix, t: &Matrix) -> Result<Matrix, RingError> {
        if !self.is_zero_matrix(&t.checked_mul(a)?) {
            return Err(MatrixError::NotASyzygy.into());
        }
        self.lift(l, t)?.ok_or_else(|| {
            MatrixError::Invariant("syzygy does not factor through L".into()).into()
        })
    }
}

/// Retained Gröbner data for repeated lifts along a fixed matrix.
#[derive(Debug, Clone)]
pub struct LiftOracle {
    ring: Ring,
    m: usize,
    n: usize,
    aug: AugmentedGb,
}

impl LiftOracle {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lift_row(&self, b: &[Polynomial]) -> Result<Option<Vec<Polynomial>>, RingError> {
        if b.len() != self.n {
            return Err(MatrixError::Shape(format!("row of width {} against {} columns", b.len(), self.n)).into());
        }
        let b: Vec<Polynomial> = b.iter().map(|p| self.ring.reduce(p)).collect();
        Ok(self
            .aug
            .lift_row(&b)?
            .map(|x| x[..self.m].iter().map(|p| self.ring.reduce(p)).collect()))
    }

    /// Normal form of `b` modulo the row module of `A` (and `I`); nonzero
    /// exactly when the lift fails.
    pub fn residue(&self, b: &[Polynomial]) -> Vec<Polynomial> {
        let b: Vec<Polynomial> = b.iter().map(|p| self.ring.reduce(p)).collect();
        self.aug.residue(&b)
    }

    /// Decides membership of a row without building cofactors.
    pub fn contains_row(&self, b: &[Polynomial]) -> Result<bool, RingError> {
        Ok(self.lift_row(b)?.is_some())
    }

    pub fn lift(&self, b: &Matrix) -> Result<Option<Matrix>, RingError> {
        let mut rows = Vec::with_capacity(b.nrows());
        for i in 0..b.nrows() {
            match self.lift_row(b.row(i))? {
                Some(x) => rows.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_rows(self.ring.base(), self.m, rows)))
    }
}

/// A finitely generated ideal `<f_1, ..., f_l>` of a [`Ring`].
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal, RingError> {
        if gens.iter().any(|g| **g.ring() != **ring.base()) {
            return Err(RingError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.iter().map(|g| ring.reduce(g)).collect(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Ideal, RingError> {
        let gens = gens
            .iter()
            .map(|g| ring.parse(g.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn membership_oracle(&self) -> Result<MembershipOracle, RingError> {
        let col = Matrix::column_vector(self.ring.base(), self.gens.clone());
        Ok(MembershipOracle {
            lift: self.ring.lift_oracle(&col)?,
        })
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, RingError> {
        self.membership_oracle()?.contains(f)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Ideal membership with a cached Gröbner basis.
#[derive(Debug, Clone)]
pub struct MembershipOracle {
    lift: LiftOracle,
}

impl MembershipOracle {
    pub fn cofactors(&self, f: &Polynomial) -> Result<Option<Vec<Polynomial>>, RingError> {
        self.lift.lift_row(std::slice::from_ref(f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, RingError> {
        self.lift.contains_row(std::slice::from_ref(f))
    }

    /// Normal form of `f` modulo the ideal.
    pub fn residue(&self, f: &Polynomial) -> Polynomial {
        self.lift.residue(std::slice::from_ref(f)).remove(0)
    }
}
