use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::{PolyError, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("T*A is not zero, so T is not a syzygy of A")]
    NotASyzygy,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A dense `rows x cols` matrix of polynomials, row-major.
///
/// Empty shapes (`0 x n`, `m x 0`) are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl Matrix {
    pub fn new(ring: &Arc<PolyRing>, rows: usize, cols: usize, data: Vec<Polynomial>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        Matrix::new(ring, rows, cols, vec![ring.zero(); rows * cols])
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: &Arc<PolyRing>, cols: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix::new(ring, nrows, cols, data)
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse<S: AsRef<str>>(
        ring: &Arc<PolyRing>,
        cols: usize,
        rows: &[Vec<S>],
    ) -> Result<Self, MatrixError> {
        let mut out = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            out.push(
                r.iter()
                    .map(|s| ring.parse(s.as_ref()))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(Matrix::from_rows(ring, cols, out))
    }

    pub fn row_vector(ring: &Arc<PolyRing>, entries: Vec<Polynomial>) -> Self {
        let n = entries.len();
        Matrix::new(ring, 1, n, entries)
    }

    pub fn column_vector(ring: &Arc<PolyRing>, entries: Vec<Polynomial>) -> Self {
        let n = entries.len();
        Matrix::new(ring, n, 1, entries)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_matrix(&self, i: usize) -> Matrix {
        Matrix::row_vector(&self.ring, self.row(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(other.get(k, j))?)?;
                }
                data.push(acc);
            }
        }
        Ok(Matrix::new(&self.ring, self.rows, other.cols, data))
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Result<Polynomial, PolyError>,
    ) -> Result<Matrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::new(&self.ring, self.rows, self.cols, data))
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    pub fn scale(&self, p: &Polynomial) -> Matrix {
        self.map(|e| e * p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Matrix {
        Matrix::new(&self.ring, self.rows, self.cols, self.data.iter().map(f).collect())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::Shape(format!(
                "cannot stack width {} over width {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix::new(&self.ring, self.rows + other.rows, self.cols, data))
    }

    /// Columns `range` of every row.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Matrix {
        let w = range.len();
        let mut data = Vec::with_capacity(self.rows * w);
        for i in 0..self.rows {
            data.extend(self.row(i)[range.clone()].iter().cloned());
        }
        Matrix::new(&self.ring, self.rows, w, data)
    }

    /// Keeps the rows for which `keep` is true.
    pub fn filter_rows(&self, keep: impl Fn(&[Polynomial]) -> bool) -> Matrix {
        let mut data = Vec::new();
        let mut n = 0;
        for i in 0..self.rows {
            if keep(self.row(i)) {
                data.extend(self.row(i).iter().cloned());
                n += 1;
            }
        }
        Matrix::new(&self.ring, n, self.cols, data)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_string()).collect())
            .collect()
    }
}

impl std::ops::Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, self.to_strings())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 {
            return write!(f, "[] (0x{})", self.cols);
        }
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        f.write_str(&rows.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::poly::MonomialOrdering;

    #[test]
    fn product_and_shapes() {
        let r = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
        let a = Matrix::parse(&r, 1, &[vec!["x"], vec!["y"]]).unwrap();
        let l = Matrix::parse(&r, 2, &[vec!["y", "-x"]]).unwrap();
        assert!(l.checked_mul(&a).unwrap().is_zero());
        assert!(a.checked_mul(&a).is_err());
        let empty = Matrix::zeros(&r, 0, 2);
        let p = empty.checked_mul(&a).unwrap();
        assert_eq!((p.nrows(), p.ncols()), (0, 1));
        let wide = Matrix::zeros(&r, 2, 0);
        let z = wide.checked_mul(&Matrix::zeros(&r, 0, 3)).unwrap();
        assert!(z.is_zero() && z.nrows() == 2 && z.ncols() == 3);
    }
}
