//! Dense univariate polynomials over Q with Euclidean and Bezout elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ascending coefficients without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<BigRational>);

impl UPoly {
    pub fn new(mut c: Vec<BigRational>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    pub fn one() -> UPoly {
        UPoly(vec![BigRational::one()])
    }

    pub fn from_i64s(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.0.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, k: &BigRational) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero");
        let lc = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lc;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        match self.0.last() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Whether `self` divides `f`.
    pub fn divides(&self, f: &UPoly) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.divrem(self).1.is_zero()
    }
}

/// `(g, s, t)` with `s*a + t*b = g` and `g` monic, or `g = 0` when both vanish.
pub fn xgcd(a: &UPoly, b: &UPoly) -> (UPoly, UPoly, UPoly) {
    let (mut r0, mut s0, mut t0) = (a.clone(), UPoly::one(), UPoly::zero());
    let (mut r1, mut s1, mut t1) = (b.clone(), UPoly::zero(), UPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        (r0, s0, t0) = (r1, s1, t1);
        (r1, s1, t1) = (r, s, t);
    }
    match r0.0.last().cloned() {
        None => (r0, s0, t0),
        Some(lc) => {
            let k = lc.recip();
            (r0.scale(&k), s0.scale(&k), t0.scale(&k))
        }
    }
}

pub fn gcd_all<'a>(ps: impl IntoIterator<Item = &'a UPoly>) -> UPoly {
    ps.into_iter().fold(UPoly::zero(), |g, p| xgcd(&g, p).0)
}

pub type PMat = Vec<Vec<UPoly>>;

pub fn mat_mul(a: &PMat, b: &PMat, cols: usize) -> PMat {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(UPoly::zero(), |acc, (x, brow)| acc.add(&x.mul(&brow[j]))))
                .collect()
        })
        .collect()
}

/// Row echelon form `H = U*A` by unimodular Bezout row operations.
pub struct Echelon {
    pub h: PMat,
    pub u: PMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn echelon(a: &PMat, ncols: usize) -> Echelon {
    let m = a.len();
    let mut h = a.clone();
    let mut u: PMat = (0..m)
        .map(|i| (0..m).map(|j| if i == j { UPoly::one() } else { UPoly::zero() }).collect())
        .collect();
    let mut p = 0;
    let mut pivots = Vec::new();
    for j in 0..ncols {
        if p == m {
            break;
        }
        for i in p + 1..m {
            if h[i][j].is_zero() {
                continue;
            }
            if h[p][j].is_zero() {
                h.swap(p, i);
                u.swap(p, i);
                continue;
            }
            let (g, s, t) = xgcd(&h[p][j], &h[i][j]);
            let ap = h[p][j].divrem(&g).0;
            let bp = h[i][j].divrem(&g).0;
            for mat in [&mut h, &mut u] {
                let (rp, ri) = (mat[p].clone(), mat[i].clone());
                mat[p] = rp.iter().zip(&ri).map(|(x, y)| s.mul(x).add(&t.mul(y))).collect();
                mat[i] = rp.iter().zip(&ri).map(|(x, y)| ap.mul(y).sub(&bp.mul(x))).collect();
            }
        }
        if !h[p][j].is_zero() {
            pivots.push(j);
            p += 1;
        }
    }
    Echelon { h, u, rank: p, pivots }
}

/// Some `x` with `x*A = b`, through back substitution on the echelon form.
pub fn solve_row(e: &Echelon, b: &[UPoly]) -> Option<Vec<UPoly>> {
    let m = e.h.len();
    let mut y = vec![UPoly::zero(); m];
    for (k, &c) in e.pivots.iter().enumerate() {
        let mut rem = b[c].clone();
        for (yl, hl) in y.iter().zip(&e.h).take(k) {
            rem = rem.sub(&yl.mul(&hl[c]));
        }
        let (q, r) = rem.divrem(&e.h[k][c]);
        if !r.is_zero() {
            return None;
        }
        y[k] = q;
    }
    let yh = mat_mul(&vec![y.clone()], &e.h, b.len());
    if yh[0] != b {
        return None;
    }
    Some(mat_mul(&vec![y], &e.u, m).remove(0))
}

/// A basis of `{ v : M v = 0 }` over Q.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}
