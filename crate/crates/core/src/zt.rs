//! Univariate polynomials over the integers, strong Gröbner bases of their
//! ideals, and the localization problem at the monic polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{extended_gcd, Integer};
use crate::poly::{parse_terms, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZtError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("coefficient at byte {0} is not an integer")]
    NotIntegral(usize),
}

/// Dense polynomial in `Z[t]`, coefficients by ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<Integer>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> ZPoly {
        ZPoly::from_coeffs(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: Integer, d: usize) -> ZPoly {
        let mut coeffs = vec![Integer::zero(); d + 1];
        coeffs[d] = c;
        ZPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> ZPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// Parses the multivariate grammar with the single variable `var`.
    pub fn parse_var(text: &str, var: &str) -> Result<ZPoly, ZtError> {
        let terms = parse_terms(text, &[var.to_string()])?;
        let mut out = ZPoly::zero();
        for t in terms {
            if !t.den.is_one() {
                return Err(ZtError::NotIntegral(t.offset));
            }
            out = &out + &ZPoly::monomial(t.num, t.exponents[0] as usize);
        }
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<ZPoly, ZtError> {
        Self::parse_var(text, "t")
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Integer {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// `self * t^k`.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    pub fn scale(&self, c: &Integer) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self - c * t^k * other`.
    fn sub_scaled(&mut self, c: &Integer, k: usize, other: &ZPoly) {
        if self.coeffs.len() < other.coeffs.len() + k {
            self.coeffs.resize(other.coeffs.len() + k, Integer::zero());
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] -= c * b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match d {
                0 => s.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        s.push_str(&format!("{}*", abs));
                    }
                    s.push_str(var);
                    if d > 1 {
                        s.push_str(&format!("^{}", d));
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({})", self)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }
}

/// `sum_i row[i] * gens[i]`.
pub fn combine(row: &[ZPoly], gens: &[ZPoly]) -> ZPoly {
    row.iter()
        .zip(gens)
        .fold(ZPoly::zero(), |acc, (a, g)| &acc + &(a * g))
}

/// Strong Gröbner basis of an ideal of `Z[t]` with the transformation back to
/// the original generators: `gens[k] = sum_i transformation[k][i] * input[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    pub input: Vec<ZPoly>,
    pub gens: Vec<ZPoly>,
    pub transformation: Vec<Vec<ZPoly>>,
}

impl StandardBasis {
    /// Recomputes every basis element from its transformation row.
    pub fn verify(&self) -> bool {
        self.gens
            .iter()
            .zip(&self.transformation)
            .all(|(g, row)| combine(row, &self.input) == *g)
    }

    /// True when some basis leading term divides the leading term of `f`.
    pub fn lt_divides(&self, f: &ZPoly) -> bool {
        let (Some(d), Some(c)) = (f.degree(), f.leading_coeff()) else {
            return true;
        };
        self.gens.iter().any(|g| {
            g.degree().is_some_and(|dg| dg <= d) && (c % g.leading_coeff().expect("nonzero")).is_zero()
        })
    }

    /// Remainder of `f` after reducing every term against the basis.
    pub fn reduce(&self, f: &ZPoly) -> ZPoly {
        let mut scratch: Vec<ZPoly> = Vec::new();
        let mut r = f.clone();
        reduce_full(&mut r, &mut scratch, &self.gens, &[], None);
        r
    }
}

#[derive(Clone)]
struct Elem {
    poly: ZPoly,
    row: Vec<ZPoly>,
}

fn row_sub_scaled(row: &mut [ZPoly], c: &Integer, k: usize, other: &[ZPoly]) {
    for (a, b) in row.iter_mut().zip(other) {
        a.sub_scaled(c, k, b);
    }
}

/// Quotient for one Euclidean step on a coefficient `c` by `cg`, with a
/// nonnegative remainder. `None` when `|c| < |cg|`.
fn euclid_quotient(c: &Integer, cg: &Integer) -> Option<Integer> {
    if c.abs() < cg.abs() {
        return None;
    }
    let r = c.mod_floor(&cg.abs());
    Some((c - r) / cg)
}

fn top_reduce(e: &mut Elem, basis: &[Elem]) {
    'outer: while let (Some(d), Some(c)) = (e.poly.degree(), e.poly.leading_coeff().cloned()) {
        for g in basis {
            let dg = g.poly.degree().expect("nonzero basis element");
            if dg > d {
                continue;
            }
            if let Some(q) = euclid_quotient(&c, g.poly.leading_coeff().expect("nonzero")) {
                e.poly.sub_scaled(&q, d - dg, &g.poly);
                row_sub_scaled(&mut e.row, &q, d - dg, &g.row);
                continue 'outer;
            }
        }
        return;
    }
}

/// Reduces every term of `f` below degree `below` (all terms if `None`),
/// tracking the transformation in `row`.
fn reduce_full(f: &mut ZPoly, row: &mut [ZPoly], basis: &[ZPoly], rows: &[Vec<ZPoly>], below: Option<usize>) {
    let Some(top) = f.degree() else { return };
    let start = match below {
        Some(0) => return,
        Some(b) => b - 1,
        None => top,
    };
    for d in (0..=start.min(top)).rev() {
        'term: loop {
            let c = f.coeff(d);
            if c.is_zero() {
                break;
            }
            for (k, g) in basis.iter().enumerate() {
                let dg = g.degree().expect("nonzero basis element");
                if dg > d {
                    continue;
                }
                if let Some(q) = euclid_quotient(&c, g.leading_coeff().expect("nonzero")) {
                    f.sub_scaled(&q, d - dg, g);
                    if let Some(r) = rows.get(k) {
                        row_sub_scaled(row, &q, d - dg, r);
                    }
                    continue 'term;
                }
            }
            break;
        }
    }
}

/// S-polynomial and G-polynomial of a pair of basis elements.
fn pair_polys(a: &Elem, b: &Elem) -> Vec<Elem> {
    let (da, db) = (a.poly.degree().unwrap(), b.poly.degree().unwrap());
    let (ca, cb) = (a.poly.leading_coeff().unwrap(), b.poly.leading_coeff().unwrap());
    let d = da.max(db);
    let combo = |u: &Integer, v: &Integer| Elem {
        poly: &a.poly.shift(d - da).scale(u) + &b.poly.shift(d - db).scale(v),
        row: a
            .row
            .iter()
            .zip(&b.row)
            .map(|(x, y)| &x.shift(d - da).scale(u) + &y.shift(d - db).scale(v))
            .collect(),
    };
    let l = ca.lcm(cb);
    let mut out = vec![combo(&(&l / ca), &-(&l / cb))];
    if !(cb % ca).is_zero() && !(ca % cb).is_zero() {
        let (_, u, v) = extended_gcd(ca, cb);
        out.push(combo(&u, &v));
    }
    out
}

/// Strong Gröbner basis of `<gens>` in `Z[t]`.
///
/// Pairs contribute S-polynomials and G-polynomials; reduction is Euclidean
/// division of leading coefficients with nonnegative remainder. The result is
/// minimal, tail-reduced, has positive leading coefficients, and is sorted by
/// degree.
pub fn strong_groebner_zt(gens: &[ZPoly]) -> StandardBasis {
    let l = gens.len();
    let unit_row = |i: usize| -> Vec<ZPoly> {
        (0..l).map(|j| if i == j { ZPoly::one() } else { ZPoly::zero() }).collect()
    };
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut queue: Vec<Elem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| Elem {
            poly: g.clone(),
            row: unit_row(i),
        })
        .collect();
    queue.reverse();

    loop {
        let next = match queue.pop() {
            Some(e) => Some(e),
            None => pairs.pop().map(|(i, j)| {
                let mut polys = pair_polys(&basis[i], &basis[j]);
                let first = polys.remove(0);
                queue.extend(polys);
                first
            }),
        };
        let Some(mut e) = next else { break };
        top_reduce(&mut e, &basis);
        if e.poly.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(e);
        for i in 0..k {
            pairs.push((i, k));
        }
    }

    // minimal: drop elements whose leading term is divisible by another's
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        let (di, ci) = (basis[i].poly.degree().unwrap(), basis[i].poly.leading_coeff().unwrap().abs());
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let (dj, cj) = (basis[j].poly.degree().unwrap(), basis[j].poly.leading_coeff().unwrap().abs());
            let divides = dj <= di && (&ci % &cj).is_zero();
            let same = dj == di && ci == cj;
            if divides && (!same || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut out: Vec<Elem> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    for e in &mut out {
        if e.poly.leading_coeff().unwrap().is_negative() {
            e.poly = -&e.poly;
            e.row = e.row.iter().map(|r| -r).collect();
        }
    }
    out.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| a.poly.leading_coeff().cmp(&b.poly.leading_coeff()))
    });
    for i in 0..out.len() {
        let others: Vec<ZPoly> = out.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.poly.clone()).collect();
        let rows: Vec<Vec<ZPoly>> = out.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.row.clone()).collect();
        let mut e = out[i].clone();
        let top = e.poly.degree();
        reduce_full(&mut e.poly, &mut e.row, &others, &rows, top);
        out[i] = e;
    }

    let sb = StandardBasis {
        input: gens.to_vec(),
        gens: out.iter().map(|e| e.poly.clone()).collect(),
        transformation: out.into_iter().map(|e| e.row).collect(),
    };
    assert!(sb.verify(), "standard basis transformation does not reproduce the basis");
    sb
}

/// A monic element of an ideal with its cofactors over the input generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicWitness {
    pub cofactors: Vec<ZPoly>,
    pub witness: ZPoly,
    /// Integers `a_i` with `sum a_i c_i = 1` over the basis leading coefficients.
    pub bezout: Vec<Integer>,
    pub basis: StandardBasis,
}

/// Solves the localization problem for `Z[t]` at the monic polynomials.
///
/// `Err` carries the standard basis whose leading coefficients have a common
/// divisor `> 1`, which certifies that the ideal contains no monic element.
pub fn monic_localization_problem(gens: &[ZPoly]) -> Result<MonicWitness, StandardBasis> {
    let sb = strong_groebner_zt(gens);
    if sb.gens.is_empty() {
        return Err(sb);
    }
    let lcs: Vec<&Integer> = sb.gens.iter().map(|g| g.leading_coeff().unwrap()).collect();
    let mut g = Integer::zero();
    let mut a: Vec<Integer> = Vec::with_capacity(lcs.len());
    for c in &lcs {
        let (h, u, v) = extended_gcd(&g, c);
        for x in &mut a {
            *x *= &u;
        }
        a.push(v);
        g = h;
    }
    if !g.is_one() {
        return Err(sb);
    }
    let m = sb.gens.iter().map(|g| g.degree().unwrap()).max().unwrap();
    let mut witness = ZPoly::zero();
    let mut cofactors = vec![ZPoly::zero(); gens.len()];
    for ((ai, gk), row) in a.iter().zip(&sb.gens).zip(&sb.transformation) {
        let shift = m - gk.degree().unwrap();
        witness = &witness + &gk.shift(shift).scale(ai);
        for (c, r) in cofactors.iter_mut().zip(row) {
            *c = &*c + &r.shift(shift).scale(ai);
        }
    }
    assert!(witness.is_monic(), "monic witness has leading coefficient != 1");
    assert_eq!(combine(&cofactors, gens), witness, "witness cofactors do not recombine");
    Ok(MonicWitness {
        cofactors,
        witness,
        bezout: a,
        basis: sb,
    })
}
