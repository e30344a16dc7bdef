//! Integer lattices of bounded-degree elements of an ideal of Z[t].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub fn trim(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

/// For each degree `d <= bound`, the positive generator of the group of
/// leading coefficients of degree-`d` elements in the Z-span of
/// `{ t^k g : deg(t^k g) <= bound }`, or `None` when there are none.
pub fn leading_pivots(gens: &[Vec<BigInt>], bound: usize) -> Vec<Option<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in gens {
        let g = trim(g.clone());
        if g.is_empty() || g.len() - 1 > bound {
            continue;
        }
        for k in 0..=bound - (g.len() - 1) {
            let mut v = vec![BigInt::zero(); bound + 1];
            for (i, c) in g.iter().enumerate() {
                v[i + k] = c.clone();
            }
            rows.push(v);
        }
    }
    let mut pivots = vec![None; bound + 1];
    for col in (0..=bound).rev() {
        let mut active: Vec<Vec<BigInt>> = Vec::new();
        rows.retain(|r| {
            if r[col].is_zero() {
                true
            } else {
                active.push(r.clone());
                false
            }
        });
        let Some(mut p) = active.pop() else {
            continue;
        };
        for mut r in active {
            let e = p[col].extended_gcd(&r[col]);
            let (a, b) = (&p[col] / &e.gcd, &r[col] / &e.gcd);
            let np: Vec<BigInt> = p.iter().zip(&r).map(|(x, y)| &e.x * x + &e.y * y).collect();
            r = p.iter().zip(&r).map(|(x, y)| &a * y - &b * x).collect();
            p = np;
            if r.iter().any(|x| !x.is_zero()) {
                rows.push(r);
            }
        }
        pivots[col] = Some(p[col].abs());
    }
    pivots
}
