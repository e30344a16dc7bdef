use crate::matrix::Matrix;
use crate::poly::Polynomial;

use super::dom::dom_with_cofactors;
use super::{DomGenerator, EmptinessCertificate, LocError, LocMatrix, LocProblem, LocWitness, MultiplicativeSet};

/// Outcome of lifting one row over `S^-1 R`.
#[derive(Debug, Clone)]
pub enum RowLift {
    Solved {
        x: LocMatrix,
        dom: Vec<DomGenerator>,
        witness: LocWitness,
    },
    Unsolvable {
        dom: Vec<DomGenerator>,
        certificate: EmptinessCertificate,
    },
}

impl RowLift {
    pub fn solution(&self) -> Option<&LocMatrix> {
        match self {
            RowLift::Solved { x, .. } => Some(x),
            RowLift::Unsolvable { .. } => None,
        }
    }

    pub fn dom(&self) -> &[DomGenerator] {
        match self {
            RowLift::Solved { dom, .. } | RowLift::Unsolvable { dom, .. } => dom,
        }
    }
}

/// Lifts `b` along `A` over `S^-1 R`.
///
/// The lift is `x = (-sum a_i L_i) / (sum a_i r_i)` where `(r_i, L_i)` are the
/// dom generators and `a` solves the localization problem for `<r_i>`. The
/// numerator carries the sign so the denominator stays in `S`.
pub fn loc_lift_row(set: &MultiplicativeSet, a: &Matrix, b: &[Polynomial]) -> Result<RowLift, LocError> {
    let dom = dom_with_cofactors(set.require_ring()?, a, b)?;
    lift_from_dom(set, a, b, dom)
}

/// Second half of [`loc_lift_row`]: solves the localization problem for the
/// given dom generators and assembles the lift.
pub fn lift_from_dom(
    set: &MultiplicativeSet,
    a: &Matrix,
    b: &[Polynomial],
    dom: Vec<DomGenerator>,
) -> Result<RowLift, LocError> {
    let ring = set.require_ring()?;
    let rs: Vec<Polynomial> = dom.iter().map(|g| g.r.clone()).collect();
    let witness = match set.solve(&rs)? {
        LocProblem::Found(w) => w,
        LocProblem::Empty(certificate) => return Ok(RowLift::Unsolvable { dom, certificate }),
    };
    let m = a.nrows();
    let mut num = vec![ring.zero(); m];
    for (ai, g) in witness.cofactors.iter().zip(&dom) {
        if ai.is_zero() {
            continue;
        }
        for (n, l) in num.iter_mut().zip(&g.l) {
            *n = &*n - &(ai * l);
        }
    }
    let num = Matrix::row_vector(ring.base(), num);
    let x = LocMatrix::new(set, num, witness.element.clone())?;
    // num * A = den * b holds exactly in R
    let lhs = ring.mul_matrix(x.numerator(), a)?;
    let rhs = Matrix::row_vector(ring.base(), b.iter().map(|p| p * x.denominator()).collect());
    if !ring.is_zero_matrix(&lhs.checked_sub(&rhs)?) {
        return Err(LocError::Invariant("localized lift fails its residual check".into()));
    }
    Ok(RowLift::Solved { x, dom, witness })
}

/// Some `X` with `X * A = B` over `S^-1 R`, or `None`.
///
/// Rows are solved independently against the numerator of `A`, then put over
/// the product of their denominators.
pub fn loc_lift(set: &MultiplicativeSet, a: &LocMatrix, b: &LocMatrix) -> Result<Option<LocMatrix>, LocError> {
    if a.ncols() != b.ncols() {
        return Err(crate::matrix::MatrixError::Shape(format!(
            "A has {} columns, B has {}",
            a.ncols(),
            b.ncols()
        ))
        .into());
    }
    let mut rows: Vec<(Vec<Polynomial>, Polynomial)> = Vec::with_capacity(b.nrows());
    for i in 0..b.nrows() {
        match loc_lift_row(set, a.numerator(), b.numerator().row(i))? {
            RowLift::Solved { x, .. } => rows.push((x.numerator().row(0).to_vec(), x.denominator().clone())),
            RowLift::Unsolvable { .. } => return Ok(None),
        }
    }
    assemble_lift(set, a, b, &rows).map(Some)
}

/// Puts row solutions `Y_i = n_i / s_i` of `Y * A_num = B_num` over a common
/// denominator, giving `X = d_A * Y / d_B`, and re-checks `X * A = B`.
pub fn assemble_lift(
    set: &MultiplicativeSet,
    a: &LocMatrix,
    b: &LocMatrix,
    rows: &[(Vec<Polynomial>, Polynomial)],
) -> Result<LocMatrix, LocError> {
    let ring = set.require_ring()?;
    let m = a.nrows();
    // X = d_A * Y / d_B with Y the row solutions for the numerators
    let common = rows.iter().fold(ring.one(), |acc, (_, d)| ring.mul(&acc, d));
    let mut data = Vec::with_capacity(rows.len() * m);
    for (i, (n, _)) in rows.iter().enumerate() {
        let others = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(a.denominator().clone(), |acc, (_, (_, d))| ring.mul(&acc, d));
        data.extend(n.iter().map(|p| ring.mul(p, &others)));
    }
    let num = Matrix::new(ring.base(), rows.len(), m, data);
    let den = ring.mul(&common, b.denominator());
    let x = LocMatrix::new(set, num, den)?;

    // X*A - B has numerator X_num*A_num*d_B - B_num*d_X*d_A
    let xa = ring.mul_matrix(x.numerator(), a.numerator())?;
    let scale = ring.mul(x.denominator(), a.denominator());
    let residual = xa
        .scale(b.denominator())
        .checked_sub(&b.numerator().scale(&scale))?;
    for p in residual.entries() {
        if !loc_is_zero(set, p)? {
            return Err(LocError::Invariant("localized matrix lift fails its residual check".into()));
        }
    }
    Ok(x)
}

/// Universal syzygies over `S^-1 R`: the syzygies of the numerator, over `1`.
pub fn loc_syzygies(set: &MultiplicativeSet, a: &LocMatrix) -> Result<LocMatrix, LocError> {
    let ring = set.require_ring()?;
    LocMatrix::integral(set, ring.syzygies(a.numerator())?)
}

/// Factors a localized syzygy `T` of `A` through the syzygy matrix `L` of the
/// numerator of `A`: returns `U / (d' s)` with `(U / (d' s)) * L = T`.
///
/// `s` is a localization-problem witness in the annihilator of `T_num * A_num`.
pub fn loc_weak_lift(set: &MultiplicativeSet, t: &LocMatrix, a: &LocMatrix, l: &Matrix) -> Result<LocMatrix, LocError> {
    let ring = set.require_ring()?;
    let residual = ring.mul_matrix(t.numerator(), a.numerator())?;
    let ann = ring.annihilator(residual.entries())?;
    let s = match set.solve(ann.gens())? {
        LocProblem::Found(w) => w.element,
        LocProblem::Empty(_) => return Err(LocError::NotALocalizedSyzygy),
    };
    let st = ring.reduce_matrix(&t.numerator().scale(&s));
    let u = ring.lift_along_syzygies(a.numerator(), l, &st)?;
    LocMatrix::new(set, u, ring.mul(t.denominator(), &s))
}

/// Whether `f / 1` vanishes in `S^-1 R`, that is, whether `Ann(f)` meets `S`.
pub fn loc_is_zero(set: &MultiplicativeSet, f: &Polynomial) -> Result<bool, LocError> {
    let ring = set.require_ring()?;
    if ring.is_zero(f) {
        return Ok(true);
    }
    let ann = ring.annihilator(std::slice::from_ref(f))?;
    Ok(matches!(set.solve(ann.gens())?, LocProblem::Found(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::poly::{MonomialOrdering, PolyRing};
    use crate::ring::{Ideal, Ring};

    fn poly_ring(vars: &[&str]) -> Ring {
        Ring::polynomial(&PolyRing::new(Field::Rationals, vars, MonomialOrdering::DegRevLex).unwrap())
    }

    fn at(r: &Ring, prime: &[&str]) -> MultiplicativeSet {
        MultiplicativeSet::prime_complement(Ideal::parse(r, prime).unwrap()).unwrap()
    }

    fn mat(r: &Ring, cols: usize, rows: &[&[&str]]) -> Matrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        r.parse_matrix(cols, &rows).unwrap()
    }

    #[test]
    fn row_lift_examples() {
        let r = poly_ring(&["x"]);
        let s = at(&r, &["x"]);
        let out = loc_lift_row(&s, &mat(&r, 1, &[&["1 + x"]]), &[r.one()]).unwrap();
        let x = out.solution().unwrap();
        assert_eq!(x.numerator(), &mat(&r, 1, &[&["1"]]));
        assert_eq!(x.denominator(), &r.parse("x + 1").unwrap());

        let out = loc_lift_row(&s, &mat(&r, 1, &[&["x"]]), &[r.one()]).unwrap();
        match out {
            RowLift::Unsolvable { dom, certificate } => {
                assert_eq!(dom.len(), 1);
                assert_eq!(dom[0].r, r.parse("x").unwrap());
                assert!(matches!(certificate, EmptinessCertificate::AllInPrime { .. }));
            }
            RowLift::Solved { .. } => panic!("x is not a unit at <x>"),
        }

        let out = loc_lift_row(&s, &mat(&r, 1, &[&["x"]]), &[r.parse("x^2").unwrap()]).unwrap();
        let x = out.solution().unwrap();
        assert_eq!(x.numerator(), &mat(&r, 1, &[&["x"]]));
        assert!(x.denominator().is_one());
    }

    #[test]
    fn matrix_lift() {
        let r = poly_ring(&["x", "y"]);
        let s = at(&r, &["x", "y"]);
        let a = LocMatrix::integral(&s, mat(&r, 1, &[&["1 + x"], &["y"]])).unwrap();
        let b = LocMatrix::integral(&s, mat(&r, 1, &[&["1"]])).unwrap();
        let x = loc_lift(&s, &a, &b).unwrap().unwrap();
        assert_eq!((x.nrows(), x.ncols()), (1, 2));

        let empty = LocMatrix::integral(&s, Matrix::zeros(r.base(), 0, 1)).unwrap();
        let x = loc_lift(&s, &a, &empty).unwrap().unwrap();
        assert_eq!((x.nrows(), x.ncols()), (0, 2));

        // B = A with a nontrivial denominator on both sides
        let d = r.parse("1 - y").unwrap();
        let a = LocMatrix::new(&s, mat(&r, 2, &[&["x", "1"], &["y", "x + y"]]), d.clone()).unwrap();
        let x = loc_lift(&s, &a, &a).unwrap().unwrap();
        assert_eq!((x.nrows(), x.ncols()), (2, 2));
    }

    #[test]
    fn syzygies_and_weak_lifts() {
        let r = poly_ring(&["x", "y"]);
        let s = at(&r, &["x", "y"]);
        let a = LocMatrix::integral(&s, mat(&r, 1, &[&["x"], &["y"]])).unwrap();
        let l = loc_syzygies(&s, &a).unwrap();
        assert_eq!(l.numerator(), &mat(&r, 2, &[&["-y", "x"]]));
        let u = loc_weak_lift(&s, &l, &a, l.numerator()).unwrap();
        assert_eq!(u.numerator(), &mat(&r, 1, &[&["1"]]));
        assert!(u.denominator().is_one());

        let id = LocMatrix::new(&s, Matrix::identity(r.base(), 2), r.parse("1 + x").unwrap()).unwrap();
        assert_eq!(loc_syzygies(&s, &id).unwrap().nrows(), 0);
        let zero = LocMatrix::integral(&s, mat(&r, 1, &[&["0"]])).unwrap();
        assert_eq!(loc_syzygies(&s, &zero).unwrap().numerator(), &mat(&r, 1, &[&["1"]]));

        let t = LocMatrix::integral(&s, Matrix::zeros(r.base(), 1, 2)).unwrap();
        assert!(loc_weak_lift(&s, &t, &a, l.numerator()).unwrap().numerator().is_zero());
        let bad = LocMatrix::integral(&s, mat(&r, 2, &[&["1", "0"]])).unwrap();
        assert_eq!(loc_weak_lift(&s, &bad, &a, l.numerator()), Err(LocError::NotALocalizedSyzygy));
    }

    #[test]
    fn torsion_in_a_quotient() {
        let base = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
        let q = Ring::quotient(&base, vec![base.parse("x*y").unwrap()]).unwrap();
        let s = at(&q, &["x"]);
        assert!(loc_is_zero(&s, &q.parse("x").unwrap()).unwrap());
        assert!(!loc_is_zero(&s, &q.parse("y").unwrap()).unwrap());

        let a = LocMatrix::integral(&s, mat(&q, 1, &[&["x"]])).unwrap();
        let l = q.syzygies(a.numerator()).unwrap();
        assert_eq!(l, mat(&q, 1, &[&["y"]]));
        let t = LocMatrix::integral(&s, mat(&q, 1, &[&["x"]])).unwrap();
        let u = loc_weak_lift(&s, &t, &a, &l).unwrap();
        assert!(u.numerator().is_zero());
        assert_eq!(u.denominator(), &q.parse("y").unwrap());
    }

    #[test]
    fn zero_tests_in_domains() {
        let r = poly_ring(&["x"]);
        let s = at(&r, &["x"]);
        assert!(!loc_is_zero(&s, &r.parse("x").unwrap()).unwrap());
        assert!(loc_is_zero(&s, &r.zero()).unwrap());
    }
}
