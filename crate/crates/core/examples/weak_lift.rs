//! Factoring localized syzygies, including S-torsion in a quotient ring.
//!
//! cargo run --example weak_lift

use locring::arith::Field;
use locring::localization::{loc_is_zero, loc_syzygies, loc_weak_lift, LocMatrix, MultiplicativeSet};
use locring::poly::{MonomialOrdering, PolyRing};
use locring::ring::{Ideal, Ring};

fn main() {
    let base = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
    let q = Ring::quotient(&base, vec![base.parse("x*y").unwrap()]).unwrap();
    let s = MultiplicativeSet::prime_complement(Ideal::parse(&q, &["x"]).unwrap()).unwrap();

    // y is a unit at <x> and kills x, so x vanishes after localizing
    println!("x = 0 in S^-1 R: {}", loc_is_zero(&s, &q.parse("x").unwrap()).unwrap());

    let a = LocMatrix::integral(&s, q.parse_matrix(1, &[vec!["x"]]).unwrap()).unwrap();
    let l = loc_syzygies(&s, &a).unwrap();
    println!("L = {}", l);

    // T = [x] is a syzygy only after localizing: T*A = x^2 != 0 in R
    let t = LocMatrix::integral(&s, q.parse_matrix(1, &[vec!["x"]]).unwrap()).unwrap();
    let u = loc_weak_lift(&s, &t, &a, l.numerator()).unwrap();
    println!("U = {}", u);
}
