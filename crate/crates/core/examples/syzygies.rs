//! Syzygies, lifts and factoring a syzygy through the syzygy basis.
//!
//! cargo run --example syzygies

use locring::arith::Field;
use locring::poly::{MonomialOrdering, PolyRing};
use locring::ring::Ring;

fn main() {
    let r = Ring::polynomial(&PolyRing::new(Field::Rationals, &["x", "y", "z"], MonomialOrdering::DegRevLex).unwrap());
    let a = r.parse_matrix(1, &[vec!["x"], vec!["y"], vec!["z"]]).unwrap();
    let l = r.syzygies(&a).unwrap();
    println!("A =\n{}", a);
    println!("L =\n{}", l);
    println!("L*A = 0: {}", r.mul_matrix(&l, &a).unwrap().is_zero());

    // any syzygy factors through L
    let t = r.parse_matrix(3, &[vec!["y*z", "-x*z", "0"]]).unwrap();
    let u = r.lift_along_syzygies(&a, &l, &t).unwrap();
    println!("T = {}  =  U*L with U = {}", t, u);

    let b = r.parse_matrix(1, &[vec!["x^2 + y*z"]]).unwrap();
    match r.lift(&a, &b).unwrap() {
        Some(x) => println!("X*A = B with X = {}", x),
        None => println!("B is not in the row module of A"),
    }
    println!("lift of [1]: {:?}", r.lift(&a, &r.parse_matrix(1, &[vec!["1"]]).unwrap()).unwrap());
}
