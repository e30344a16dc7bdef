//! Computing in R = k[x,y]/I: normal forms, syzygies with relations, annihilators.
//!
//! cargo run --example quotient_ring

use locring::arith::Field;
use locring::poly::{MonomialOrdering, PolyRing};
use locring::ring::{Ideal, Ring};

fn main() {
    let base = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
    let q = Ring::quotient(&base, vec![base.parse("x*y").unwrap(), base.parse("y^2 - y").unwrap()]).unwrap();
    let f = q.parse("x^2*y + y^3").unwrap();
    println!("x^2*y + y^3 = {} in R", q.reduce(&f));

    let a = q.parse_matrix(1, &[vec!["x"], vec!["y"]]).unwrap();
    println!("syzygies of [x; y] over R:\n{}", q.syzygies(&a).unwrap());
    println!("Ann(x) = {}", q.annihilator(&[q.parse("x").unwrap()]).unwrap());

    let i = Ideal::parse(&q, &["x + y"]).unwrap();
    let g = q.parse("x^2 + y").unwrap();
    println!("x^2 + y in <x + y>: {:?}", q.membership(&g, &i).unwrap());
}
