//! Solving X*A = B over the local ring Q[x,y] at <x,y>.
//!
//! cargo run --example local_ring

use locring::arith::Field;
use locring::localization::{loc_lift, loc_lift_row, LocMatrix, MultiplicativeSet, RowLift};
use locring::poly::{MonomialOrdering, PolyRing};
use locring::ring::{Ideal, Ring};

fn main() {
    let r = Ring::polynomial(&PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap());
    let s = MultiplicativeSet::prime_complement(Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
    println!("S = {}", s);

    let a = r.parse_matrix(1, &[vec!["1 + x"], vec!["y"]]).unwrap();
    match loc_lift_row(&s, &a, &[r.one()]).unwrap() {
        RowLift::Solved { x, dom, witness } => {
            println!("dom has {} generators, witness {} in S", dom.len(), witness.element);
            println!("x = {}", x);
        }
        RowLift::Unsolvable { certificate, .. } => println!("no solution: {:?}", certificate),
    }

    // x alone is not a unit at <x,y>
    let a = r.parse_matrix(1, &[vec!["x"], vec!["x*y"]]).unwrap();
    if let RowLift::Unsolvable { dom, certificate } = loc_lift_row(&s, &a, &[r.one()]).unwrap() {
        let gens: Vec<String> = dom.iter().map(|g| g.r.to_string()).collect();
        println!("refused: dom = <{}>, {:?}", gens.join(", "), certificate);
    }

    // matrices with denominators
    let a = LocMatrix::new(&s, r.parse_matrix(2, &[vec!["1", "y"], vec!["x", "1"]]).unwrap(), r.parse("1 - y").unwrap()).unwrap();
    let b = LocMatrix::integral(&s, r.parse_matrix(2, &[vec!["1", "0"], vec!["0", "1"]]).unwrap()).unwrap();
    let x = loc_lift(&s, &a, &b).unwrap().expect("A is invertible at <x,y>");
    println!("A^-1 = {}", x);
}
