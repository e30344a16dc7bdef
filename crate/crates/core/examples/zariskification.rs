//! Localizing at S = 1 + L: witnesses and refusals.
//!
//! cargo run --example zariskification

use locring::arith::Field;
use locring::localization::{loc_lift_row, LocProblem, MultiplicativeSet};
use locring::poly::{MonomialOrdering, PolyRing};
use locring::ring::{Ideal, Ring};

fn main() {
    let r = Ring::polynomial(&PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap());
    let s = MultiplicativeSet::zariskification(Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    println!("S = {}", s);

    for gens in [vec!["1 - x"], vec!["x*y + y", "y^2"], vec!["x"]] {
        let fs: Vec<_> = gens.iter().map(|g| r.parse(g).unwrap()).collect();
        match s.solve(&fs).unwrap() {
            LocProblem::Found(w) => println!("<{}> meets S at {}", gens.join(", "), w.element),
            LocProblem::Empty(c) => println!("<{}> misses S: {:?}", gens.join(", "), c),
        }
    }

    let a = r.parse_matrix(1, &[vec!["1 + x*y"]]).unwrap();
    let out = loc_lift_row(&s, &a, &[r.parse("y").unwrap()]).unwrap();
    println!("y / (1 + x*y) = {:?}", out.solution());
}
