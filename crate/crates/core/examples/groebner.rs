//! Reduced Gröbner bases of ideals and normal forms.
//!
//! cargo run --example groebner

use locring::arith::Field;
use locring::groebner::{ideal_basis, reduce_poly};
use locring::poly::{MonomialOrdering, PolyRing};

fn main() {
    let r = PolyRing::new(Field::Rationals, &["x", "y", "z"], MonomialOrdering::Lex).unwrap();
    let gens: Vec<_> = ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]
        .iter()
        .map(|s| r.parse(s).unwrap())
        .collect();
    let gb = ideal_basis(&r, &gens);
    println!("cyclic-3, lex:");
    for g in &gb {
        println!("  {}", g);
    }
    let f = r.parse("x^3").unwrap();
    println!("x^3 mod I = {}", reduce_poly(&f, &gb));
    println!("z^3 - 1 in I: {}", reduce_poly(&r.parse("z^3 - 1").unwrap(), &gb).is_zero());
}
