//! Parsing, arithmetic and printing of multivariate polynomials.
//!
//! cargo run --example polynomials

use locring::arith::Field;
use locring::poly::{MonomialOrdering, PolyRing};

fn main() {
    let r = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
    let f = r.parse("x^2 - 1/2*x*y + 3").unwrap();
    let g = r.parse("x - y").unwrap();
    println!("f       = {}", f);
    println!("f * g   = {}", &f * &g);
    println!("f^2     = {}", f.pow(2));
    println!("lt(f*g) = {:?}", (&f * &g).leading_monomial().unwrap().exponents());

    let lex = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::Lex).unwrap();
    println!("lex     = {}", lex.parse("y^3 + x").unwrap());

    let gf = PolyRing::new(Field::prime(7).unwrap(), &["t"], MonomialOrdering::Lex).unwrap();
    println!("GF(7)   : (t + 3)^7 = {}", gf.parse("t + 3").unwrap().pow(7));

    match r.parse("x^") {
        Err(e) => println!("error   : {}", e),
        Ok(p) => println!("parsed {}", p),
    }
}
