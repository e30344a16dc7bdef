//! The dom-ideal solver against the BL method on seeded random systems.
//!
//! cargo run --release --example compare_bl [count] [seed]

use locring::arith::Field;
use locring::localization::{bl_lift_maximal, loc_lift_row, MultiplicativeSet};
use locring::poly::{MonomialOrdering, PolyRing};
use locring::problem::{bench_compare, BenchConfig};
use locring::ring::{Ideal, Ring};

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);

    let r = Ring::polynomial(&PolyRing::new(Field::Rationals, &["x", "y", "z"], MonomialOrdering::DegRevLex).unwrap());
    let s = MultiplicativeSet::prime_complement(Ideal::parse(&r, &["x", "y", "z"]).unwrap()).unwrap();

    let a = r.parse_matrix(1, &[vec!["1 + x"], vec!["y*z"]]).unwrap();
    let b = [r.parse("z").unwrap()];
    println!("dom: {:?}", loc_lift_row(&s, &a, &b).unwrap().solution());
    println!("BL:  {:?}", bl_lift_maximal(&s, &a, &b).unwrap());

    let cfg = BenchConfig { m: 2, n: 2, deg: 2, count, seed };
    let report = bench_compare(&r, &s, &cfg).expect("the methods agree");
    print!("{}", report.to_csv());
    let total = |f: fn(&locring::problem::BenchRow) -> f64| report.rows.iter().map(f).sum::<f64>();
    println!("total ms: dom {:.1}, BL {:.1}", total(|r| r.ms_dom), total(|r| r.ms_bl));
}
