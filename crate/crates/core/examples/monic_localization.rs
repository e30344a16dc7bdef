//! Z(t): Z[t] localized at the monic polynomials, via strong Gröbner bases.
//!
//! cargo run --example monic_localization

use locring::zt::{monic_localization_problem, strong_groebner_zt, ZPoly};

fn show(gens: &[&str]) {
    let fs: Vec<ZPoly> = gens.iter().map(|g| ZPoly::parse(g).unwrap()).collect();
    let sb = strong_groebner_zt(&fs);
    let basis: Vec<String> = sb.gens.iter().map(|g| g.to_string()).collect();
    println!("<{}>: strong basis [{}]", gens.join(", "), basis.join(", "));
    match monic_localization_problem(&fs) {
        Ok(w) => {
            let cof: Vec<String> = w.cofactors.iter().map(|c| c.to_string()).collect();
            println!("  monic witness {} = [{}] . gens", w.witness, cof.join(", "));
        }
        Err(_) => println!("  no monic element: the ideal stays proper in Z(t)"),
    }
}

fn main() {
    show(&["2*t + 1"]);
    show(&["2", "t^2"]);
    show(&["3*t^2 + 1", "2*t"]);
    show(&["4*t^2 + 2", "6*t"]);
}
