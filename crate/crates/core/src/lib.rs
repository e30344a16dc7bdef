//! Exact linear algebra over localizations of polynomial rings.
//!
//! The building blocks are layered:
//!
//! * [`arith`]: big integers, rationals and prime fields.
//! * [`poly`]: sparse multivariate polynomials and monomial orderings.
//! * [`groebner`]: Buchberger's algorithm on free modules, normal forms with
//!   cofactors, syzygies.
//! * [`ring`]: polynomial rings and their quotients `k[x]/I` as computable
//!   rings (syzygies, lifts, membership, annihilators).
//! * [`zt`]: strong Gröbner bases over `Z[t]` and the monic localization `Z(t)`.
//! * [`localization`]: multiplicative sets, dom ideals and solving `X*A = B`
//!   over `S^-1 R`, with certificates for every refusal.
//! * [`problem`]: problem files, result records and the benchmark harness used
//!   by the `locring` binary.
//!
//! Each capability has a runnable example:
//!
//! | example              | shows                                               |
//! |----------------------|-----------------------------------------------------|
//! | `polynomials`        | parsing, arithmetic, orderings, prime fields        |
//! | `groebner`           | reduced Gröbner bases and normal forms              |
//! | `syzygies`           | syzygy modules, lifts, factoring through syzygies   |
//! | `quotient_ring`      | computing modulo an ideal                           |
//! | `local_ring`         | solving over `k[x,y]` at a maximal ideal            |
//! | `zariskification`    | localizing at `1 + L`                               |
//! | `monic_localization` | `Z(t)` and strong bases over `Z[t]`                 |
//! | `weak_lift`          | localized syzygies and S-torsion                    |
//! | `compare_bl`         | the dom-ideal solver against the BL method          |
//! | `problem_files`      | running a TOML problem in-process                   |
//!
//! ```
//! use locring::arith::Field;
//! use locring::localization::{loc_lift_row, MultiplicativeSet};
//! use locring::poly::{MonomialOrdering, PolyRing};
//! use locring::ring::{Ideal, Ring};
//!
//! let r = Ring::polynomial(&PolyRing::new(Field::Rationals, &["x"], MonomialOrdering::Lex).unwrap());
//! let s = MultiplicativeSet::prime_complement(Ideal::parse(&r, &["x"]).unwrap()).unwrap();
//! let a = r.parse_matrix(1, &[vec!["1 + x"]]).unwrap();
//! let x = loc_lift_row(&s, &a, &[r.one()]).unwrap();
//! let x = x.solution().unwrap();
//! assert_eq!(x.denominator(), &r.parse("1 + x").unwrap());
//! ```

pub mod arith;
pub mod groebner;
pub mod localization;
pub mod matrix;
pub mod poly;
pub mod problem;
pub mod ring;
pub mod zt;
