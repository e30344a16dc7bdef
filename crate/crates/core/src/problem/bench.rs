use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::groebner::ideal_basis;
use crate::localization::{bl_lift_maximal, loc_lift_row, LocMatrix, MultiplicativeSet};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Polynomial, Term};
use crate::ring::Ring;

use super::TaskError;

pub const CSV_HEADER: &str = "id,m,n,deg,verdict_dom,verdict_bl,ms_dom,ms_bl,residual_ok";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub m: usize,
    pub n: usize,
    pub deg: u32,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub id: usize,
    pub m: usize,
    pub n: usize,
    pub deg: u32,
    pub solved_dom: bool,
    pub solved_bl: bool,
    pub ms_dom: f64,
    pub ms_bl: f64,
    pub residual_ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub warnings: Vec<String>,
}

fn verdict(solved: bool) -> &'static str {
    if solved {
        "solved"
    } else {
        "no-solution"
    }
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{:.3},{:.3},{}\n",
                r.id,
                r.m,
                r.n,
                r.deg,
                verdict(r.solved_dom),
                verdict(r.solved_bl),
                r.ms_dom,
                r.ms_bl,
                r.residual_ok
            ));
        }
        out
    }
}

fn random_poly(ring: &Ring, rng: &mut ChaCha8Rng, deg: u32) -> Polynomial {
    let base = ring.base();
    let nvars = base.nvars();
    let nterms = rng.gen_range(0..=3);
    let mut terms = Vec::with_capacity(nterms);
    for _ in 0..nterms {
        let total = rng.gen_range(0..=deg);
        let mut exps = vec![0u32; nvars];
        for _ in 0..total {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        terms.push(Term::new(base.field().from_i64(c), Monomial::from_exponents(exps)));
    }
    ring.reduce(&Polynomial::from_terms(base, terms))
}

fn random_matrix(ring: &Ring, rng: &mut ChaCha8Rng, rows: usize, cols: usize, deg: u32) -> Matrix {
    let data = (0..rows * cols).map(|_| random_poly(ring, rng, deg)).collect();
    Matrix::new(ring.base(), rows, cols, data)
}

/// Instance `id`: even ids are solvable by construction (`b = x*A`, then `A`
/// is multiplied by a unit `u` in `1 + m`), odd ids are unconstrained.
pub(crate) fn instance(ring: &Ring, maximal: &[Polynomial], cfg: &BenchConfig, id: usize) -> (Matrix, Vec<Polynomial>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(id as u64);
    let a = random_matrix(ring, &mut rng, cfg.m, cfg.n, cfg.deg);
    if id.is_multiple_of(2) {
        let x = random_matrix(ring, &mut rng, 1, cfg.m, cfg.deg);
        let b = ring.mul_matrix(&x, &a).expect("shapes agree");
        let mut u = ring.one();
        for mk in maximal {
            let c = random_poly(ring, &mut rng, 1);
            u = &u + &(&c * mk);
        }
        let a = ring.reduce_matrix(&a.scale(&u));
        (a, b.row(0).to_vec())
    } else {
        let b = random_matrix(ring, &mut rng, 1, cfg.n, cfg.deg);
        (a, b.row(0).to_vec())
    }
}

fn residual_ok(ring: &Ring, x: &LocMatrix, a: &Matrix, b: &[Polynomial]) -> bool {
    let Ok(lhs) = ring.mul_matrix(x.numerator(), a) else {
        return false;
    };
    (0..a.ncols()).all(|j| ring.is_zero(&(lhs.get(0, j) - &(&b[j] * x.denominator()))))
}

/// A warning unless `m` is visibly maximal, i.e. its reduced Gröbner basis has
/// exactly the variables as leading monomials.
fn maximality_warning(ring: &Ring, set: &MultiplicativeSet) -> Option<String> {
    let prime = set.prime()?;
    let nvars = ring.base().nvars();
    let gb = ideal_basis(ring.base(), prime.gens());
    let mut leads: Vec<usize> = gb
        .iter()
        .filter_map(|g| {
            let m = g.leading_monomial()?;
            (m.degree() == 1).then(|| m.exponents().iter().position(|&e| e == 1).unwrap())
        })
        .collect();
    leads.sort_unstable();
    let visibly_maximal = !ring.is_quotient() && gb.len() == nvars && leads == (0..nvars).collect::<Vec<_>>();
    (!visibly_maximal).then(|| {
        format!(
            "warning: could not confirm that {} is maximal; the BL comparison assumes it is",
            prime
        )
    })
}

/// Runs the dom-ideal solver and the BL method on `cfg.count` seeded random
/// systems and compares their verdicts. A disagreement is a bug and aborts.
pub fn bench_compare(ring: &Ring, set: &MultiplicativeSet, cfg: &BenchConfig) -> Result<BenchReport, TaskError> {
    let maximal = set
        .prime()
        .ok_or_else(|| TaskError::Input {
            message: "bench needs a prime set generated by a maximal ideal".into(),
            location: Some("set.kind".into()),
            offset: None,
        })?
        .gens()
        .to_vec();
    let warnings: Vec<String> = maximality_warning(ring, set).into_iter().collect();

    let rows: Vec<Result<BenchRow, TaskError>> = (0..cfg.count)
        .into_par_iter()
        .map(|id| {
            let (a, b) = instance(ring, &maximal, cfg, id);
            let internal = |e: crate::localization::LocError| TaskError::Internal(format!("instance {}: {}", id, e));
            let t = Instant::now();
            let dom = loc_lift_row(set, &a, &b).map_err(internal)?;
            let ms_dom = t.elapsed().as_secs_f64() * 1000.0;
            let t = Instant::now();
            let bl = bl_lift_maximal(set, &a, &b).map_err(internal)?;
            let ms_bl = t.elapsed().as_secs_f64() * 1000.0;

            let solved_dom = dom.solution().is_some();
            let solved_bl = bl.is_some();
            if solved_dom != solved_bl {
                return Err(TaskError::Internal(format!(
                    "verdict disagreement on instance {}: dom={}, bl={}\nA = {}\nb = [{}]",
                    id,
                    verdict(solved_dom),
                    verdict(solved_bl),
                    a,
                    b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
                )));
            }
            let residual = dom.solution().is_none_or(|x| residual_ok(ring, x, &a, &b))
                && bl.as_ref().is_none_or(|x| residual_ok(ring, x, &a, &b));
            Ok(BenchRow {
                id,
                m: cfg.m,
                n: cfg.n,
                deg: cfg.deg,
                solved_dom,
                solved_bl,
                ms_dom,
                ms_bl,
                residual_ok: residual,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(BenchReport { rows, warnings })
}
