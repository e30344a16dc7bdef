use serde_json::{json, Value};

use crate::localization::{
    assemble_lift, dom_with_cofactors, lift_from_dom, DomGenerator, EmptinessCertificate, LocError, LocMatrix,
    LocProblem, LocWitness, MultiplicativeSet, RowLift,
};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::Polynomial;
use crate::ring::{Ideal, Ring, RingError};
use crate::zt::{combine, StandardBasis, ZPoly};

use super::bench::{bench_compare, BenchConfig};
use super::file::{parse_list, parse_matrix, parse_zpolys, ring_error, Context};
use super::{Phases, ProblemFile, ResultRecord, RunOptions, Solution, Task, TaskError, TaskOutput, Verdict};

fn input(message: impl Into<String>, location: &str) -> TaskError {
    TaskError::Input {
        message: message.into(),
        location: Some(location.to_string()),
        offset: None,
    }
}

fn loc_error(e: LocError) -> TaskError {
    match e {
        LocError::Invariant(m) => TaskError::Internal(m),
        LocError::Ring(RingError::Matrix(MatrixError::Invariant(m))) => TaskError::Internal(m),
        other => TaskError::Input {
            message: other.to_string(),
            location: None,
            offset: None,
        },
    }
}

fn rerr(e: RingError) -> TaskError {
    match e {
        RingError::Matrix(MatrixError::Invariant(m)) => TaskError::Internal(m),
        other => ring_error(other, "input"),
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn dom_json(dom: &[DomGenerator]) -> Value {
    Value::Array(
        dom.iter()
            .map(|g| json!({ "r": g.r.to_string(), "L": strings(&g.l) }))
            .collect(),
    )
}

fn witness_json(w: &LocWitness) -> Value {
    json!({ "cofactors": strings(&w.cofactors), "element": w.element.to_string() })
}

fn refusal_json(c: &EmptinessCertificate) -> Value {
    match c {
        EmptinessCertificate::AllInPrime { memberships } => json!({
            "kind": "all-in-prime",
            "memberships": memberships.iter().map(|m| strings(m)).collect::<Vec<_>>(),
        }),
        EmptinessCertificate::NoUnitCombination { basis } => json!({
            "kind": "no-unit-combination",
            "groebner_basis": strings(basis),
        }),
    }
}

fn zstrings(ps: &[ZPoly], var: &str) -> Vec<String> {
    ps.iter().map(|p| p.fmt_var(var)).collect()
}

fn basis_json(sb: &StandardBasis, var: &str) -> Value {
    json!({
        "standard_basis": zstrings(&sb.gens, var),
        "leading_coefficients": sb.gens.iter().map(|g| g.leading_coeff().unwrap().to_string()).collect::<Vec<_>>(),
    })
}

struct Record {
    verdict: Verdict,
    solution: Option<Solution>,
    certificate: Option<Value>,
    residual_ok: Option<bool>,
}

impl Record {
    fn solved(solution: Option<Solution>, certificate: Value, residual_ok: Option<bool>) -> Record {
        Record {
            verdict: Verdict::Solved,
            solution,
            certificate: Some(certificate),
            residual_ok,
        }
    }

    fn refused(certificate: Value) -> Record {
        Record {
            verdict: Verdict::NoSolution,
            solution: None,
            certificate: Some(certificate),
            residual_ok: None,
        }
    }
}

fn solution(num: &Matrix, den: &Polynomial) -> Solution {
    Solution {
        numerator: num.to_strings(),
        denominator: den.to_string(),
    }
}

/// Runs one task on a parsed problem file.
pub fn run_task(file: &ProblemFile, task: Task, opts: &RunOptions) -> Result<TaskOutput, TaskError> {
    if let Some(t) = &file.task {
        if t != task.name() {
            return Err(input(format!("file declares task '{}' but '{}' was requested", t, task), "task"));
        }
    }
    let mut phases = Phases::default();
    let ctx = phases.time("gb_cache", || Context::build(file, opts.ordering.as_deref()))?;

    if task == Task::Bench {
        let Context::Field { ring, set: Some(set) } = &ctx else {
            return Err(input("bench needs a field ring and a prime set", "set"));
        };
        let section = file.bench.clone();
        let cfg = BenchConfig {
            m: section.as_ref().map_or(2, |b| b.m),
            n: section.as_ref().map_or(2, |b| b.n),
            deg: section.as_ref().map_or(2, |b| b.deg),
            count: opts.count.unwrap_or(10),
            seed: opts.seed.unwrap_or(0),
        };
        return Ok(TaskOutput::Bench(bench_compare(ring, set, &cfg)?));
    }

    let (ring_name, set_name, record) = match &ctx {
        Context::Field { ring, set } => {
            let rec = run_field(file, task, ring, set.as_ref(), &mut phases)?;
            (ring.to_string(), set.as_ref().map(|s| s.to_string()), rec)
        }
        Context::Integer { var, set } => {
            let rec = run_integer(file, task, var, set.as_ref(), &mut phases)?;
            (format!("ZZ[{}]", var), set.as_ref().map(|s| s.to_string()), rec)
        }
    };
    Ok(TaskOutput::Record(Box::new(ResultRecord {
        task: task.name().to_string(),
        verdict: record.verdict,
        ring: Some(ring_name),
        set: set_name,
        solution: record.solution,
        certificate: record.certificate,
        residual_ok: record.residual_ok,
        error: None,
        timings_ms: phases.into_map(),
    })))
}

fn need<'a, T>(v: &'a Option<T>, what: &str) -> Result<&'a T, TaskError> {
    v.as_ref().ok_or_else(|| input(format!("missing {}", what), what))
}

fn need_set(set: Option<&MultiplicativeSet>, task: Task) -> Result<&MultiplicativeSet, TaskError> {
    set.ok_or_else(|| input(format!("task {} needs a [set] section", task), "set"))
}

fn run_field(
    file: &ProblemFile,
    task: Task,
    ring: &Ring,
    set: Option<&MultiplicativeSet>,
    phases: &mut Phases,
) -> Result<Record, TaskError> {
    let inp = &file.input;
    let matrix_a = || parse_matrix(ring, need(&inp.a, "input.A")?, inp.cols, "input.A");
    let matrix_b = |cols: usize| parse_matrix(ring, need(&inp.b, "input.B")?, Some(cols), "input.B");
    let check_width = |a: &Matrix, b: &Matrix| {
        if a.ncols() == b.ncols() {
            Ok(())
        } else {
            Err(input(format!("A has {} columns, B has {}", a.ncols(), b.ncols()), "input.B"))
        }
    };

    match task {
        Task::Syz => {
            let a = matrix_a()?;
            let l = phases.time("syzygy", || ring.syzygies(&a)).map_err(rerr)?;
            let ok = ring.is_zero_matrix(&l.checked_mul(&a).map_err(|e| rerr(e.into()))?);
            if !ok {
                return Err(TaskError::Internal("L*A is not zero".into()));
            }
            Ok(Record::solved(
                Some(solution(&l, &ring.one())),
                json!({ "rows": l.nrows(), "check": "L*A = 0" }),
                Some(ok),
            ))
        }
        Task::Lift => {
            let a = matrix_a()?;
            let b = matrix_b(a.ncols())?;
            check_width(&a, &b)?;
            let oracle = phases.time("gb", || ring.lift_oracle(&a)).map_err(rerr)?;
            let mut rows = Vec::with_capacity(b.nrows());
            for i in 0..b.nrows() {
                match phases.time("lift", || oracle.lift_row(b.row(i))).map_err(rerr)? {
                    Some(x) => rows.push(x),
                    None => {
                        let residue = oracle.residue(b.row(i));
                        return Ok(Record::refused(json!({ "row": i, "normal_form": strings(&residue) })));
                    }
                }
            }
            let x = Matrix::from_rows(ring.base(), a.nrows(), rows);
            let ok = ring.mul_matrix(&x, &a).map_err(rerr)? == b;
            if !ok {
                return Err(TaskError::Internal("X*A != B after lifting".into()));
            }
            Ok(Record::solved(Some(solution(&x, &ring.one())), json!({ "check": "X*A = B" }), Some(ok)))
        }
        Task::Locsolve => {
            let set = need_set(set, task)?;
            let a = matrix_a()?;
            let b = matrix_b(a.ncols())?;
            check_width(&a, &b)?;
            let mut rows = Vec::with_capacity(b.nrows());
            let mut certs = Vec::with_capacity(b.nrows());
            for i in 0..b.nrows() {
                let dom = phases
                    .time("syzygy", || dom_with_cofactors(ring, &a, b.row(i)))
                    .map_err(loc_error)?;
                match phases
                    .time("localization", || lift_from_dom(set, &a, b.row(i), dom))
                    .map_err(loc_error)?
                {
                    RowLift::Solved { x, dom, witness } => {
                        certs.push(json!({ "dom": dom_json(&dom), "witness": witness_json(&witness) }));
                        rows.push((x.numerator().row(0).to_vec(), x.denominator().clone()));
                    }
                    RowLift::Unsolvable { dom, certificate } => {
                        return Ok(Record::refused(json!({
                            "row": i,
                            "dom": dom_json(&dom),
                            "refusal": refusal_json(&certificate),
                        })));
                    }
                }
            }
            let a1 = LocMatrix::integral(set, a.clone()).map_err(loc_error)?;
            let b1 = LocMatrix::integral(set, b.clone()).map_err(loc_error)?;
            let x = assemble_lift(set, &a1, &b1, &rows).map_err(loc_error)?;
            let ok = loc_residual_ok(set, ring, &x, &a, &b).map_err(loc_error)?;
            if !ok {
                return Err(TaskError::Internal("localized residual check failed".into()));
            }
            Ok(Record::solved(
                Some(solution(x.numerator(), x.denominator())),
                json!({ "rows": certs }),
                Some(ok),
            ))
        }
        Task::Member => {
            let gens = parse_list(ring.base(), need(&inp.ideal, "input.ideal")?, "input.ideal")?;
            let ideal = Ideal::new(ring, gens).map_err(rerr)?;
            match &inp.f {
                Some(text) => {
                    let f = ring.parse(text).map_err(|e| ring_error(e, "input.f"))?;
                    let oracle = phases.time("gb", || ideal.membership_oracle()).map_err(rerr)?;
                    match phases.time("lift", || oracle.cofactors(&f)).map_err(rerr)? {
                        Some(c) => {
                            let back = ring.reduce(
                                &c.iter().zip(ideal.gens()).fold(ring.zero(), |acc, (a, g)| &acc + &(a * g)),
                            );
                            let ok = back == ring.reduce(&f);
                            if !ok {
                                return Err(TaskError::Internal("membership cofactors do not recombine".into()));
                            }
                            Ok(Record::solved(None, json!({ "cofactors": strings(&c) }), Some(ok)))
                        }
                        None => Ok(Record::refused(json!({ "normal_form": oracle.residue(&f).to_string() }))),
                    }
                }
                None => {
                    let set = need_set(set, task)?;
                    match phases
                        .time("localization", || set.solve(ideal.gens()))
                        .map_err(loc_error)?
                    {
                        LocProblem::Found(w) => {
                            let ok = set.contains(&w.element).map_err(loc_error)?;
                            if !ok {
                                return Err(TaskError::Internal("witness is not in the set".into()));
                            }
                            Ok(Record::solved(None, json!({ "witness": witness_json(&w) }), Some(ok)))
                        }
                        LocProblem::Empty(c) => Ok(Record::refused(json!({ "refusal": refusal_json(&c) }))),
                    }
                }
            }
        }
        Task::Dom => {
            let a = matrix_a()?;
            let b = matrix_b(a.ncols())?;
            check_width(&a, &b)?;
            let mut out = Vec::with_capacity(b.nrows());
            for i in 0..b.nrows() {
                let dom = phases
                    .time("syzygy", || dom_with_cofactors(ring, &a, b.row(i)))
                    .map_err(loc_error)?;
                out.push(dom_json(&dom));
            }
            Ok(Record::solved(None, json!({ "rows": out }), Some(true)))
        }
        Task::Iszero => {
            let f = ring
                .parse(need(&inp.f, "input.f")?)
                .map_err(|e| ring_error(e, "input.f"))?;
            match set {
                None => {
                    let nf = ring.reduce(&f);
                    if nf.is_zero() {
                        Ok(Record::solved(None, json!({ "normal_form": "0" }), None))
                    } else {
                        Ok(Record::refused(json!({ "normal_form": nf.to_string() })))
                    }
                }
                Some(set) => {
                    let ann = phases
                        .time("syzygy", || ring.annihilator(std::slice::from_ref(&f)))
                        .map_err(rerr)?;
                    let found = phases.time("localization", || set.solve(ann.gens())).map_err(loc_error)?;
                    let cert = json!({ "annihilator": strings(ann.gens()) });
                    match found {
                        LocProblem::Found(w) => {
                            let ok = ring.is_zero(&(&w.element * &f));
                            Ok(Record::solved(
                                None,
                                json!({ "annihilator": cert["annihilator"], "witness": witness_json(&w) }),
                                Some(ok),
                            ))
                        }
                        LocProblem::Empty(c) => Ok(Record::refused(
                            json!({ "annihilator": cert["annihilator"], "refusal": refusal_json(&c) }),
                        )),
                    }
                }
            }
        }
        Task::Bench => unreachable!(),
    }
}

/// Recomputes `X*A - B` over `S^-1 R` entry by entry.
fn loc_residual_ok(set: &MultiplicativeSet, ring: &Ring, x: &LocMatrix, a: &Matrix, b: &Matrix) -> Result<bool, LocError> {
    let xa = ring.mul_matrix(x.numerator(), a)?;
    let residual = xa.checked_sub(&b.scale(x.denominator()))?;
    for p in residual.entries() {
        if !crate::localization::loc_is_zero(set, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run_integer(
    file: &ProblemFile,
    task: Task,
    var: &str,
    set: Option<&MultiplicativeSet>,
    phases: &mut Phases,
) -> Result<Record, TaskError> {
    let inp = &file.input;
    let set = need_set(set, task)?;
    let gens = match task {
        Task::Member => {
            if inp.f.is_some() {
                return Err(input("membership with cofactors is only available over fields", "input.f"));
            }
            parse_zpolys(need(&inp.ideal, "input.ideal")?, var, "input.ideal")?
        }
        Task::Locsolve => {
            let a = need(&inp.a, "input.A")?;
            if a.iter().any(|r| r.len() != 1) {
                return Err(input("over ZZ[t] only a column A with B = [[\"1\"]] is supported", "input.A"));
            }
            if let Some(b) = &inp.b {
                let one = b.len() == 1 && b[0].len() == 1 && ZPoly::parse_var(&b[0][0], var).ok() == Some(ZPoly::one());
                if !one {
                    return Err(input("over ZZ[t] only B = [[\"1\"]] is supported", "input.B"));
                }
            }
            let col: Vec<String> = a.iter().map(|r| r[0].clone()).collect();
            parse_zpolys(&col, var, "input.A")?
        }
        _ => return Err(input(format!("task {} is not available over ZZ[t]", task), "task")),
    };
    let out = phases
        .time("localization", || set.solve_int_poly(&gens))
        .map_err(loc_error)?;
    match out {
        Ok(w) => {
            let ok = w.witness.is_monic() && combine(&w.cofactors, &gens) == w.witness;
            if !ok {
                return Err(TaskError::Internal("monic witness failed to verify".into()));
            }
            let mut cert = basis_json(&w.basis, var);
            cert["witness"] = json!(w.witness.fmt_var(var));
            cert["cofactors"] = json!(zstrings(&w.cofactors, var));
            cert["bezout"] = json!(w.bezout.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            let sol = (task == Task::Locsolve).then(|| Solution {
                numerator: vec![zstrings(&w.cofactors, var)],
                denominator: w.witness.fmt_var(var),
            });
            Ok(Record::solved(sol, cert, Some(ok)))
        }
        Err(sb) => Ok(Record::refused(basis_json(&sb, var))),
    }
}
