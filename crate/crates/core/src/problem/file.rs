use serde::Deserialize;

use crate::arith::Field;
use crate::matrix::Matrix;
use crate::poly::{MonomialOrdering, PolyError, PolyRing, Polynomial};
use crate::ring::{Ideal, Ring, RingError};
use crate::localization::MultiplicativeSet;
use crate::zt::{ZPoly, ZtError};

use super::TaskError;

/// A problem file, written in TOML.
///
/// ```toml
/// task = "locsolve"            # optional
///
/// [ring]
/// field = "QQ"                 # "QQ", "GF(p)" or "ZZ" (univariate only)
/// vars = ["x", "y"]
/// ordering = "degrevlex"       # optional
/// quotient = ["x*y"]           # optional
///
/// [set]                        # optional
/// kind = "prime"               # "prime", "zariski" or "monic"
/// gens = ["x"]
///
/// [input]
/// A = [["x"], ["y"]]
/// B = [["1"]]
/// cols = 1                     # width, needed only when A and B have no rows
/// ideal = ["x^2", "y"]
/// f = "x*y"
///
/// [bench]                      # optional, for the bench task
/// m = 2
/// n = 2
/// deg = 2
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub task: Option<String>,
    pub ring: RingSection,
    pub set: Option<SetSection>,
    #[serde(default)]
    pub input: InputSection,
    pub bench: Option<BenchSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub field: String,
    pub vars: Vec<String>,
    pub ordering: Option<String>,
    #[serde(default)]
    pub quotient: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSection {
    pub kind: String,
    #[serde(default)]
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSection {
    #[serde(rename = "A")]
    pub a: Option<Vec<Vec<String>>>,
    #[serde(rename = "B")]
    pub b: Option<Vec<Vec<String>>>,
    pub cols: Option<usize>,
    pub ideal: Option<Vec<String>>,
    pub f: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchSection {
    #[serde(default = "two")]
    pub m: usize,
    #[serde(default = "two")]
    pub n: usize,
    #[serde(default = "two_u32")]
    pub deg: u32,
}

fn two() -> usize {
    2
}

fn two_u32() -> u32 {
    2
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, TaskError> {
        toml::from_str(text).map_err(|e| TaskError::Input {
            message: e.message().to_string(),
            location: Some("file".into()),
            offset: e.span().map(|s| s.start),
        })
    }
}

/// The rings and sets a problem file describes, built and validated.
pub(crate) enum Context {
    Field { ring: Ring, set: Option<MultiplicativeSet> },
    Integer { var: String, set: Option<MultiplicativeSet> },
}

pub(crate) fn poly_error(e: PolyError, location: &str) -> TaskError {
    let offset = match &e {
        PolyError::Parse(p) => Some(p.offset),
        _ => None,
    };
    TaskError::Input {
        message: e.to_string(),
        location: Some(location.to_string()),
        offset,
    }
}

pub(crate) fn ring_error(e: RingError, location: &str) -> TaskError {
    match e {
        RingError::Poly(p) => poly_error(p, location),
        other => TaskError::Input {
            message: other.to_string(),
            location: Some(location.to_string()),
            offset: None,
        },
    }
}

fn input(message: impl Into<String>, location: &str) -> TaskError {
    TaskError::Input {
        message: message.into(),
        location: Some(location.to_string()),
        offset: None,
    }
}

impl Context {
    pub(crate) fn build(file: &ProblemFile, ordering: Option<&str>) -> Result<Context, TaskError> {
        let section = &file.ring;
        let ord_text = ordering.or(section.ordering.as_deref()).unwrap_or("degrevlex");
        let ord: MonomialOrdering = ord_text.parse().map_err(|e: PolyError| poly_error(e, "ring.ordering"))?;
        let set_kind = file.set.as_ref().map(|s| s.kind.as_str());

        if section.field.trim() == "ZZ" {
            if section.vars.len() != 1 || !section.quotient.is_empty() {
                return Err(input("ZZ rings must be univariate without a quotient", "ring"));
            }
            let set = match set_kind {
                None => None,
                Some("monic") => Some(MultiplicativeSet::monic_univariate_int()),
                Some(k) => return Err(input(format!("set kind '{}' needs a field of coefficients", k), "set.kind")),
            };
            return Ok(Context::Integer {
                var: section.vars[0].clone(),
                set,
            });
        }

        let field = parse_field(&section.field)?;
        let base = PolyRing::from_names(field, section.vars.clone(), ord).map_err(|e| poly_error(e, "ring"))?;
        let ring = if section.quotient.is_empty() {
            Ring::polynomial(&base)
        } else {
            let gens = parse_list(&base, &section.quotient, "ring.quotient")?;
            Ring::quotient(&base, gens).map_err(|e| ring_error(e, "ring.quotient"))?
        };
        let set = match file.set.as_ref() {
            None => None,
            Some(s) => {
                let gens = parse_list(ring.base(), &s.gens, "set.gens")?;
                let ideal = Ideal::new(&ring, gens).map_err(|e| ring_error(e, "set.gens"))?;
                let built = match s.kind.as_str() {
                    "prime" => MultiplicativeSet::prime_complement(ideal),
                    "zariski" => MultiplicativeSet::zariskification(ideal),
                    "monic" => return Err(input("monic sets live in ZZ[t]", "set.kind")),
                    k => return Err(input(format!("unknown set kind '{}'", k), "set.kind")),
                };
                Some(built.map_err(|e| input(e.to_string(), "set"))?)
            }
        };
        Ok(Context::Field { ring, set })
    }
}

fn parse_field(text: &str) -> Result<Field, TaskError> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = p.trim().parse().map_err(|_| input(format!("bad modulus in '{}'", t), "ring.field"))?;
        return Field::prime(p).map_err(|e| input(e.to_string(), "ring.field"));
    }
    Err(input(format!("unknown field '{}'", t), "ring.field"))
}

pub(crate) fn parse_list(ring: &std::sync::Arc<PolyRing>, items: &[String], location: &str) -> Result<Vec<Polynomial>, TaskError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| ring.parse(s).map_err(|e| poly_error(e, &format!("{}[{}]", location, i))))
        .collect()
}

pub(crate) fn parse_matrix(
    ring: &Ring,
    rows: &[Vec<String>],
    cols: Option<usize>,
    location: &str,
) -> Result<Matrix, TaskError> {
    let width = match (rows.first(), cols) {
        (Some(r), _) => r.len(),
        (None, Some(c)) => c,
        (None, None) => 0,
    };
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(input(
                format!("row has {} entries, expected {}", r.len(), width),
                &format!("{}[{}]", location, i),
            ));
        }
        let mut row = Vec::with_capacity(width);
        for (j, s) in r.iter().enumerate() {
            let p = ring
                .base()
                .parse(s)
                .map_err(|e| poly_error(e, &format!("{}[{}][{}]", location, i, j)))?;
            row.push(ring.reduce(&p));
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(ring.base(), width, out))
}

pub(crate) fn parse_zpolys(items: &[String], var: &str, location: &str) -> Result<Vec<ZPoly>, TaskError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            ZPoly::parse_var(s, var).map_err(|e| {
                let offset = match &e {
                    ZtError::Parse(p) => Some(p.offset),
                    ZtError::NotIntegral(o) => Some(*o),
                };
                TaskError::Input {
                    message: e.to_string(),
                    location: Some(format!("{}[{}]", location, i)),
                    offset,
                }
            })
        })
        .collect()
}
