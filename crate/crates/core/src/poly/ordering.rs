use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{Monomial, PolyError};

/// Global monomial orderings. Local orderings are not representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    Lex,
    DegRevLex,
    /// Variables `0..split` form the first block and dominate; `inner` is
    /// applied to each block in turn.
    BlockElimination {
        split: usize,
        inner: Box<MonomialOrdering>,
    },
}

impl MonomialOrdering {
    pub fn block(split: usize, inner: MonomialOrdering) -> Self {
        MonomialOrdering::BlockElimination {
            split,
            inner: Box::new(inner),
        }
    }

    /// Panics when the monomials have different lengths; see [`Self::try_cmp`].
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "monomials of different length");
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::LengthMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp_exps(a.exponents(), b.exponents()))
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrdering::Lex => a.cmp(b),
            MonomialOrdering::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrdering::BlockElimination { split, inner } => {
                let k = (*split).min(a.len());
                inner
                    .cmp_exps(&a[..k], &b[..k])
                    .then_with(|| inner.cmp_exps(&a[k..], &b[k..]))
            }
        }
    }

    pub(crate) fn validate(&self, nvars: usize) -> Result<(), PolyError> {
        match self {
            MonomialOrdering::BlockElimination { split, inner } => {
                if *split > nvars {
                    return Err(PolyError::BadOrdering(format!(
                        "block split {} exceeds {} variables",
                        split, nvars
                    )));
                }
                inner.validate(nvars)
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrdering::Lex => write!(f, "lex"),
            MonomialOrdering::DegRevLex => write!(f, "degrevlex"),
            MonomialOrdering::BlockElimination { split, inner } => {
                write!(f, "block({},{})", split, inner)
            }
        }
    }
}

const LOCAL_NAMES: &[&str] = &["ls", "ds", "neglex", "negdegrevlex", "negdeglex", "local"];

impl FromStr for MonomialOrdering {
    type Err = PolyError;

    /// Accepts `lex`, `degrevlex` (alias `grevlex`) and `block(k,<inner>)`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        match s {
            "lex" | "lp" => return Ok(MonomialOrdering::Lex),
            "degrevlex" | "grevlex" | "dp" => return Ok(MonomialOrdering::DegRevLex),
            _ => {}
        }
        if LOCAL_NAMES.contains(&s) {
            return Err(PolyError::BadOrdering(format!(
                "local ordering '{}' is not supported; only global orderings are",
                s
            )));
        }
        if let Some(body) = s.strip_prefix("block(").and_then(|r| r.strip_suffix(')')) {
            if let Some((k, inner)) = body.split_once(',') {
                let split = k
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| PolyError::BadOrdering(format!("bad block split in '{}'", s)))?;
                return Ok(MonomialOrdering::block(split, inner.parse()?));
            }
        }
        Err(PolyError::BadOrdering(format!("unknown ordering '{}'", s)))
    }
}
