//! Polynomial text grammar:
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow := ident ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. Variables come from the ring, never from the text.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::Integer;

use super::{Monomial, PolyError, PolyRing, Polynomial, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    CoefficientNotInField(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error at byte {}: {}", self.offset, m),
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable '{}' at byte {}", v, self.offset)
            }
            ParseErrorKind::CoefficientNotInField(c) => write!(
                f,
                "coefficient {} at byte {} is not in the coefficient domain",
                c, self.offset
            ),
        }
    }
}

/// A parsed term before it is mapped into a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub num: Integer,
    pub den: Integer,
    pub exponents: Vec<u32>,
    /// Byte offset of the coefficient, for error reporting.
    pub offset: usize,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Syntax(msg.into()),
        })
    }

    fn uint(&mut self, what: &str) -> Result<Integer, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {}", what));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some((start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }
}

/// Parses `text` into raw terms over the variables `vars`.
pub fn parse_terms(text: &str, vars: &[String]) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    let mut negative = false;
    if cur.eat(b'-') {
        negative = true;
    } else {
        cur.eat(b'+');
    }
    loop {
        let mut term = parse_term(&mut cur, vars)?;
        if negative {
            term.num = -term.num;
        }
        out.push(term);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(_) => return cur.err("expected '+', '-' or end of input"),
        }
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, vars: &[String]) -> Result<RawTerm, ParseError> {
    let offset = {
        cur.skip_ws();
        cur.pos
    };
    let mut num = Integer::one();
    let mut den = Integer::one();
    let mut exponents = vec![0u32; vars.len()];
    let mut need_varpow = true;
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            num = cur.uint("integer")?;
            if cur.eat(b'/') {
                den = cur.uint("denominator")?;
            }
            need_varpow = false;
            if !cur.eat(b'*') {
                return Ok(RawTerm {
                    num,
                    den,
                    exponents,
                    offset,
                });
            }
        }
        None => return cur.err("expected a term"),
        _ => {}
    }
    loop {
        let Some((at, name)) = cur.ident() else {
            return if need_varpow {
                cur.err("expected a coefficient or variable")
            } else {
                cur.err("expected a variable after '*'")
            };
        };
        let Some(i) = vars.iter().position(|v| v == name) else {
            return Err(ParseError {
                offset: at,
                kind: ParseErrorKind::UnknownVariable(name.to_string()),
            });
        };
        let mut e = 1u32;
        if cur.eat(b'^') {
            let v = cur.uint("exponent")?;
            e = match u32::try_from(v) {
                Ok(e) => e,
                Err(_) => return cur.err("exponent too large"),
            };
        }
        exponents[i] = match exponents[i].checked_add(e) {
            Some(s) => s,
            None => return cur.err("exponent too large"),
        };
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok(RawTerm {
        num,
        den,
        exponents,
        offset,
    })
}

pub(crate) fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
    let raw = parse_terms(text, ring.vars())?;
    let field = ring.field();
    let mut terms = Vec::with_capacity(raw.len());
    for t in raw {
        if t.den.is_zero() {
            return Err(ParseError {
                offset: t.offset,
                kind: ParseErrorKind::CoefficientNotInField(format!("{}/{}", t.num, t.den)),
            }
            .into());
        }
        let c = field.from_fraction(&t.num, &t.den).map_err(|_| ParseError {
            offset: t.offset,
            kind: ParseErrorKind::CoefficientNotInField(format!("{}/{}", t.num, t.den)),
        })?;
        terms.push(Term::new(c, Monomial::from_exponents(t.exponents)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
