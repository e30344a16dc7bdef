use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{Coeff, Field};

use super::{parse, Monomial, MonomialOrdering, PolyError};

/// Field, variable names and monomial ordering shared by a family of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    ordering: MonomialOrdering,
}

impl PolyRing {
    pub fn new(
        field: Field,
        vars: &[&str],
        ordering: MonomialOrdering,
    ) -> Result<Arc<PolyRing>, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        Self::from_names(field, vars, ordering)
    }

    pub fn from_names(
        field: Field,
        vars: Vec<String>,
        ordering: MonomialOrdering,
    ) -> Result<Arc<PolyRing>, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            let ok = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::BadRing(format!("invalid variable name '{}'", v)));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::BadRing(format!("duplicate variable '{}'", v)));
            }
        }
        ordering.validate(vars.len())?;
        Ok(Arc::new(PolyRing {
            field,
            vars,
            ordering,
        }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.ordering
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self, vec![Term::new(c, Monomial::one(self.nvars()))])
    }

    pub fn from_i64(self: &Arc<Self>, c: i64) -> Polynomial {
        self.constant(self.field.from_i64(c))
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::from_terms(
            self,
            vec![Term::new(self.field.one(), Monomial::var(self.nvars(), i))],
        )
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial, PolyError> {
        parse::parse_poly(text, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// A polynomial in canonical form: terms strictly descending, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Polynomial {
    /// Builds a polynomial from terms in any order, merging duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Polynomial {
        let ord = ring.ordering();
        terms.sort_by(|a, b| ord.cmp_exps(b.mono.exponents(), a.mono.exponents()));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = &last.coeff + &t.coeff;
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn leading_term(&self) -> Result<&Term, PolyError> {
        self.terms.first().ok_or(PolyError::NoLeadingTerm)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> Coeff {
        match self.terms.last() {
            Some(t) if t.mono.is_one() => t.coeff.clone(),
            _ => self.ring.field().zero(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other.terms.iter().map(|t| Term::new(-&t.coeff, t.mono.clone()))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.coeff, &t.mono));
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.coeff, &t.mono));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(Term::new(&a.coeff * &b.coeff, a.mono.mul(&b.mono)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prods))
    }

    /// Merges `self` with an iterator of terms that is itself sorted descending.
    fn merge(&self, other: impl Iterator<Item = Term>) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(self.ring.ordering(), self.terms.iter().cloned(), other),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
                .collect(),
        }
    }

    /// `self - c * m * other`, in place.
    pub fn sub_mul_term(&mut self, c: &Coeff, m: &Monomial, other: &Polynomial) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let neg = -c;
        let old = std::mem::take(&mut self.terms);
        self.terms = merge_terms(
            self.ring.ordering(),
            old.into_iter(),
            other
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * &neg, t.mono.mul(m))),
        );
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term strictly smaller than every present term.
    pub(crate) fn push_smallest(&mut self, t: Term) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|l| self.ring.ordering().cmp(&l.mono, &t.mono) == Ordering::Greater));
        if !t.coeff.is_zero() {
            self.terms.push(t);
        }
    }
}

pub(crate) fn merge_terms(
    ord: &MonomialOrdering,
    a: impl Iterator<Item = Term>,
    b: impl Iterator<Item = Term>,
) -> Vec<Term> {
    let mut a = a.peekable();
    let mut b = b.peekable();
    let (la, lb) = (a.size_hint().0, b.size_hint().0);
    let mut out = Vec::with_capacity(la + lb);
    loop {
        let which = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => ord.cmp_exps(x.mono.exponents(), y.mono.exponents()),
        };
        match which {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let c = &x.coeff + &y.coeff;
                if !c.is_zero() {
                    out.push(Term::new(c, x.mono));
                }
            }
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                t.mono.write_with(f, self.ring.vars())?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on a ring mismatch; use the `checked_` variant to get an error.
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.mono.clone()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
