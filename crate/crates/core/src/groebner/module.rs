use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::Coeff;
use crate::poly::{Monomial, MonomialOrdering, PolyRing, Polynomial, Term};

/// How `(monomial, component)` pairs compare inside one priority group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WithinGroup {
    PositionOverTerm,
    TermOverPosition,
}

/// A monomial ordering on the free module `R^{1 x w}`.
///
/// Components are partitioned into priority groups: any term in a lower-numbered
/// group exceeds every term in a higher-numbered group. Inside a group the
/// `rule` decides, with smaller component indices ranked higher.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleOrdering {
    base: MonomialOrdering,
    group_of: Vec<usize>,
    rule: WithinGroup,
}

impl ModuleOrdering {
    /// Position-over-term on `rank` components, one group.
    pub fn pot(base: MonomialOrdering, rank: usize) -> Self {
        ModuleOrdering {
            base,
            group_of: vec![0; rank],
            rule: WithinGroup::PositionOverTerm,
        }
    }

    /// Consecutive groups of the given widths.
    pub fn with_blocks(base: MonomialOrdering, widths: &[usize], rule: WithinGroup) -> Self {
        let group_of = widths
            .iter()
            .enumerate()
            .flat_map(|(g, &w)| std::iter::repeat_n(g, w))
            .collect();
        ModuleOrdering {
            base,
            group_of,
            rule,
        }
    }

    /// Left block of width `n` dominates the right block of width `m`; terms
    /// compare before positions inside each block.
    pub fn left_priority(base: MonomialOrdering, n: usize, m: usize) -> Self {
        Self::with_blocks(base, &[n, m], WithinGroup::TermOverPosition)
    }

    pub fn base(&self) -> &MonomialOrdering {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.group_of.len()
    }

    pub fn rule(&self) -> WithinGroup {
        self.rule
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let (ga, gb) = (self.group_of[a.1], self.group_of[b.1]);
        if ga != gb {
            return gb.cmp(&ga);
        }
        match self.rule {
            WithinGroup::PositionOverTerm => b
                .1
                .cmp(&a.1)
                .then_with(|| self.base.cmp(a.0, b.0)),
            WithinGroup::TermOverPosition => {
                self.base.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

/// A row of a free module `R^{1 x w}` over a polynomial ring.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Arc<PolyRing>,
    comps: Vec<Polynomial>,
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl ModuleElement {
    pub fn new(ring: &Arc<PolyRing>, comps: Vec<Polynomial>) -> Self {
        ModuleElement {
            ring: ring.clone(),
            comps,
        }
    }

    pub fn zero(ring: &Arc<PolyRing>, width: usize) -> Self {
        ModuleElement::new(ring, vec![ring.zero(); width])
    }

    pub fn unit(ring: &Arc<PolyRing>, width: usize, i: usize) -> Self {
        let mut e = Self::zero(ring, width);
        e.comps[i] = ring.one();
        e
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn width(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub(crate) fn component_mut(&mut self, i: usize) -> &mut Polynomial {
        &mut self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// Leading `(component, term)` under `ord`, `None` for zero.
    pub fn leading(&self, ord: &ModuleOrdering) -> Option<(usize, &Term)> {
        let mut best: Option<(usize, &Term)> = None;
        for (c, p) in self.comps.iter().enumerate() {
            let Some(t) = p.terms().first() else { continue };
            best = match best {
                None => Some((c, t)),
                Some((bc, bt)) => {
                    if ord.cmp((&t.mono, c), (&bt.mono, bc)) == Ordering::Greater {
                        Some((c, t))
                    } else {
                        Some((bc, bt))
                    }
                }
            };
            if ord.rule() == WithinGroup::PositionOverTerm {
                // groups are consecutive, so the first nonzero component wins
                break;
            }
        }
        best
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        ModuleElement::new(&self.ring, self.comps.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        ModuleElement::new(&self.ring, self.comps.iter().map(|p| p * f).collect())
    }

    /// `self - c * m * other`.
    pub fn sub_mul_term(&mut self, c: &Coeff, m: &Monomial, other: &ModuleElement) {
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            a.sub_mul_term(c, m, b);
        }
    }

    pub fn add(&self, other: &ModuleElement) -> Self {
        ModuleElement::new(
            &self.ring,
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ModuleElement) -> Self {
        ModuleElement::new(
            &self.ring,
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Scales so the leading coefficient is one.
    pub fn make_monic(&mut self, ord: &ModuleOrdering) {
        let Some((_, t)) = self.leading(ord) else { return };
        if t.coeff.is_one() {
            return;
        }
        let inv = t.coeff.inv().expect("nonzero leading coefficient");
        for p in &mut self.comps {
            *p = p.scale(&inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    #[test]
    fn left_block_dominates() {
        let r = PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrdering::DegRevLex).unwrap();
        let ord = ModuleOrdering::left_priority(MonomialOrdering::DegRevLex, 1, 2);
        let v = ModuleElement::new(
            &r,
            vec![r.parse("1").unwrap(), r.parse("x^5").unwrap(), r.zero()],
        );
        let (c, t) = v.leading(&ord).unwrap();
        assert_eq!(c, 0);
        assert!(t.mono.is_one());
        let w = ModuleElement::new(
            &r,
            vec![r.zero(), r.parse("x").unwrap(), r.parse("y^3").unwrap()],
        );
        // terms before positions inside the right block
        assert_eq!(w.leading(&ord).unwrap().0, 2);
    }

    #[test]
    fn term_over_position_within_group() {
        let r = PolyRing::new(Field::Rationals, &["x"], MonomialOrdering::Lex).unwrap();
        let ord = ModuleOrdering::with_blocks(MonomialOrdering::Lex, &[2], WithinGroup::TermOverPosition);
        let v = ModuleElement::new(&r, vec![r.parse("x").unwrap(), r.parse("x^2").unwrap()]);
        assert_eq!(v.leading(&ord).unwrap().0, 1);
        let ord = ModuleOrdering::pot(MonomialOrdering::Lex, 2);
        assert_eq!(v.leading(&ord).unwrap().0, 0);
    }
}
