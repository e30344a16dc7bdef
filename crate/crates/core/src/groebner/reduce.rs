use crate::arith::Coeff;
use crate::poly::{Monomial, Polynomial, Term};

use super::{ModuleElement, ModuleOrdering};

/// Result of dividing `v` by a list `G`: `v = sum(cofactors[i] * G[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub remainder: ModuleElement,
    pub cofactors: Vec<Polynomial>,
}

struct Lead {
    comp: usize,
    mono: Monomial,
    inv_coeff: Coeff,
}

fn leads(g: &[ModuleElement], ord: &ModuleOrdering) -> Vec<Option<Lead>> {
    g.iter()
        .map(|e| {
            e.leading(ord).map(|(comp, t)| Lead {
                comp,
                mono: t.mono.clone(),
                inv_coeff: t.coeff.inv().expect("nonzero leading coefficient"),
            })
        })
        .collect()
}

fn find_reducer<'a>(leads: &'a [Option<Lead>], comp: usize, mono: &Monomial) -> Option<(usize, &'a Lead)> {
    leads.iter().enumerate().find_map(|(i, l)| match l {
        Some(l) if l.comp == comp && l.mono.divides(mono) => Some((i, l)),
        _ => None,
    })
}

/// Full reduction of `v` by `g`. The first matching element of `g` is used at
/// every step, so results are deterministic.
pub fn normal_form_with_cofactors(
    v: &ModuleElement,
    g: &[ModuleElement],
    ord: &ModuleOrdering,
) -> NormalForm {
    reduce_inner(v, g, ord, None).expect("no abort requested")
}

/// Like [`normal_form_with_cofactors`], but gives up (returns `None`) as soon as
/// an irreducible term shows up in a component `< abort_below`.
pub(crate) fn reduce_inner(
    v: &ModuleElement,
    g: &[ModuleElement],
    ord: &ModuleOrdering,
    abort_below: Option<usize>,
) -> Option<NormalForm> {
    let ring = v.ring().clone();
    let leads = leads(g, ord);
    let mut p = v.clone();
    let mut rem = ModuleElement::zero(&ring, v.width());
    let mut quots: Vec<Vec<Term>> = vec![Vec::new(); g.len()];
    while let Some((comp, t)) = p.leading(ord) {
        let (mono, coeff) = (t.mono.clone(), t.coeff.clone());
        match find_reducer(&leads, comp, &mono) {
            Some((i, lead)) => {
                let q = &coeff * &lead.inv_coeff;
                let m = lead.mono.quotient_of(&mono).expect("divisible");
                p.sub_mul_term(&q, &m, &g[i]);
                quots[i].push(Term::new(q, m));
            }
            None => {
                if abort_below.is_some_and(|n| comp < n) {
                    return None;
                }
                let t = p.component_mut(comp).pop_leading().expect("leading term");
                rem.component_mut(comp).push_smallest(t);
            }
        }
    }
    let cofactors = quots
        .into_iter()
        .map(|ts| Polynomial::from_terms(&ring, ts))
        .collect();
    Some(NormalForm {
        remainder: rem,
        cofactors,
    })
}

/// Reduces only while the leading term is reducible.
pub(crate) fn top_reduce(v: ModuleElement, g: &[ModuleElement], leads_g: &[(usize, Monomial)], ord: &ModuleOrdering) -> ModuleElement {
    let mut p = v;
    loop {
        let Some((comp, t)) = p.leading(ord) else { return p };
        let hit = leads_g
            .iter()
            .position(|(c, m)| *c == comp && m.divides(&t.mono));
        let Some(i) = hit else { return p };
        // basis elements are monic
        let q = t.coeff.clone();
        let m = leads_g[i].1.quotient_of(&t.mono).expect("divisible");
        p.sub_mul_term(&q, &m, &g[i]);
    }
}
