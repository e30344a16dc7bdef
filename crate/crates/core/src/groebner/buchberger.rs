use std::cmp::Ordering;
use std::collections::HashSet;

use crate::poly::Monomial;

use super::reduce::{normal_form_with_cofactors, top_reduce};
use super::{ModuleElement, ModuleOrdering};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Reduced, head-monic Gröbner basis of the submodule generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm degree first).
/// Buchberger's chain criterion is always applied; the coprime criterion only
/// for rank-one modules, where it is valid.
pub fn buchberger(gens: &[ModuleElement], ord: &ModuleOrdering) -> Vec<ModuleElement> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    debug_assert_eq!(first.ring().ordering(), ord.base());
    debug_assert!(gens.iter().all(|g| g.width() == ord.rank()));

    let mut basis: Vec<ModuleElement> = Vec::new();
    let mut leads: Vec<(usize, Monomial)> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let ideal_case = ord.rank() == 1;

    let add = |mut e: ModuleElement,
                   basis: &mut Vec<ModuleElement>,
                   leads: &mut Vec<(usize, Monomial)>,
                   pending: &mut Vec<Pair>,
                   pending_set: &mut HashSet<(usize, usize)>| {
        e.make_monic(ord);
        let (c, t) = e.leading(ord).expect("nonzero");
        let (c, m) = (c, t.mono.clone());
        let k = basis.len();
        for (i, (ci, mi)) in leads.iter().enumerate() {
            if *ci != c {
                continue;
            }
            if ideal_case && mi.is_coprime(&m) {
                continue;
            }
            let lcm = mi.lcm(&m);
            let degree = lcm.degree();
            pending.push(Pair { i, j: k, lcm, degree });
            pending_set.insert((i, k));
        }
        basis.push(e);
        leads.push((c, m));
    };

    for g in gens {
        if !g.is_zero() {
            add(g.clone(), &mut basis, &mut leads, &mut pending, &mut pending_set);
        }
    }

    while !pending.is_empty() {
        let idx = (0..pending.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pending[a], &pending[b]);
                p.degree
                    .cmp(&q.degree)
                    .then_with(|| p.j.cmp(&q.j))
                    .then_with(|| p.i.cmp(&q.i))
            })
            .expect("nonempty");
        let pair = pending.swap_remove(idx);
        pending_set.remove(&(pair.i, pair.j));

        if chain_criterion(&pair, &leads, &pending_set) {
            continue;
        }

        let s = s_vector(&basis[pair.i], &basis[pair.j], &leads, &pair);
        let r = top_reduce(s, &basis, &leads, ord);
        if !r.is_zero() {
            add(r, &mut basis, &mut leads, &mut pending, &mut pending_set);
        }
    }

    finish(basis, leads, ord)
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j { (i, j) } else { (j, i) }
}

fn chain_criterion(
    pair: &Pair,
    leads: &[(usize, Monomial)],
    pending: &HashSet<(usize, usize)>,
) -> bool {
    let comp = leads[pair.i].0;
    leads.iter().enumerate().any(|(k, (ck, mk))| {
        k != pair.i
            && k != pair.j
            && *ck == comp
            && mk.divides(&pair.lcm)
            && !pending.contains(&key(pair.i, k))
            && !pending.contains(&key(pair.j, k))
    })
}

fn s_vector(
    a: &ModuleElement,
    b: &ModuleElement,
    leads: &[(usize, Monomial)],
    pair: &Pair,
) -> ModuleElement {
    let ring = a.ring();
    let one = ring.field().one();
    let ma = leads[pair.i].1.quotient_of(&pair.lcm).expect("lcm");
    let mb = leads[pair.j].1.quotient_of(&pair.lcm).expect("lcm");
    let mut s = ModuleElement::zero(ring, a.width());
    s.sub_mul_term(&-&one, &ma, a);
    s.sub_mul_term(&one, &mb, b);
    s
}

/// Drops redundant elements, tail-reduces, and sorts descending by leading term.
fn finish(
    basis: Vec<ModuleElement>,
    leads: Vec<(usize, Monomial)>,
    ord: &ModuleOrdering,
) -> Vec<ModuleElement> {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] || leads[i].0 != leads[j].0 {
                continue;
            }
            if leads[j].1.divides(&leads[i].1) && (leads[j].1 != leads[i].1 || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<ModuleElement> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b))
        .collect();
    for i in 0..minimal.len() {
        let others: Vec<ModuleElement> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e.clone())
            .collect();
        // the leading term is irreducible by minimality; reduce the rest
        let mut r = tail_reduce(minimal[i].clone(), &others, ord);
        r.make_monic(ord);
        minimal[i] = r;
    }
    minimal.sort_by(|a, b| {
        let (ca, ta) = a.leading(ord).expect("nonzero");
        let (cb, tb) = b.leading(ord).expect("nonzero");
        ord.cmp((&tb.mono, cb), (&ta.mono, ca))
    });
    minimal
}

fn tail_reduce(v: ModuleElement, others: &[ModuleElement], ord: &ModuleOrdering) -> ModuleElement {
    let nf = normal_form_with_cofactors(&v, others, ord);
    debug_assert!({
        let (c1, t1) = v.leading(ord).unwrap();
        let (c2, t2) = nf.remainder.leading(ord).unwrap();
        c1 == c2 && ord.cmp((&t1.mono, c1), (&t2.mono, c2)) == Ordering::Equal
    });
    nf.remainder
}
