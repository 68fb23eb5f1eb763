//! Multivariate division, Buchberger's algorithm and block elimination.


use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Poly, PolyRing, Term};
use crate::error::AlgebraError;

fn check_all(ring: &PolyRing, polys: &[Poly]) -> Result<(), AlgebraError> {
    polys.iter().try_for_each(|p| ring.check(p))
}

/// Full reduction of `f` by `basis`. At every step the first basis element (in the
/// given order) whose leading monomial divides the current leading term is used.
pub fn normal_form(ring: &PolyRing, f: &Poly, basis: &[Poly]) -> Result<Poly, AlgebraError> {
    ring.check(f)?;
    check_all(ring, basis)?;
    Ok(reduce(ring, f, basis, None))
}

/// Like [`normal_form`], also returning multipliers `q` with `f = sum q_k g_k + r`.
pub fn normal_form_with_quotients(
    ring: &PolyRing,
    f: &Poly,
    basis: &[Poly],
) -> Result<(Vec<Poly>, Poly), AlgebraError> {
    ring.check(f)?;
    check_all(ring, basis)?;
    let mut quotients: Vec<Poly> = basis.iter().map(|_| ring.zero()).collect();
    let r = reduce(ring, f, basis, Some(&mut quotients));
    Ok((quotients, r))
}

pub(crate) fn reduce(ring: &PolyRing, f: &Poly, basis: &[Poly], mut quotients: Option<&mut Vec<Poly>>) -> Poly {
    let field = ring.field();
    let leads: Vec<Option<&Term>> = basis.iter().map(|g| g.leading()).collect();
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    loop {
        let Some(lt) = p.leading().cloned() else { break };
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, l)| l.filter(|l| l.mono.divides(&lt.mono)).map(|l| (k, l)));
        match hit {
            Some((k, l)) => {
                let m = lt.mono.div(&l.mono);
                let c = field.div(&lt.coeff, &l.coeff);
                p = ring.sub(&p, &ring.mul_term(&basis[k], &m, &c));
                if let Some(q) = quotients.as_deref_mut() {
                    q[k] = ring.add(&q[k], &ring.term(m, c));
                }
            }
            None => {
                let mut terms = p.into_terms();
                rem.push(terms.remove(0));
                p = Poly::from_sorted_terms(terms);
            }
        }
    }
    Poly::from_sorted_terms(rem)
}

pub fn s_polynomial(ring: &PolyRing, f: &Poly, g: &Poly) -> Poly {
    let (Some(a), Some(b)) = (f.leading(), g.leading()) else {
        return ring.zero();
    };
    let field = ring.field();
    let l = a.mono.lcm(&b.mono);
    let fa = ring.mul_term(f, &l.div(&a.mono), &field.inv(&a.coeff));
    let gb = ring.mul_term(g, &l.div(&b.mono), &field.inv(&b.coeff));
    ring.sub(&fa, &gb)
}

/// The reduced Groebner basis of the ideal generated by `gens`, monic and sorted by
/// increasing leading monomial. The zero ideal yields an empty basis.
pub fn reduced_groebner(ring: &PolyRing, gens: &[Poly]) -> Result<Vec<Poly>, AlgebraError> {
    check_all(ring, gens)?;
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.monic(g)).collect();
    if basis.iter().any(|g| ring.as_constant(g).is_some()) {
        return Ok(alloc::vec![ring.one()]);
    }
    if basis.is_empty() {
        return Ok(basis);
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(pair) = select_pair(ring, &basis, &pending) {
        pending.remove(&pair);
        let (i, j) = pair;
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        if chain_criterion(&basis, &pending, i, j, &l) {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let h = reduce(ring, &s, &basis, None);
        if h.is_zero() {
            continue;
        }
        let h = ring.monic(&h);
        if ring.as_constant(&h).is_some() {
            return Ok(alloc::vec![ring.one()]);
        }
        let n = basis.len();
        for k in 0..n {
            pending.insert((k, n));
        }
        basis.push(h);
    }

    Ok(interreduce(ring, basis))
}

// Normal selection strategy: smallest lcm first (by degree, then term order).
fn select_pair(ring: &PolyRing, basis: &[Poly], pending: &BTreeSet<(usize, usize)>) -> Option<(usize, usize)> {
    let lcm_of = |&(i, j): &(usize, usize)| {
        basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
    };
    pending.iter().copied().min_by(|p, q| {
        let (a, b) = (lcm_of(p), lcm_of(q));
        a.degree()
            .cmp(&b.degree())
            .then_with(|| ring.cmp(&a, &b))
            .then_with(|| p.cmp(q))
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn chain_criterion(basis: &[Poly], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize, l: &Monomial) -> bool {
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().unwrap().divides(l)
            && !pending.contains(&ordered(i, k))
            && !pending.contains(&ordered(j, k))
    })
}

fn interreduce(ring: &PolyRing, basis: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            let lh = h.leading_monomial().unwrap();
            m != k && lh.divides(lg) && (lh != lg || m < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Poly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> =
            minimal.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, p)| p.clone()).collect();
        out.push(ring.monic(&reduce(ring, &minimal[k], &others, None)));
    }
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(ring: &PolyRing, basis: &[Poly]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !reduce(ring, &s, basis, None).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Generators of `(gens) ∩ k[remaining variables]`, expressed in `ring`.
pub fn eliminate(ring: &PolyRing, gens: &[Poly], drop: &[usize]) -> Result<Vec<Poly>, AlgebraError> {
    check_all(ring, gens)?;
    if drop.iter().any(|&i| i >= ring.nvars()) {
        return Err(AlgebraError::Ambient("eliminated variable out of range"));
    }
    if drop.is_empty() {
        return reduced_groebner(ring, gens);
    }
    let dropped: BTreeSet<usize> = drop.iter().copied().collect();
    // new position of every variable: dropped ones first
    let order: Vec<usize> = dropped
        .iter()
        .copied()
        .chain((0..ring.nvars()).filter(|i| !dropped.contains(i)))
        .collect();
    let mut forward = alloc::vec![0; ring.nvars()];
    for (new, &old) in order.iter().enumerate() {
        forward[old] = new;
    }
    let names: Vec<String> = order.iter().map(|&i| ring.names()[i].clone()).collect();
    let block = PolyRing::new(ring.field(), names, MonomialOrder::Block { split: dropped.len() });
    let moved: Vec<Poly> = gens.iter().map(|g| ring.map_vars(g, &block, &forward)).collect();
    let gb = reduced_groebner(&block, &moved)?;
    let kept = gb
        .iter()
        .filter(|g| (0..dropped.len()).all(|v| !g.involves(v)))
        .map(|g| block.map_vars(g, ring, &order))
        .map(|g| ring.monic(&g))
        .collect();
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::coeff::Field;
    use alloc::vec;

    fn ring(order: MonomialOrder) -> PolyRing {
        PolyRing::new(Field::Rationals, vec!["x".into(), "y".into()], order)
    }

    #[test]
    fn reducible_by_monomial() {
        let r = ring(MonomialOrder::DegRevLex);
        let (x, y) = (r.var(0), r.var(1));
        let x2y = r.mul(&r.mul(&x, &x), &y);
        assert!(normal_form(&r, &x2y, &[r.mul(&x, &y)]).unwrap().is_zero());
    }

    #[test]
    fn nothing_divides() {
        let r = ring(MonomialOrder::Lex);
        let f = r.add(&r.var(0), &r.one());
        assert_eq!(normal_form(&r, &f, &[r.var(1)]).unwrap(), f);
    }

    #[test]
    fn square_reduces_to_one() {
        // X^2 = (X + Y)(X - Y) + (Y^2 - 1) + 1
        let r = ring(MonomialOrder::Lex);
        let (x, y) = (r.var(0), r.var(1));
        let g = [r.sub(&x, &y), r.sub(&r.mul(&y, &y), &r.one())];
        assert_eq!(normal_form(&r, &r.mul(&x, &x), &g).unwrap(), r.one());
    }

    #[test]
    fn quotients_certify_membership() {
        let r = ring(MonomialOrder::DegRevLex);
        let (x, y) = (r.var(0), r.var(1));
        let g = [r.sub(&r.mul(&x, &x), &y), r.sub(&r.mul(&x, &y), &r.one())];
        let f = r.add(&r.pow(&x, 4), &r.mul(&y, &r.pow(&x, 3)));
        let (q, rem) = normal_form_with_quotients(&r, &f, &g).unwrap();
        let mut back = rem;
        for (qk, gk) in q.iter().zip(&g) {
            back = r.add(&back, &r.mul(qk, gk));
        }
        assert_eq!(back, f);
    }

    #[test]
    fn single_monomial_and_empty() {
        let r = ring(MonomialOrder::DegRevLex);
        let xy = r.mul(&r.var(0), &r.var(1));
        assert_eq!(reduced_groebner(&r, &[xy.clone()]).unwrap(), vec![xy]);
        assert!(reduced_groebner(&r, &[]).unwrap().is_empty());
        assert!(reduced_groebner(&r, &[r.zero()]).unwrap().is_empty());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let r = ring(MonomialOrder::Lex);
        let other = PolyRing::new(Field::Rationals, vec!["z".into()], MonomialOrder::Lex);
        let bad = other.var(0);
        assert!(matches!(normal_form(&r, &bad, &[r.var(0)]), Err(AlgebraError::Ambient(_))));
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = ring(MonomialOrder::Lex);
        let (x, y) = (r.var(0), r.var(1));
        let gb = reduced_groebner(&r, &[r.sub(&r.mul(&x, &y), &r.one()), x.clone()]).unwrap();
        assert_eq!(gb, vec![r.one()]);
    }
}
