//! Exact square roots of polynomials.

use alloc::vec::Vec;

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Poly, PolyRing};

/// A polynomial `s` with `s^2 = f`, if one exists in `ring`.
///
/// Over a field whose square roots are decidable this is exact: failure means `f` is
/// not a square in the polynomial ring.
pub fn poly_sqrt(ring: &PolyRing, f: &Poly) -> Option<Poly> {
    if f.is_zero() {
        return Some(ring.zero());
    }
    let field = ring.field();
    let graded = ring.with_order(MonomialOrder::DegRevLex);
    let f = graded.resort(f);

    let half = |m: &Monomial| -> Option<Monomial> {
        m.0.iter().map(|&e| (e % 2 == 0).then_some(e / 2)).collect::<Option<Vec<_>>>().map(Monomial)
    };

    if field.characteristic() == 2 {
        // Frobenius is additive: f is a square iff every term is
        let mut terms = Vec::new();
        for t in f.terms() {
            terms.push((half(&t.mono)?, field.sqrt(&t.coeff)?));
        }
        return Some(ring.from_terms(terms));
    }

    let lead = f.leading()?;
    let s0 = graded.term(half(&lead.mono)?, field.sqrt(&lead.coeff)?);
    let s0_lead = s0.leading()?.clone();
    let two_lc = field.add(&s0_lead.coeff, &s0_lead.coeff);
    let min_deg = f.terms().iter().map(|t| t.mono.degree()).min()?;
    if min_deg % 2 != 0 {
        return None;
    }

    let mut s = s0;
    loop {
        let r = graded.sub(&f, &graded.mul(&s, &s));
        let Some(lt) = r.leading() else {
            return Some(ring.resort(&s));
        };
        if !s0_lead.mono.divides(&lt.mono) {
            return None;
        }
        let m = lt.mono.div(&s0_lead.mono);
        if m.degree() < min_deg / 2 {
            return None;
        }
        let c = field.div(&lt.coeff, &two_lc);
        s = graded.add(&s, &graded.term(m, c));
    }
}
