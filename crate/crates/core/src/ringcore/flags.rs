use alloc::vec::Vec;

use super::ideal::IdealHandle;
use super::ring::{Backend, RingElement, RingHandle};
use crate::polyalg::{Monomial, Poly};
use crate::truth::{TriState, Witness};
use crate::util::{factorize, is_prime};

#[derive(Clone, Debug, PartialEq)]
pub struct Flags {
    pub reduced: TriState,
    pub domain: TriState,
}

/// Reducedness and domain flags, with user assertions filling in undecided values.
pub fn flags(ring: &RingHandle) -> Flags {
    let mut f = computed_flags(ring);
    let a = ring.assumptions();
    if f.reduced.is_unknown() {
        if let Some(v) = a.reduced {
            f.reduced = TriState::asserted(v);
        }
    }
    if f.domain.is_unknown() {
        if let Some(v) = a.domain {
            f.domain = TriState::asserted(v);
        }
    }
    // a domain is reduced
    if f.reduced.is_unknown() && f.domain.is_yes() {
        f.reduced = TriState { reason: "implied by domain".into(), ..f.domain.clone() };
    }
    f
}

pub(crate) fn computed_flags(ring: &RingHandle) -> Flags {
    match ring.backend() {
        Backend::ZMod(n) => zmod_flags(ring, *n),
        Backend::Quotient(q) => {
            let gb = &q.gb;
            if gb.iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
                let why = Witness::Certificate("polynomial ring over a field".into());
                return Flags { reduced: TriState::yes(why.clone()), domain: TriState::yes(why) };
            }
            if gb.iter().all(Poly::is_monomial) {
                return monomial_flags(ring, gb);
            }
            let domain = IdealHandle::zero(ring).is_prime();
            let domain = if domain.provenance == crate::truth::Provenance::Asserted {
                TriState::unknown("not decided for this defining ideal")
            } else {
                domain
            };
            let reduced = if domain.is_yes() {
                domain.clone()
            } else {
                TriState::unknown("reducedness of a general quotient is not decided")
            };
            Flags { reduced, domain }
        }
    }
}

fn zmod_flags(ring: &RingHandle, n: u64) -> Flags {
    let factors = factorize(n);
    let reduced = if factors.iter().all(|&(_, e)| e == 1) {
        TriState::yes(Witness::Certificate(alloc::format!("{n} is squarefree")))
    } else {
        // the smallest nonzero nilpotent: prod p^ceil(e/2)
        let w: u64 = factors.iter().map(|&(p, e)| p.pow(e.div_ceil(2))).product();
        TriState::no(Witness::Element(ring.from_int(w as i64)))
    };
    let domain = if is_prime(n) {
        TriState::yes(Witness::Certificate(alloc::format!("{n} is prime")))
    } else {
        let p = factors[0].0;
        TriState::no(Witness::Pair(ring.from_int(p as i64), ring.from_int((n / p) as i64)))
    };
    Flags { reduced, domain }
}

fn monomial_element(ring: &RingHandle, m: Monomial) -> RingElement {
    let poly = ring.poly_ring().unwrap();
    ring.from_poly(&poly.term(m, poly.field().one())).unwrap()
}

fn monomial_flags(ring: &RingHandle, gb: &[Poly]) -> Flags {
    let leads: Vec<&Monomial> = gb.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let reduced = match leads.iter().find(|m| m.0.iter().any(|&e| e > 1)) {
        Some(m) => {
            let rad = Monomial(m.0.iter().map(|&e| e.min(1)).collect());
            TriState::no(Witness::Element(monomial_element(ring, rad)))
        }
        None => TriState::yes(Witness::Certificate("squarefree monomial relations".into())),
    };
    let domain = match leads.iter().find(|m| m.as_variable().is_none()) {
        Some(m) => {
            let v = m.0.iter().position(|&e| e > 0).unwrap();
            let x = Monomial::var(m.nvars(), v);
            let rest = m.div(&x);
            TriState::no(Witness::Pair(monomial_element(ring, x), monomial_element(ring, rest)))
        }
        None => TriState::yes(Witness::Certificate("relations are variables".into())),
    };
    Flags { reduced, domain }
}

/// Minimal primes of `R` when computable: prime divisors of `n`, the zero ideal of a
/// domain with linear relations, or minimal vertex covers for monomial relations.
pub fn minimal_primes_base(ring: &RingHandle) -> Option<Vec<IdealHandle>> {
    match ring.backend() {
        Backend::ZMod(n) => {
            Some(factorize(*n).iter().map(|&(p, _)| IdealHandle::principal(&ring.from_int(p as i64))).collect())
        }
        Backend::Quotient(q) => {
            if q.gb.iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
                return Some(alloc::vec![IdealHandle::zero(ring)]);
            }
            if !q.gb.iter().all(Poly::is_monomial) {
                return None;
            }
            let n = q.poly.nvars();
            if n > 20 {
                return None;
            }
            let supports: Vec<u32> = q
                .gb
                .iter()
                .map(|g| {
                    let m = g.leading_monomial().unwrap();
                    (0..n).filter(|&v| m.0[v] > 0).fold(0u32, |acc, v| acc | (1 << v))
                })
                .collect();
            let covers: Vec<u32> = (0u32..(1 << n)).filter(|s| supports.iter().all(|g| g & s != 0)).collect();
            let minimal = covers.iter().filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t));
            let mut out = Vec::new();
            for &s in minimal {
                let gens: Vec<RingElement> =
                    (0..n).filter(|&v| s & (1 << v) != 0).map(|v| ring.from_poly(&q.poly.var(v)).unwrap()).collect();
                out.push(IdealHandle::new(ring, &gens).unwrap());
            }
            Some(out)
        }
    }
}

/// Whether `x` is nilpotent.
pub fn is_nilpotent(x: &RingElement) -> bool {
    IdealHandle::zero(x.ring()).radical_contains(x).expect("same ring")
}
