use core::fmt;

use alloc::vec::Vec;

use super::quadratic::{check_prime, factor_quadratic_mod_prime, Factorization};
use crate::error::AlgebraError;
use crate::reesfam::{RabElement, RabRing, RootData};
use crate::ringcore::{minimal_primes_base, IdealHandle, RingElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeKind {
    /// `{ p + it : p ∈ 𝔭, i ∈ I ∩ 𝔭 }`
    IrreducibleFiber,
    /// `{ r + it : γr + αi ∈ 𝔭 }`
    Root1,
    /// `{ r + it : γr + βi ∈ 𝔭 }`
    Root2,
}

/// A prime of `R(I)_{a,b}` given by its membership condition.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeDescriptor {
    pub kind: PrimeKind,
    pub base_prime: IdealHandle,
    pub roots: Option<RootData>,
}

impl PrimeDescriptor {
    pub fn contains_pair(&self, r: &RingElement, i: &RingElement) -> bool {
        let p = &self.base_prime;
        match (self.kind, &self.roots) {
            (PrimeKind::IrreducibleFiber, _) => p.contains(r) && p.contains(i),
            (PrimeKind::Root1, Some(rd)) => p.contains(&(&(&rd.gamma * r) + &(&rd.alpha * i))),
            (PrimeKind::Root2, Some(rd)) => p.contains(&(&(&rd.gamma * r) + &(&rd.beta * i))),
            _ => unreachable!("root primes carry roots"),
        }
    }

    pub fn contains(&self, x: &RabElement) -> bool {
        self.contains_pair(x.r(), x.i())
    }
}

impl fmt::Display for PrimeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.base_prime;
        match (self.kind, &self.roots) {
            (PrimeKind::IrreducibleFiber, _) => write!(f, "{{r + it : r in {p}, i in I ∩ {p}}}"),
            (PrimeKind::Root1, Some(rd)) => write!(f, "{{r + it : ({})r + ({})i in {p}}}", rd.gamma, rd.alpha),
            (PrimeKind::Root2, Some(rd)) => write!(f, "{{r + it : ({})r + ({})i in {p}}}", rd.gamma, rd.beta),
            _ => unreachable!(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FiberResult {
    Irreducible(PrimeDescriptor),
    Reducible {
        p1: PrimeDescriptor,
        p2: PrimeDescriptor,
        merged: bool,
        /// A generator `g` of `I` with `(α-β)g ∉ 𝔭` when not merged.
        witness: Option<RingElement>,
    },
}

impl FiberResult {
    /// The distinct primes of the fiber.
    pub fn primes(&self) -> Vec<PrimeDescriptor> {
        match self {
            FiberResult::Irreducible(q) => alloc::vec![q.clone()],
            FiberResult::Reducible { p1, merged: true, .. } => alloc::vec![p1.clone()],
            FiberResult::Reducible { p1, p2, .. } => alloc::vec![p1.clone(), p2.clone()],
        }
    }

    /// `-αg + γgt`, which lies in `𝔭₁` but not in `𝔭₂` when the fiber is not merged.
    pub fn separating_element(&self, rr: &RabRing) -> Option<RabElement> {
        match self {
            FiberResult::Reducible { p1, witness: Some(g), .. } => {
                let rd = p1.roots.as_ref().unwrap();
                rr.element(&-&(&rd.alpha * g), &(&rd.gamma * g)).ok()
            }
            _ => None,
        }
    }
}

/// Roots to use over `prime`: supplied ones (verified), roots attached in `R[t]`, or
/// the residue-field factorization.
pub(crate) fn resolve_roots(
    rr: &RabRing,
    prime: &IdealHandle,
    roots: Option<&RootData>,
) -> Result<Factorization, AlgebraError> {
    rr.base().ensure_same(prime.ring())?;
    check_prime(prime)?;
    match roots {
        Some(rd) => {
            if let Some(m) = &rd.modulus {
                if !m.equals(prime)? {
                    return Err(AlgebraError::BadPrime(alloc::format!("roots were given modulo {m}, not {prime}")));
                }
            }
            rr.verify_factorization(rd)?;
            Ok(Factorization::Roots(rd.clone()))
        }
        None => factor_quadratic_mod_prime(rr, prime),
    }
}

/// The primes of `R(I)_{a,b}` lying over `prime`.
pub fn fiber_over_prime(rr: &RabRing, prime: &IdealHandle, roots: Option<&RootData>) -> Result<FiberResult, AlgebraError> {
    match resolve_roots(rr, prime, roots)? {
        Factorization::Irreducible(_) => Ok(FiberResult::Irreducible(PrimeDescriptor {
            kind: PrimeKind::IrreducibleFiber,
            base_prime: prime.clone(),
            roots: None,
        })),
        Factorization::Roots(rd) => Ok(reducible_fiber(rr, prime, rd)),
        Factorization::Unknown(_) => Err(AlgebraError::NeedRoots),
    }
}

fn reducible_fiber(rr: &RabRing, prime: &IdealHandle, rd: RootData) -> FiberResult {
    let diff = &rd.alpha - &rd.beta;
    let witness = rr.ideal().gens().iter().find(|g| !prime.contains(&(&diff * *g))).cloned();
    let descriptor = |kind| PrimeDescriptor { kind, base_prime: prime.clone(), roots: Some(rd.clone()) };
    FiberResult::Reducible {
        p1: descriptor(PrimeKind::Root1),
        p2: descriptor(PrimeKind::Root2),
        merged: witness.is_none(),
        witness,
    }
}

/// Minimal primes of `R(I)_{a,b}`: the fibers over the minimal primes of `R`.
/// `base_primes` overrides the computed minimal primes of `R`. `None` when they are unknown.
pub fn minimal_primes_rab(
    rr: &RabRing,
    base_primes: Option<&[IdealHandle]>,
) -> Result<Option<Vec<PrimeDescriptor>>, AlgebraError> {
    let primes = match base_primes {
        Some(ps) => ps.to_vec(),
        None => match minimal_primes_base(rr.base()) {
            Some(ps) => ps,
            None => return Ok(None),
        },
    };
    let mut out = Vec::new();
    for p in &primes {
        out.extend(fiber_over_prime(rr, p, None)?.primes());
    }
    Ok(Some(out))
}
