use alloc::string::String;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::polyalg::poly_sqrt;
use crate::reesfam::{RabRing, RootData};
use crate::ringcore::{IdealHandle, RingElement};
use crate::util::sqrt_mod_prime;

/// How `t² + at + b` behaves over the fraction field of `R/𝔭`.
#[derive(Clone, Debug, PartialEq)]
pub enum Factorization {
    Irreducible(String),
    Roots(RootData),
    Unknown(String),
}

/// The residue ring `R/𝔭`, as far as the quadratic test is concerned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residue {
    /// A finite field with `q = p^m` elements.
    FiniteField { p: u64, q: u64 },
    /// A polynomial ring over the coefficient field (all relations linear).
    Polynomial,
    Other,
}

/// Largest residue field handled by the finite-field path.
pub const FINITE_RESIDUE_CAP: u64 = 4096;

pub fn residue_kind(prime: &IdealHandle) -> Residue {
    if let Some(d) = prime.divisor() {
        return Residue::FiniteField { p: d, q: d };
    }
    let gb = prime.lifted_basis().unwrap();
    let ring = prime.ring().poly_ring().unwrap();
    let p = ring.field().characteristic();
    if p != 0 {
        if let Some(q) = prime.residue_size(FINITE_RESIDUE_CAP) {
            return Residue::FiniteField { p, q };
        }
    }
    if gb.iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
        Residue::Polynomial
    } else {
        Residue::Other
    }
}

pub(crate) fn check_prime(prime: &IdealHandle) -> Result<(), AlgebraError> {
    if prime.is_whole() {
        return Err(AlgebraError::BadPrime("the unit ideal is not prime".into()));
    }
    let verdict = prime.is_prime();
    if verdict.is_no() {
        let w = verdict.witness.map(|w| alloc::format!("{w}")).unwrap_or_default();
        return Err(AlgebraError::BadPrime(alloc::format!("{prime} is not prime: {w}")));
    }
    Ok(())
}

/// Decides whether `t² + at + b` factors modulo `prime` and returns roots with `γ = 1`.
pub fn factor_quadratic_mod_prime(rr: &RabRing, prime: &IdealHandle) -> Result<Factorization, AlgebraError> {
    rr.base().ensure_same(prime.ring())?;
    check_prime(prime)?;
    if let Some(roots) = rr.roots().filter(|r| r.is_global()) {
        return Ok(Factorization::Roots(roots.clone()));
    }
    match residue_kind(prime) {
        Residue::FiniteField { p, q } if prime.divisor().is_some() => {
            debug_assert_eq!(p, q);
            Ok(zmod_roots(rr, prime, p))
        }
        Residue::FiniteField { p, q } => finite_field_roots(rr, prime, p, q),
        kind => Ok(syntactic_roots(rr, prime, kind == Residue::Polynomial)),
    }
}

fn roots_from(rr: &RabRing, prime: &IdealHandle, rho: RingElement) -> Factorization {
    let base = rr.base();
    let beta = &(-rr.a()) - &rho;
    let roots = RootData::relative(rr, rho, beta, base.one(), prime.clone());
    debug_assert!(prime.contains(&roots.p_corr));
    Factorization::Roots(roots)
}

fn zmod_roots(rr: &RabRing, prime: &IdealHandle, p: u64) -> Factorization {
    let a = rr.a().as_int().unwrap() % p;
    let b = rr.b().as_int().unwrap() % p;
    let rho = if p == 2 {
        match (a, b) {
            // t² + b = (t + b)²
            (0, _) => Some(b),
            // t² + t + b: trace of b over F_2 is b itself
            (_, 0) => Some(0),
            _ => None,
        }
    } else {
        let disc = (a * a + 4 * (p - b)) % p;
        let inv2 = p.div_ceil(2);
        sqrt_mod_prime(disc, p).map(|s| ((p - a + s) % p) * inv2 % p)
    };
    match rho {
        Some(rho) => roots_from(rr, prime, base_int(rr, rho)),
        None => Factorization::Irreducible(alloc::format!("no root modulo {p}")),
    }
}

fn base_int(rr: &RabRing, v: u64) -> RingElement {
    rr.base().from_int(v as i64)
}

fn finite_field_roots(rr: &RabRing, prime: &IdealHandle, p: u64, q: u64) -> Result<Factorization, AlgebraError> {
    let base = rr.base();
    let (a, b) = (prime.reduce(rr.a()), prime.reduce(rr.b()));
    let pow = |x: &RingElement, e: u64| prime.reduce(&x.pow(e));
    let reducible = if p == 2 {
        if a.is_zero() {
            true
        } else {
            // Artin–Schreier: t² + at + b factors iff Tr(b / a²) = 0
            let a_inv = pow(&a, q - 2);
            let mut term = prime.reduce(&(&b * &(&a_inv * &a_inv)));
            let mut trace = base.zero();
            for _ in 0..q.trailing_zeros() {
                trace = prime.reduce(&(&trace + &term));
                term = pow(&term, 2);
            }
            trace.is_zero()
        }
    } else {
        let disc = prime.reduce(&(&(&a * &a) - &(&base.from_int(4) * &b)));
        disc.is_zero() || pow(&disc, (q - 1) / 2).is_one()
    };
    if !reducible {
        return Ok(Factorization::Irreducible(alloc::format!("no root in the residue field with {q} elements")));
    }
    let reps: Vec<RingElement> = prime.residue_representatives(q).expect("finite residue");
    let rho = reps
        .into_iter()
        .find(|r| prime.contains(&(&(&(r * r) + &(&a * r)) + &b)))
        .ok_or_else(|| AlgebraError::OracleMismatch("residue test and root search disagree".into()))?;
    Ok(roots_from(rr, prime, rho))
}

fn syntactic_roots(rr: &RabRing, prime: &IdealHandle, polynomial_residue: bool) -> Factorization {
    let base = rr.base();
    let Some(poly) = base.poly_ring() else {
        return Factorization::Unknown("residue ring not recognised".into());
    };
    let field = poly.field();
    if field.characteristic() == 2 {
        return Factorization::Unknown("characteristic 2 over an infinite residue ring".into());
    }
    let (a, b) = (rr.a(), rr.b());
    let disc = prime.reduce(&(&(a * a) - &(&base.from_int(4) * b)));
    match poly_sqrt(poly, &base.lift(&disc)) {
        Some(s) => {
            let s = base.from_poly(&s).expect("same ambient");
            let half = base.from_coeff(field.inv(&field.from_i64(2))).expect("polynomial backend");
            let alpha = &half * &(&(-a) + &s);
            roots_from(rr, prime, alpha)
        }
        None if polynomial_residue => {
            Factorization::Irreducible(alloc::format!("discriminant {disc} is not a square in the residue polynomial ring"))
        }
        None => Factorization::Unknown(alloc::format!(
            "no syntactic square root of the discriminant {disc}; supply roots"
        )),
    }
}
