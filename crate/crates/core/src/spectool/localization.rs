use alloc::string::String;
use alloc::vec::Vec;

use super::fiber::{fiber_over_prime, FiberResult};
use crate::error::AlgebraError;
use crate::polyalg::Monomial;
use crate::reesfam::{RabRing, RootData};
use crate::ringcore::{IdealHandle, RingElement};

#[derive(Clone, Debug, PartialEq)]
pub enum LocalizationCase {
    /// Irreducible residual quadratic: the localization is `R_𝔭(I_𝔭)_{a,b}`.
    Case1,
    /// `𝔭₁ = 𝔭₂`: the localization is `R_𝔭(I_𝔭)_{a,b}`.
    Case2a,
    /// The localization at each `𝔭ᵢ` is `R_𝔭`, certified by `λ` and a root choice with `pλI = 0`.
    Case2b { lambda: RingElement, p_corr_ok: bool, roots: RootData },
    /// `λ` exists but no examined root choice makes `pλI` vanish.
    OpenQuestion { lambda: RingElement },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalizationReport {
    pub case: LocalizationCase,
    pub notes: String,
}

/// Limits for the `λ` / root-representative search over polynomial quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest degree of the monomial multipliers tried.
    pub degree_cap: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { degree_cap: 2 }
    }
}

/// Classifies the localization of `R(I)_{a,b}` at the primes over `prime`.
pub fn localization_class(
    rr: &RabRing,
    prime: &IdealHandle,
    roots: Option<&RootData>,
    bounds: SearchBounds,
) -> Result<LocalizationReport, AlgebraError> {
    let fiber = fiber_over_prime(rr, prime, roots)?;
    let rd = match &fiber {
        FiberResult::Irreducible(_) => {
            return Ok(LocalizationReport { case: LocalizationCase::Case1, notes: "irreducible residual quadratic".into() })
        }
        FiberResult::Reducible { merged: true, .. } => {
            return Ok(LocalizationReport { case: LocalizationCase::Case2a, notes: "(alpha - beta)I ⊆ p".into() })
        }
        FiberResult::Reducible { p1, .. } => p1.roots.clone().unwrap(),
    };
    let search = admissible_search(rr, prime, &rd, bounds);
    Ok(match search {
        Search::Found { lambda, roots, examined } => LocalizationReport {
            notes: alloc::format!("p * lambda * I = 0 after examining {examined} choices"),
            case: LocalizationCase::Case2b { lambda, p_corr_ok: true, roots },
        },
        Search::Exhausted { lambda, examined, complete } => LocalizationReport {
            notes: alloc::format!(
                "{} search over {examined} choices found no root choice with p * lambda * I = 0",
                if complete { "exhaustive" } else { "bounded" }
            ),
            case: LocalizationCase::OpenQuestion { lambda },
        },
    })
}

pub(crate) enum Search {
    Found { lambda: RingElement, roots: RootData, examined: usize },
    /// `complete` when every admissible choice was examined.
    Exhausted { lambda: RingElement, examined: usize, complete: bool },
}

/// Whether `p λ I = 0`.
fn kills(p: &RingElement, lambda: &RingElement, ideal: &IdealHandle) -> bool {
    let pl = p * lambda;
    ideal.gens().iter().all(|g| (&pl * g).is_zero())
}

/// Looks for `λ ∈ I` with `(α-β)λ ∉ 𝔭` and roots `(α, β, γ)` with `γa = -(α+β)`,
/// `γ²b = αβ + p`, `p ∈ 𝔭`, `pλI = 0`.
///
/// Over `Z/n` every admissible choice is examined: `γ ∉ 𝔭`, `α ≡ γρ (mod 𝔭)` for either
/// residual root `ρ`, and every `λ ∈ I`. Over polynomial quotients `γ = 1` and the
/// search runs over `α + q` with `q` a monomial multiple of a generator of `𝔭` and `λ` a
/// monomial multiple of a generator of `I`, up to the degree cap.
pub(crate) fn admissible_search(rr: &RabRing, prime: &IdealHandle, rd: &RootData, bounds: SearchBounds) -> Search {
    let ideal = rr.ideal();
    let base = rr.base();
    let diff = &rd.alpha - &rd.beta;
    let lambdas: Vec<RingElement> = match base.modulus() {
        Some(n) => {
            let d = ideal.divisor().unwrap();
            (1..n / d).map(|k| base.from_int((k * d) as i64)).collect()
        }
        None => monomial_multiples(rr, ideal.gens(), bounds.degree_cap),
    };
    let lambdas: Vec<RingElement> = lambdas.into_iter().filter(|l| !prime.contains(&(&diff * l))).collect();
    let first = lambdas.first().cloned().expect("an unmerged fiber has a separating generator");

    // the global roots give p = 0 outright
    if rd.is_global() || rd.p_corr.is_zero() {
        return Search::Found { lambda: first, roots: rd.clone(), examined: 1 };
    }

    let mut examined = 0;
    let try_roots = |roots: RootData, examined: &mut usize| -> Option<Search> {
        for l in &lambdas {
            *examined += 1;
            if kills(&roots.p_corr, l, ideal) {
                return Some(Search::Found { lambda: l.clone(), roots, examined: *examined });
            }
        }
        None
    };

    match base.modulus() {
        Some(n) => {
            let p = prime.divisor().unwrap();
            let a = rr.a();
            let gamma_inv = crate::util::mod_inverse(rd.gamma.as_int().unwrap() % p, p).expect("gamma is a unit mod p");
            for root in [&rd.alpha, &rd.beta] {
                let rho = (root.as_int().unwrap() % p) * gamma_inv % p;
                for gamma in (1..n).filter(|g| g % p != 0) {
                    let gamma = base.from_int(gamma as i64);
                    let target = (gamma.as_int().unwrap() * rho) % p;
                    for lift in (0..n / p).map(|k| target + k * p) {
                        let alpha = base.from_int(lift as i64);
                        let beta = &(-&(&gamma * a)) - &alpha;
                        let roots = RootData::relative(rr, alpha, beta, gamma.clone(), prime.clone());
                        debug_assert!(prime.contains(&roots.p_corr));
                        if let Some(found) = try_roots(roots, &mut examined) {
                            return found;
                        }
                    }
                }
            }
            Search::Exhausted { lambda: first, examined, complete: true }
        }
        None => {
            let mut shifts = alloc::vec![base.zero()];
            shifts.extend(monomial_multiples(rr, prime.gens(), bounds.degree_cap));
            for q in &shifts {
                for roots in [rd.shifted(rr, q), rd.swapped().shifted(rr, q)] {
                    if let Some(found) = try_roots(roots, &mut examined) {
                        return found;
                    }
                }
            }
            Search::Exhausted { lambda: first, examined, complete: false }
        }
    }
}

/// `g·m` for every generator `g` and monomial `m` of degree at most `cap`.
fn monomial_multiples(rr: &RabRing, gens: &[RingElement], cap: u32) -> Vec<RingElement> {
    let base = rr.base();
    let poly = base.poly_ring().unwrap();
    let n = poly.nvars();
    let mut monomials = alloc::vec![Monomial::one(n)];
    let mut layer = monomials.clone();
    for _ in 0..cap {
        let mut next = Vec::new();
        for m in &layer {
            for v in 0..n {
                let bigger = m.mul(&Monomial::var(n, v));
                if !next.contains(&bigger) {
                    next.push(bigger);
                }
            }
        }
        monomials.extend(next.iter().cloned());
        layer = next;
    }
    let mut out: Vec<RingElement> = Vec::new();
    for g in gens {
        for m in &monomials {
            let e = g * &base.from_poly(&poly.term(m.clone(), poly.field().one())).unwrap();
            if !e.is_zero() && !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}
