use alloc::string::String;
use alloc::vec::Vec;

use super::quadratic::{factor_quadratic_mod_prime, Factorization};
use crate::error::AlgebraError;
use crate::reesfam::{duplication, idealization, make_rab, RabElement, RabRing, RootData};
use crate::ringcore::{flags, minimal_primes_base, IdealHandle, RingElement};
use crate::truth::{Provenance, TriState, Witness};

fn lift_witness(rr: &RabRing, w: Option<Witness>) -> Option<Witness> {
    match w {
        Some(Witness::Element(x)) => Some(Witness::RabElement(rr.from_base(&x))),
        Some(Witness::Pair(x, y)) => Some(Witness::RabPair(rr.from_base(&x), rr.from_base(&y))),
        other => other,
    }
}

/// A base-ring verdict that transfers to `R(I)_{a,b}` through the inclusion `R ⊆ R(I)_{a,b}`.
fn inherited_no(rr: &RabRing, t: &TriState, what: &str) -> TriState {
    TriState {
        witness: lift_witness(rr, t.witness.clone()),
        reason: alloc::format!("R is not {what}"),
        ..t.clone()
    }
}

fn global_roots(rr: &RabRing) -> Option<&RootData> {
    rr.roots().filter(|r| r.is_global())
}

/// Whether `R(I)_{a,b}` is a domain: iff `R` is and `t² + at + b` is irreducible over `Q(R)`.
pub fn is_domain_rab(rr: &RabRing) -> Result<TriState, AlgebraError> {
    let base_flags = flags(rr.base());
    let domain = &base_flags.domain;
    if domain.is_no() {
        return Ok(inherited_no(rr, domain, "a domain"));
    }
    if domain.is_unknown() {
        return Ok(TriState::unknown("whether R is a domain is not decided"));
    }
    let zero = IdealHandle::zero(rr.base());
    let fact = match global_roots(rr) {
        Some(rd) => Factorization::Roots(rd.clone()),
        None => factor_quadratic_mod_prime(rr, &zero)?,
    };
    let mut verdict = match fact {
        Factorization::Irreducible(why) => {
            TriState::yes(Witness::Certificate(alloc::format!("t^2 + at + b is irreducible over Q(R): {why}")))
        }
        Factorization::Roots(rd) => {
            // (-αg + γgt)(-βg + γgt) = -p g² with p ∈ (0)
            let g = &rr.ideal().gens()[0];
            let x = rr.element(&-&(&rd.alpha * g), &(&rd.gamma * g))?;
            let y = rr.element(&-&(&rd.beta * g), &(&rd.gamma * g))?;
            debug_assert!((&x * &y).is_zero());
            TriState::no(Witness::RabPair(x, y)).with_reason("t^2 + at + b has roots over Q(R)")
        }
        Factorization::Unknown(why) => TriState::unknown(why),
    };
    if domain.provenance == Provenance::Asserted && !verdict.is_unknown() {
        verdict.provenance = Provenance::Asserted;
    }
    Ok(verdict)
}

/// Whether `R(I)_{a,b}` is reduced.
///
/// With roots in `R[t]`: iff `R` is reduced and `I ∩ Ann(α-β) = 0`. Without them, when the
/// quadratic is irreducible modulo every minimal prime of `R`: iff `R` is reduced.
pub fn is_reduced_rab(rr: &RabRing) -> Result<TriState, AlgebraError> {
    let base_flags = flags(rr.base());
    let reduced = &base_flags.reduced;
    if reduced.is_no() {
        return Ok(inherited_no(rr, reduced, "reduced"));
    }
    if let Some(rd) = global_roots(rr) {
        if reduced.is_unknown() {
            return Ok(TriState::unknown("whether R is reduced is not decided"));
        }
        let diff = &rd.alpha - &rd.beta;
        let meet = rr.ideal().intersect(&IdealHandle::principal(&diff).annihilator())?;
        let mut verdict = match meet.gens().first() {
            None => TriState::yes(Witness::Certificate("I ∩ Ann(alpha - beta) = (0)".into())),
            Some(i) => {
                // (-βi + it)² = 0
                let w = rr.element(&-&(&rd.beta * i), i)?;
                debug_assert!((&w * &w).is_zero());
                TriState::no(Witness::RabElement(w)).with_reason(alloc::format!("I ∩ Ann(alpha - beta) = {meet}"))
            }
        };
        if reduced.provenance == Provenance::Asserted {
            verdict.provenance = Provenance::Asserted;
        }
        return Ok(verdict);
    }
    let Some(mins) = minimal_primes_base(rr.base()) else {
        return Ok(TriState::unknown("no roots in R[t] and the minimal primes of R are not computed"));
    };
    for p in &mins {
        match factor_quadratic_mod_prime(rr, p)? {
            Factorization::Irreducible(_) => {}
            _ => return Ok(TriState::unknown(alloc::format!("no roots in R[t] and t^2 + at + b is not irreducible modulo {p}"))),
        }
    }
    Ok(TriState { reason: "irreducible modulo every minimal prime of R".into(), ..reduced.clone() })
}

/// An explicit isomorphism `R(I)_{a,b} → target`, `(r, i) ↦ (r + βi, scale·i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialMap {
    pub target: RabRing,
    pub shift: RingElement,
    pub scale: RingElement,
}

impl SpecialMap {
    pub fn apply(&self, x: &RabElement) -> RabElement {
        self.target
            .element(&(x.r() + &(&self.shift * x.i())), &(&self.scale * x.i()))
            .expect("image lies in the target ideal")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialReport {
    pub idealization: TriState,
    pub duplication: TriState,
    pub idealization_map: Option<SpecialMap>,
    pub duplication_map: Option<SpecialMap>,
    pub notes: Vec<String>,
}

/// Recognises `R(I)_{a,b} ≅ R ⋉ I` and `R(I)_{a,b} ≅ R ⋈ (α-β)I` from roots in `R[t]`.
pub fn recognize_special(rr: &RabRing) -> Result<SpecialReport, AlgebraError> {
    let rd = global_roots(rr).ok_or(AlgebraError::MissingRoots)?;
    let base = rr.base();
    let diff = &rd.alpha - &rd.beta;
    let reduced = flags(base).reduced;
    let i = rr.ideal();
    let i2 = i.product(i)?;
    let mut notes = Vec::new();

    // t ↦ t + β turns the relation into t² - (α-β)t
    let ann_i2 = i2.annihilator();
    let (idealization_v, idealization_map) = if ann_i2.contains(&diff) {
        let target = idealization(base, i)?;
        let map = SpecialMap { target, shift: rd.beta.clone(), scale: base.one() };
        (TriState::yes(Witness::Certificate(alloc::format!("alpha - beta = {diff} lies in Ann(I^2) = {ann_i2}"))), Some(map))
    } else if reduced.is_yes() {
        // in a reduced ring Ann(I) = Ann(I²)
        let g = i.gens().iter().find(|g| !(&diff * *g).is_zero()).unwrap().clone();
        (TriState::no(Witness::Element(g)).with_reason("alpha - beta does not annihilate I and R is reduced"), None)
    } else {
        notes.push("alpha - beta is not in Ann(I^2); R not known to be reduced".into());
        (TriState::unknown("sufficient condition fails and R is not known to be reduced"), None)
    };

    let meet = i.intersect(&IdealHandle::principal(&diff).annihilator())?;
    let (duplication_v, duplication_map) = if meet.is_zero() {
        let image = i.scaled(&diff)?;
        let target = duplication(base, &image)?;
        let map = SpecialMap { target, shift: rd.beta.clone(), scale: diff.clone() };
        (
            TriState::yes(Witness::Certificate(alloc::format!("Ann(alpha - beta) ∩ I = (0); image ideal {image}"))),
            Some(map),
        )
    } else if reduced.is_yes() {
        let w = meet.gens()[0].clone();
        (TriState::no(Witness::Element(w)).with_reason(alloc::format!("Ann(alpha - beta) ∩ I = {meet}")), None)
    } else {
        notes.push(alloc::format!("Ann(alpha - beta) ∩ I = {meet} is nonzero; R not known to be reduced"));
        (TriState::unknown("sufficient condition fails and R is not known to be reduced"), None)
    };

    Ok(SpecialReport {
        idealization: idealization_v,
        duplication: duplication_v,
        idealization_map,
        duplication_map,
        notes,
    })
}

/// `R(I)_{a,b}` with `a = -(α+β)`, `b = αβ`, roots attached.
pub fn rab_from_roots(
    base: &crate::ringcore::RingHandle,
    ideal: &IdealHandle,
    alpha: &RingElement,
    beta: &RingElement,
) -> Result<RabRing, AlgebraError> {
    let rr = make_rab(base, ideal, &-&(alpha + beta), &(alpha * beta))?;
    rr.verify_factorization(&RootData::global(alpha.clone(), beta.clone()))
}
