use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::model::{base_model, enumerate_rab, rab_model, zmod_rab_model, FiniteModel};
use super::spectrum::{nilradical_bf, primes_bf, zero_divisor_pair, BruteSpec, ElementSet};
use crate::error::AlgebraError;
use crate::reesfam::RabRing;
use crate::ringcore::{IdealHandle, RingElement, RingHandle};
use crate::spectool::{fiber_over_prime, is_domain_rab, is_reduced_rab, recognize_special, SpecialMap};

/// Brute-force data of `R(I)_{a,b}`: tables, element pairs `(r, i)` in table order, and Spec.
#[derive(Clone, Debug)]
pub struct RabOracle {
    pub model: FiniteModel,
    pub pairs: Vec<(RingElement, RingElement)>,
    pub spec: BruteSpec,
}

/// Builds the oracle. Over `Z/n` the tables come from integer arithmetic, elsewhere from
/// the element arithmetic of `rr`.
pub fn rab_oracle(rr: &RabRing, cap: usize) -> Result<RabOracle, AlgebraError> {
    let elems = enumerate_rab(rr, cap)?;
    let pairs: Vec<(RingElement, RingElement)> = elems.iter().map(|e| (e.r().clone(), e.i().clone())).collect();
    let model = match (rr.base().modulus(), rr.ideal().divisor()) {
        (Some(n), Some(d)) => {
            let (a, b) = (rr.a().as_int().unwrap(), rr.b().as_int().unwrap());
            zmod_rab_model(n, d, a, b)?
        }
        _ => rab_model(rr, cap)?.0,
    };
    let spec = primes_bf(&model)?;
    Ok(RabOracle { model, pairs, spec })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    /// `false` when the check was skipped (predicate undecided, nothing to verify).
    pub performed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub size: usize,
    pub base_primes: usize,
    pub primes: usize,
    pub checks: Vec<CheckLine>,
}

fn line(name: &str, performed: bool, detail: String) -> CheckLine {
    CheckLine { name: name.into(), performed, detail }
}

fn mismatch(msg: String) -> AlgebraError {
    AlgebraError::OracleMismatch(msg)
}

/// The ideal of `R` spanned by an element set, built generator by generator.
pub fn ideal_of_set(ring: &RingHandle, elems: &[RingElement], set: &ElementSet) -> Result<IdealHandle, AlgebraError> {
    let mut gens: Vec<RingElement> = Vec::new();
    let mut ideal = IdealHandle::zero(ring);
    for (k, x) in elems.iter().enumerate() {
        if set[k] && !ideal.contains(x) {
            gens.push(x.clone());
            ideal = IdealHandle::new(ring, &gens)?;
        }
    }
    Ok(ideal)
}

/// Compares spectool's predictions for a finite `R(I)_{a,b}` with brute force.
pub fn crosscheck(rr: &RabRing, cap: usize) -> Result<CrosscheckReport, AlgebraError> {
    let oracle = rab_oracle(rr, cap)?;
    crosscheck_with(rr, &oracle, cap)
}

/// As [`crosscheck`] with a prebuilt oracle for the same tables.
pub fn crosscheck_with(rr: &RabRing, oracle: &RabOracle, cap: usize) -> Result<CrosscheckReport, AlgebraError> {
    let base = rr.base();
    let (bmodel, belems) = base_model(base, cap)?;
    let bspec = primes_bf(&bmodel)?;
    let bindex: BTreeMap<&RingElement, usize> = belems.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let m = &oracle.model;
    let n = m.size();
    let mut checks = Vec::new();

    // contraction of each brute prime to R
    let contraction = |set: &ElementSet| -> ElementSet {
        let mut out = alloc::vec![false; belems.len()];
        for (k, (r, i)) in oracle.pairs.iter().enumerate() {
            if i.is_zero() && set[k] {
                out[bindex[r]] = true;
            }
        }
        out
    };
    let contracted: Vec<ElementSet> = oracle.spec.primes.iter().map(|p| contraction(&p.members)).collect();
    for (k, c) in contracted.iter().enumerate() {
        if !bspec.primes.iter().any(|q| &q.members == c) {
            return Err(mismatch(alloc::format!("prime #{k} of R(I)_(a,b) does not contract to a prime of R")));
        }
    }

    // (a) fibers as element sets
    let mut matched = 0;
    for bp in &bspec.primes {
        let prime = ideal_of_set(base, &belems, &bp.members)?;
        let fiber = fiber_over_prime(rr, &prime, None)?;
        let predicted: Vec<ElementSet> = fiber
            .primes()
            .iter()
            .map(|d| oracle.pairs.iter().map(|(r, i)| d.contains_pair(r, i)).collect())
            .collect();
        let brute: Vec<&ElementSet> = oracle
            .spec
            .primes
            .iter()
            .zip(&contracted)
            .filter(|(_, c)| **c == bp.members)
            .map(|(p, _)| &p.members)
            .collect();
        for set in &predicted {
            if !brute.iter().any(|b| *b == set) {
                let witness = brute
                    .iter()
                    .filter_map(|b| (0..n).find(|&x| b[x] != set[x]))
                    .min()
                    .unwrap_or(0);
                let (r, i) = &oracle.pairs[witness];
                return Err(mismatch(alloc::format!(
                    "predicted prime over {prime} differs from brute force at {r} + ({i})t"
                )));
            }
        }
        if predicted.len() != brute.len() {
            return Err(mismatch(alloc::format!(
                "{} primes predicted over {prime}, {} found",
                predicted.len(),
                brute.len()
            )));
        }
        matched += brute.len();
    }
    checks.push(line("fibers", true, alloc::format!("{matched} primes matched over {} base primes", bspec.primes.len())));

    // (b) reducedness
    let nil = nilradical_bf(m);
    let nilpotent = (0..n).find(|&x| x != m.zero() && nil[x]);
    let reduced = is_reduced_rab(rr)?;
    match reduced.as_bool() {
        None => checks.push(line("reduced", false, "predicate undecided".into())),
        Some(v) if v == nilpotent.is_none() => checks.push(line("reduced", true, alloc::format!("{v}"))),
        Some(v) => {
            let w = nilpotent.map(|x| pair_text(oracle, x)).unwrap_or_else(|| "none".into());
            return Err(mismatch(alloc::format!("is_reduced = {v}, smallest nonzero nilpotent: {w}")));
        }
    }

    // (c) domain
    let zd = zero_divisor_pair(m);
    let domain = is_domain_rab(rr)?;
    match domain.as_bool() {
        None => checks.push(line("domain", false, "predicate undecided".into())),
        Some(v) if v == zd.is_none() => checks.push(line("domain", true, alloc::format!("{v}"))),
        Some(v) => {
            let w = zd.map(|(x, y)| alloc::format!("{} * {}", pair_text(oracle, x), pair_text(oracle, y)));
            return Err(mismatch(alloc::format!("is_domain = {v}, zero divisors: {}", w.unwrap_or_else(|| "none".into()))));
        }
    }

    // (d) special maps
    match rr.roots().filter(|r| r.is_global()) {
        None => checks.push(line("special maps", false, "no roots in R[t]".into())),
        Some(_) => {
            let report = recognize_special(rr)?;
            let mut verified = 0;
            for map in [&report.idealization_map, &report.duplication_map].into_iter().flatten() {
                verify_map(rr, oracle, map, cap)?;
                verified += 1;
            }
            checks.push(line("special maps", true, alloc::format!("{verified} maps verified")));
        }
    }

    Ok(CrosscheckReport { size: n, base_primes: bspec.primes.len(), primes: oracle.spec.primes.len(), checks })
}

fn pair_text(oracle: &RabOracle, x: usize) -> String {
    let (r, i) = &oracle.pairs[x];
    alloc::format!("{r} + ({i})t")
}

/// Exhaustive check that `map` is a bijective ring homomorphism.
pub fn verify_map(rr: &RabRing, oracle: &RabOracle, map: &SpecialMap, cap: usize) -> Result<(), AlgebraError> {
    let target = rab_oracle(&map.target, cap)?;
    let tindex: BTreeMap<&(RingElement, RingElement), usize> = target.pairs.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let images: Vec<usize> = oracle
        .pairs
        .iter()
        .map(|(r, i)| {
            let y = map.apply(&rr.element_unchecked(r.clone(), i.clone()));
            tindex[&(y.r().clone(), y.i().clone())]
        })
        .collect();
    super::iso::check_isomorphism(&oracle.model, &target.model, &images).map_err(|(x, y)| {
        mismatch(alloc::format!(
            "map into {} fails at {} and {}",
            map.target.ideal(),
            pair_text(oracle, x),
            pair_text(oracle, y)
        ))
    })
}
