use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::iso::{find_isomorphism, IsoOutcome, ISO_LIMIT};
use super::model::{zmod_rab_index, zmod_rab_model, FiniteModel};
use super::spectrum::{local_factor_at, local_invariants, primes_bf, LocalInvariants};
use crate::error::AlgebraError;
use crate::reesfam::make_rab;
use crate::ringcore::{IdealHandle, RingHandle};
use crate::spectool::{localization_class, LocalizationCase, SearchBounds};
use crate::util::{factorize, gcd};

/// Node budget for each isomorphism search.
pub const ISO_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    Case1,
    Case2a,
    Case2b,
    OpenQuestion,
}

impl CaseKind {
    pub fn label(self) -> &'static str {
        match self {
            CaseKind::Case1 => "Case1",
            CaseKind::Case2a => "Case2a",
            CaseKind::Case2b => "Case2b",
            CaseKind::OpenQuestion => "OpenQuestion",
        }
    }
}

/// `Z/n`, `I = (d)`, `t² + at + b`, localized over `(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Instance {
    pub n: u64,
    pub d: u64,
    pub a: u64,
    pub b: u64,
    pub p: u64,
    pub case: CaseKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// An explicit ring isomorphism was found and checked.
    Isomorphic,
    /// Invariants agree; the factors are too large for the exhaustive search.
    InvariantsOnly,
    Mismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub instance: Instance,
    /// One comparison per prime over `p`, against `Z/p^k`.
    pub comparisons: Vec<Comparison>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuestionReport {
    pub instances: usize,
    /// Counts for Case1, Case2a, Case2b, OpenQuestion.
    pub case_counts: [usize; 4],
    pub candidates: Vec<Candidate>,
    pub isomorphic: usize,
    pub invariants_only: usize,
    /// Instances whose local factor disagrees with the predicted localization.
    pub counterexamples: Vec<(Instance, String)>,
}

impl QuestionReport {
    pub fn summary(&self) -> String {
        alloc::format!(
            "{} instances (Case1 {}, Case2a {}, Case2b {}, open {}); {} candidates; {} factors isomorphic, {} invariants-only; {}",
            self.instances,
            self.case_counts[0],
            self.case_counts[1],
            self.case_counts[2],
            self.case_counts[3],
            self.candidates.len(),
            self.isomorphic,
            self.invariants_only,
            if self.counterexamples.is_empty() {
                String::from("no counterexample")
            } else {
                alloc::format!("{} counterexamples", self.counterexamples.len())
            }
        )
    }
}

/// Every pair `(a, b) ∈ (Z/n)²`.
pub fn full_sweep(n: u64, _d: u64) -> Vec<(u64, u64)> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
}

/// `(n, d, a mod M, b mod M)` with `M` generating `Ann(I²)`: rings with equal keys have
/// identical tables.
fn table_key(n: u64, d: u64, a: u64, b: u64) -> (u64, u64, u64, u64) {
    let m = n / gcd(n, d * d % n);
    (n, d, a % m, b % m)
}

struct Factors {
    /// `(prime members contain (p, 0), local factor model, invariants)`
    locals: Vec<(usize, FiniteModel, LocalInvariants)>,
}

/// Sweeps `Z/n` for `n` in `ns`, proper nonzero `I = (d)`, and the `(a, b)` returned by
/// `pairs(n, d)`. Each localization is compared with its predicted form on brute-force
/// local factors. Instances where no admissible root choice kills `pλI` are listed as
/// candidates, compared against `Z/p^k`.
pub fn search_localization_question(
    ns: RangeInclusive<u64>,
    pairs: &mut dyn FnMut(u64, u64) -> Vec<(u64, u64)>,
) -> Result<QuestionReport, AlgebraError> {
    let mut report = QuestionReport::default();
    let mut factor_cache: BTreeMap<(u64, u64, u64, u64), Factors> = BTreeMap::new();
    let mut target_cache: BTreeMap<(u64, u64, u64, u64), (FiniteModel, LocalInvariants)> = BTreeMap::new();
    let mut verdicts: BTreeMap<((u64, u64, u64, u64), u64, (u64, u64, u64, u64)), Vec<Comparison>> = BTreeMap::new();

    for n in ns {
        if n < 2 {
            continue;
        }
        let base = RingHandle::zmod(n)?;
        factor_cache.clear();
        verdicts.clear();
        let primes: Vec<(u64, u64)> = factorize(n).into_iter().map(|(p, e)| (p, p.pow(e))).collect();
        for d in (2..n).filter(|d| n % d == 0) {
            let ideal = IdealHandle::principal(&base.from_int(d as i64));
            for (a, b) in pairs(n, d) {
                let (a, b) = (a % n, b % n);
                let rr = make_rab(&base, &ideal, &base.from_int(a as i64), &base.from_int(b as i64))?;
                let key = table_key(n, d, a, b);
                for &(p, pk) in &primes {
                    let prime = IdealHandle::principal(&base.from_int(p as i64));
                    let case = match localization_class(&rr, &prime, None, SearchBounds::default())?.case {
                        LocalizationCase::Case1 => CaseKind::Case1,
                        LocalizationCase::Case2a => CaseKind::Case2a,
                        LocalizationCase::Case2b { .. } => CaseKind::Case2b,
                        LocalizationCase::OpenQuestion { .. } => CaseKind::OpenQuestion,
                    };
                    report.instances += 1;
                    report.case_counts[case as usize] += 1;
                    let instance = Instance { n, d, a, b, p, case };

                    let tkey = match case {
                        CaseKind::Case1 | CaseKind::Case2a => table_key(pk, gcd(d, pk), a % pk, b % pk),
                        _ => (pk, pk, 0, 0),
                    };
                    let vkey = (key, p, tkey);
                    if !verdicts.contains_key(&vkey) {
                        if !factor_cache.contains_key(&key) {
                            factor_cache.insert(key, rab_factors(key)?);
                        }
                        if !target_cache.contains_key(&tkey) {
                            let model = zmod_rab_model(tkey.0, tkey.1, tkey.2, tkey.3)?;
                            let inv = local_invariants(&model);
                            target_cache.insert(tkey, (model, inv));
                        }
                        let (target, tinv) = &target_cache[&tkey];
                        let marker = zmod_rab_index(n, d, p, 0);
                        let out: Vec<Comparison> = factor_cache[&key]
                            .locals
                            .iter()
                            .filter(|(m, _, _)| *m == marker)
                            .map(|(_, model, inv)| compare(model, inv, target, tinv))
                            .collect();
                        verdicts.insert(vkey, out);
                    }
                    let comparisons = verdicts[&vkey].clone();
                    let expected = if matches!(case, CaseKind::Case1 | CaseKind::Case2a) { 1 } else { 2 };
                    if comparisons.len() != expected {
                        report.counterexamples.push((
                            instance,
                            alloc::format!("{} primes over ({p}), expected {expected}", comparisons.len()),
                        ));
                    }
                    for c in &comparisons {
                        match c {
                            Comparison::Isomorphic => report.isomorphic += 1,
                            Comparison::InvariantsOnly => report.invariants_only += 1,
                            Comparison::Mismatch(why) => report.counterexamples.push((instance, why.clone())),
                        }
                    }
                    if case == CaseKind::OpenQuestion {
                        report.candidates.push(Candidate { instance, comparisons });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Local factors of the table model for `key`, each tagged with the index of `(p, 0)` for
/// the rational prime `p` below it.
fn rab_factors(key: (u64, u64, u64, u64)) -> Result<Factors, AlgebraError> {
    let (n, d, a, b) = key;
    let model = zmod_rab_model(n, d, a, b)?;
    let spec = primes_bf(&model)?;
    let mut locals = Vec::new();
    for prime in &spec.primes {
        // the residue characteristic: the prime p | n with (p, 0) in the prime
        let p = factorize(n)
            .into_iter()
            .map(|(p, _)| p)
            .find(|&p| prime.contains(zmod_rab_index(n, d, p, 0)))
            .ok_or_else(|| AlgebraError::OracleMismatch("prime contains no rational prime".into()))?;
        let local = local_factor_at(&model, prime.idempotent)?;
        locals.push((zmod_rab_index(n, d, p, 0), local.model, local.invariants));
    }
    Ok(Factors { locals })
}

fn compare(model: &FiniteModel, inv: &LocalInvariants, target: &FiniteModel, tinv: &LocalInvariants) -> Comparison {
    if inv != tinv {
        return Comparison::Mismatch(alloc::format!("invariants differ: {inv:?} vs {tinv:?}"));
    }
    if model.size() > ISO_LIMIT {
        return Comparison::InvariantsOnly;
    }
    match find_isomorphism(model, target, ISO_BUDGET) {
        IsoOutcome::Found(_) => Comparison::Isomorphic,
        IsoOutcome::NotIsomorphic => Comparison::Mismatch("equal invariants but no isomorphism".into()),
        IsoOutcome::Undecided => Comparison::InvariantsOnly,
    }
}
