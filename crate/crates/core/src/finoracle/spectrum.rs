use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::model::FiniteModel;
use crate::error::AlgebraError;

/// Membership vector over the elements of a model.
pub type ElementSet = Vec<bool>;

pub fn members(set: &ElementSet) -> Vec<usize> {
    set.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k).collect()
}

/// `{ x : x^(2^k) = 0 }` for `k ≤ log₂|M| + 1`.
pub fn nilradical_bf(m: &FiniteModel) -> ElementSet {
    let rounds = usize::BITS - m.size().leading_zeros() + 1;
    (0..m.size())
        .map(|x| {
            let mut y = x;
            for _ in 0..rounds {
                if y == m.zero() {
                    break;
                }
                y = m.mul(y, y);
            }
            y == m.zero()
        })
        .collect()
}

/// Checks that `set` is an ideal; returns an offending pair otherwise.
pub fn check_ideal(m: &FiniteModel, set: &ElementSet) -> Result<(), (usize, usize)> {
    let mem = members(set);
    for &x in &mem {
        for &y in &mem {
            if !set[m.add(x, y)] {
                return Err((x, y));
            }
        }
        for r in 0..m.size() {
            if !set[m.mul(x, r)] {
                return Err((x, r));
            }
        }
    }
    Ok(())
}

pub fn idempotents(m: &FiniteModel) -> Vec<usize> {
    (0..m.size()).filter(|&x| m.mul(x, x) == x).collect()
}

/// Minimal nonzero idempotents; one per local factor.
pub fn primitive_idempotents(m: &FiniteModel) -> Vec<usize> {
    let es = idempotents(m);
    es.iter()
        .copied()
        .filter(|&e| e != m.zero() && !es.iter().any(|&f| f != m.zero() && f != e && m.mul(f, e) == f))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrutePrime {
    pub members: ElementSet,
    /// The primitive idempotent outside this prime.
    pub idempotent: usize,
}

impl BrutePrime {
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteSpec {
    pub primes: Vec<BrutePrime>,
    pub nilradical: ElementSet,
}

/// Smallest `(x, y)` with `xy ∈ P` and `x, y ∉ P`.
pub fn primality_failure(m: &FiniteModel, set: &ElementSet) -> Option<(usize, usize)> {
    let outside: Vec<usize> = (0..m.size()).filter(|&x| !set[x]).collect();
    for &x in &outside {
        for &y in &outside {
            if set[m.mul(x, y)] {
                return Some((x, y));
            }
        }
    }
    None
}

/// Every prime ideal of `M`: `{ x : xe ∈ N }` for each primitive idempotent `e`.
/// Each set is checked to be a proper prime ideal by definition.
pub fn primes_bf(m: &FiniteModel) -> Result<BruteSpec, AlgebraError> {
    let nil = nilradical_bf(m);
    if let Err((x, y)) = check_ideal(m, &nil) {
        return Err(AlgebraError::OracleMismatch(alloc::format!("nilradical not closed at ({x}, {y})")));
    }
    let mut primes: Vec<BrutePrime> = Vec::new();
    for e in primitive_idempotents(m) {
        let set: ElementSet = (0..m.size()).map(|x| nil[m.mul(x, e)]).collect();
        if set[m.one()] {
            return Err(AlgebraError::OracleMismatch(alloc::format!("prime for idempotent {e} is improper")));
        }
        if let Err((x, y)) = check_ideal(m, &set) {
            return Err(AlgebraError::OracleMismatch(alloc::format!("prime for idempotent {e} not closed at ({x}, {y})")));
        }
        if let Some((x, y)) = primality_failure(m, &set) {
            return Err(AlgebraError::OracleMismatch(alloc::format!("({x})({y}) lies in the set for {e}")));
        }
        if primes.iter().any(|p| p.members == set) {
            return Err(AlgebraError::OracleMismatch("two idempotents give the same prime".into()));
        }
        primes.push(BrutePrime { members: set, idempotent: e });
    }
    Ok(BruteSpec { primes, nilradical: nil })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalInvariants {
    pub size: usize,
    pub residue_size: usize,
    /// `|𝔪/𝔪²|`
    pub cotangent_size: usize,
    /// `|𝔪|, |𝔪²|, …` down to the zero ideal.
    pub power_sizes: Vec<usize>,
    /// Additive order of `1`.
    pub characteristic: usize,
}

#[derive(Clone, Debug)]
pub struct LocalFactor {
    pub model: FiniteModel,
    /// Index in `M` of each factor element.
    pub embedding: Vec<usize>,
    pub invariants: LocalInvariants,
}

/// Additive closure of `gens` inside `m` (which contains 0).
fn additive_span(m: &FiniteModel, gens: &[usize]) -> ElementSet {
    let mut set = alloc::vec![false; m.size()];
    set[m.zero()] = true;
    let mut stack = alloc::vec![m.zero()];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = m.add(x, g);
            if !set[y] {
                set[y] = true;
                stack.push(y);
            }
        }
    }
    set
}

/// Additive span of all products `uv`, `u ∈ A`, `v ∈ B`.
fn ideal_product(m: &FiniteModel, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let (ma, mb) = (members(a), members(b));
    let mut prods = alloc::vec![false; m.size()];
    for &u in &ma {
        for &v in &mb {
            prods[m.mul(u, v)] = true;
        }
    }
    additive_span(m, &members(&prods))
}

/// The factor `M·e` for the primitive idempotent `e ∉ P`, i.e. the localization `M_P`.
pub fn local_factor_bf(m: &FiniteModel, prime: &ElementSet) -> Result<LocalFactor, AlgebraError> {
    if prime.len() != m.size() || prime[m.one()] || primality_failure(m, prime).is_some() || check_ideal(m, prime).is_err() {
        return Err(AlgebraError::BadPrime("element set is not a prime ideal of the model".into()));
    }
    let e = primitive_idempotents(m)
        .into_iter()
        .find(|&e| !prime[e])
        .ok_or_else(|| AlgebraError::BadPrime("no primitive idempotent outside the set".into()))?;
    local_factor_at(m, e)
}

pub(crate) fn local_factor_at(m: &FiniteModel, e: usize) -> Result<LocalFactor, AlgebraError> {
    let mut embedding: Vec<usize> = (0..m.size()).map(|x| m.mul(x, e)).collect();
    embedding.sort_unstable();
    embedding.dedup();
    let index: BTreeMap<usize, usize> = embedding.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let model = FiniteModel::from_fn(
        embedding.len(),
        index[&m.zero()],
        index[&e],
        |x, y| index[&m.add(embedding[x], embedding[y])],
        |x, y| index[&m.mul(embedding[x], embedding[y])],
    )?;
    let invariants = local_invariants(&model);
    Ok(LocalFactor { model, embedding, invariants })
}

/// Invariants of a local model.
pub fn local_invariants(m: &FiniteModel) -> LocalInvariants {
    let max = nilradical_bf(m);
    let msize = members(&max).len();
    let mut power_sizes = alloc::vec![msize];
    let mut power = max.clone();
    while power_sizes.last() != Some(&1) {
        let next = ideal_product(m, &power, &max);
        let s = members(&next).len();
        if Some(&s) == power_sizes.last() {
            break;
        }
        power_sizes.push(s);
        power = next;
    }
    let m2 = power_sizes.get(1).copied().unwrap_or(msize);
    let mut characteristic = 1;
    let mut x = m.one();
    while x != m.zero() {
        x = m.add(x, m.one());
        characteristic += 1;
    }
    LocalInvariants {
        size: m.size(),
        residue_size: m.size() / msize,
        cotangent_size: msize / m2,
        power_sizes,
        characteristic,
    }
}

/// Smallest pair of nonzero elements with zero product.
pub fn zero_divisor_pair(m: &FiniteModel) -> Option<(usize, usize)> {
    for x in 0..m.size() {
        if x == m.zero() {
            continue;
        }
        for y in 0..m.size() {
            if y != m.zero() && m.mul(x, y) == m.zero() {
                return Some((x, y));
            }
        }
    }
    None
}
