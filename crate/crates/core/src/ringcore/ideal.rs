use core::fmt;

use alloc::vec::Vec;

use super::ring::{nf, Backend, RingElement, RingHandle};
use crate::error::AlgebraError;
use crate::polyalg::{eliminate, reduced_groebner, MonomialOrder, Poly, PolyRing};
use crate::truth::{TriState, Witness};
use crate::util::{gcd, is_prime, lcm, modpow};

/// A finitely generated ideal, stored by canonical generators.
#[derive(Clone)]
pub struct IdealHandle {
    ring: RingHandle,
    gens: Vec<RingElement>,
    data: IdealData,
}

#[derive(Clone, Debug, PartialEq)]
enum IdealData {
    /// The ideal `(d)` with `d | n`; `d = n` is the zero ideal.
    ZMod(u64),
    /// Reduced Groebner basis of `J + lifts(gens)` in the ambient polynomial ring.
    Quotient(Vec<Poly>),
}

impl IdealHandle {
    pub fn new(ring: &RingHandle, gens: &[RingElement]) -> Result<Self, AlgebraError> {
        for g in gens {
            ring.ensure_same(g.ring())?;
        }
        Ok(match ring.backend() {
            Backend::ZMod(n) => {
                let d = gens.iter().fold(*n, |d, g| gcd(d, g.as_int().unwrap()));
                Self::from_divisor(ring, d)
            }
            Backend::Quotient(q) => {
                let mut lifted: Vec<Poly> = q.gb.clone();
                lifted.extend(gens.iter().map(|g| g.as_poly().unwrap().clone()));
                let gb = reduced_groebner(&q.poly, &lifted)?;
                Self::from_lifted_gb(ring, gb)
            }
        })
    }

    fn from_divisor(ring: &RingHandle, d: u64) -> Self {
        let n = ring.modulus().unwrap();
        let gens = if d == n { Vec::new() } else { alloc::vec![ring.from_int(d as i64)] };
        IdealHandle { ring: ring.clone(), gens, data: IdealData::ZMod(d) }
    }

    /// `gb` must be the reduced Groebner basis of an ideal containing `J`.
    fn from_lifted_gb(ring: &RingHandle, gb: Vec<Poly>) -> Self {
        let q = ring.quotient_data().unwrap();
        let gens = gb
            .iter()
            .map(|g| ring.from_poly(&nf(&q.poly, g, &q.gb)).expect("same ambient"))
            .filter(|g| !g.is_zero())
            .collect();
        IdealHandle { ring: ring.clone(), gens, data: IdealData::Quotient(gb) }
    }

    pub fn zero(ring: &RingHandle) -> Self {
        Self::new(ring, &[]).expect("zero ideal")
    }

    pub fn whole(ring: &RingHandle) -> Self {
        Self::new(ring, &[ring.one()]).expect("unit ideal")
    }

    pub fn principal(x: &RingElement) -> Self {
        Self::new(x.ring(), core::slice::from_ref(x)).expect("same ring")
    }

    pub fn ring(&self) -> &RingHandle {
        &self.ring
    }

    /// Canonical generators; empty for the zero ideal.
    pub fn gens(&self) -> &[RingElement] {
        &self.gens
    }

    /// `d` with the ideal equal to `(d)`, for `Z/n`.
    pub fn divisor(&self) -> Option<u64> {
        match self.data {
            IdealData::ZMod(d) => Some(d),
            IdealData::Quotient(_) => None,
        }
    }

    /// Groebner basis of the preimage in the ambient polynomial ring.
    pub fn lifted_basis(&self) -> Option<&[Poly]> {
        match &self.data {
            IdealData::Quotient(gb) => Some(gb),
            IdealData::ZMod(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        match &self.data {
            IdealData::ZMod(d) => *d == 1,
            IdealData::Quotient(gb) => gb.len() == 1 && self.ring.poly_ring().unwrap().as_constant(&gb[0]).is_some(),
        }
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.checked_contains(x).expect("element from a different ring")
    }

    pub fn checked_contains(&self, x: &RingElement) -> Result<bool, AlgebraError> {
        self.ring.ensure_same(x.ring())?;
        Ok(self.reduce(x).is_zero())
    }

    /// Canonical representative of `x` modulo the ideal.
    pub fn reduce(&self, x: &RingElement) -> RingElement {
        match &self.data {
            IdealData::ZMod(d) => self.ring.from_int((x.as_int().unwrap() % d) as i64),
            IdealData::Quotient(gb) => {
                let ring = self.ring.poly_ring().unwrap();
                self.ring.from_poly(&nf(ring, x.as_poly().unwrap(), gb)).unwrap()
            }
        }
    }

    /// Membership as a tri-state: witness is the residue modulo the ideal.
    pub fn membership(&self, x: &RingElement) -> TriState {
        let r = self.reduce(x);
        if r.is_zero() {
            TriState::yes(Witness::Certificate(alloc::format!("{x} reduces to 0")))
        } else {
            TriState::no(Witness::Element(r))
        }
    }

    fn check_same(&self, other: &IdealHandle) -> Result<(), AlgebraError> {
        self.ring.ensure_same(&other.ring)
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle, AlgebraError> {
        self.check_same(other)?;
        let gens: Vec<RingElement> = self.gens.iter().chain(&other.gens).cloned().collect();
        IdealHandle::new(&self.ring, &gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle, AlgebraError> {
        self.check_same(other)?;
        if let (IdealData::ZMod(d1), IdealData::ZMod(d2)) = (&self.data, &other.data) {
            let n = self.ring.modulus().unwrap();
            let d = gcd(((u128::from(*d1) * u128::from(*d2)) % u128::from(n)) as u64, n);
            return Ok(Self::from_divisor(&self.ring, d));
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        IdealHandle::new(&self.ring, &gens)
    }

    /// `x * I` as an ideal.
    pub fn scaled(&self, x: &RingElement) -> Result<IdealHandle, AlgebraError> {
        self.ring.ensure_same(x.ring())?;
        let gens: Vec<RingElement> = self.gens.iter().map(|g| g * x).collect();
        IdealHandle::new(&self.ring, &gens)
    }

    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle, AlgebraError> {
        self.check_same(other)?;
        match (&self.data, &other.data) {
            (IdealData::ZMod(d1), IdealData::ZMod(d2)) => Ok(Self::from_divisor(&self.ring, lcm(*d1, *d2))),
            (IdealData::Quotient(a), IdealData::Quotient(b)) => {
                let ring = self.ring.poly_ring().unwrap();
                let gb = intersect_lifted(ring, a, b)?;
                Ok(Self::from_lifted_gb(&self.ring, gb))
            }
            _ => unreachable!(),
        }
    }

    /// `(self : x) = { r : r x ∈ self }`.
    pub fn colon_element(&self, x: &RingElement) -> Result<IdealHandle, AlgebraError> {
        self.ring.ensure_same(x.ring())?;
        match &self.data {
            IdealData::ZMod(d) => Ok(Self::from_divisor(&self.ring, d / gcd(*d, x.as_int().unwrap()))),
            IdealData::Quotient(a) => {
                if self.contains(x) {
                    return Ok(Self::whole(&self.ring));
                }
                let ring = self.ring.poly_ring().unwrap();
                let f = x.as_poly().unwrap();
                let meet = intersect_lifted(ring, a, core::slice::from_ref(f))?;
                let quotients: Vec<Poly> = meet
                    .iter()
                    .map(|g| ring.exact_div(g, f).expect("element of (f) is divisible by f"))
                    .collect();
                let mut gens = quotients;
                gens.extend(self.ring.quotient_data().unwrap().gb.iter().cloned());
                let gb = reduced_groebner(ring, &gens)?;
                Ok(Self::from_lifted_gb(&self.ring, gb))
            }
        }
    }

    /// `(self : other)`, the intersection of the element colons over generators of `other`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle, AlgebraError> {
        self.check_same(other)?;
        let mut acc = IdealHandle::whole(&self.ring);
        for g in &other.gens {
            acc = acc.intersect(&self.colon_element(g)?)?;
        }
        Ok(acc)
    }

    /// `Ann(I) = (0 : I)`.
    pub fn annihilator(&self) -> IdealHandle {
        IdealHandle::zero(&self.ring).colon(self).expect("same ring")
    }

    /// Whether `other ⊆ self`; on "no" the witness is a generator of `other` outside `self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<TriState, AlgebraError> {
        self.check_same(other)?;
        Ok(match other.gens.iter().find(|g| !self.contains(g)) {
            Some(g) => TriState::no(Witness::Element(g.clone())),
            None => TriState::yes(Witness::Certificate("every generator reduces to 0".into())),
        })
    }

    pub fn equals(&self, other: &IdealHandle) -> Result<bool, AlgebraError> {
        Ok(self.contains_ideal(other)?.is_yes() && other.contains_ideal(self)?.is_yes())
    }

    /// Whether some power of `x` lies in the ideal.
    pub fn radical_contains(&self, x: &RingElement) -> Result<bool, AlgebraError> {
        self.ring.ensure_same(x.ring())?;
        match &self.data {
            IdealData::ZMod(d) => Ok(modpow(x.as_int().unwrap(), 64, *d) == 0),
            IdealData::Quotient(gb) => {
                let ring = self.ring.poly_ring().unwrap();
                let ext = ring.extended(&["_y"], MonomialOrder::DegRevLex);
                let y = ext.var(ring.nvars());
                let f = ring.embed(x.as_poly().unwrap(), &ext);
                let mut gens: Vec<Poly> = gb.iter().map(|g| ring.embed(g, &ext)).collect();
                gens.push(ext.sub(&ext.one(), &ext.mul(&y, &f)));
                let big = reduced_groebner(&ext, &gens)?;
                Ok(big.len() == 1 && ext.as_constant(&big[0]).is_some())
            }
        }
    }

    /// Primality, decided for `Z/n`, linear and monomial preimages, and small finite
    /// residue rings; otherwise taken from the ring's assertions for the zero ideal.
    pub fn is_prime(&self) -> TriState {
        if self.is_whole() {
            return TriState::no(Witness::Certificate("the unit ideal is not prime".into()));
        }
        match &self.data {
            IdealData::ZMod(d) => {
                if is_prime(*d) {
                    TriState::yes(Witness::Certificate(alloc::format!("{d} is prime")))
                } else {
                    let p = crate::util::factorize(*d)[0].0;
                    TriState::no(Witness::Pair(self.ring.from_int(p as i64), self.ring.from_int((d / p) as i64)))
                }
            }
            IdealData::Quotient(gb) => self.quotient_primality(gb),
        }
    }

    fn quotient_primality(&self, gb: &[Poly]) -> TriState {
        let ring = self.ring.poly_ring().unwrap();
        if gb.iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
            return TriState::yes(Witness::Certificate("preimage generated by linear forms".into()));
        }
        if gb.iter().all(|g| g.is_monomial()) {
            for g in gb {
                let m = g.leading_monomial().unwrap();
                if m.as_variable().is_none() {
                    let v = m.0.iter().position(|&e| e > 0).unwrap();
                    let xv = crate::polyalg::Monomial::var(ring.nvars(), v);
                    let rest = m.div(&xv);
                    let f = ring.field();
                    let a = self.ring.from_poly(&ring.term(xv, f.one())).unwrap();
                    let b = self.ring.from_poly(&ring.term(rest, f.one())).unwrap();
                    return TriState::no(Witness::Pair(a, b));
                }
            }
            return TriState::yes(Witness::Certificate("preimage generated by variables".into()));
        }
        if let Some(verdict) = self.finite_residue_field_test(gb) {
            return verdict;
        }
        if self.is_zero() {
            if let Some(d) = self.ring.assumptions().domain {
                return TriState::asserted(d);
            }
        }
        TriState::unknown("primality of a general polynomial ideal is not decided")
    }

    // A finite ring with q elements is a field iff x^(q-1) = 1 for every nonzero x.
    fn finite_residue_field_test(&self, gb: &[Poly]) -> Option<TriState> {
        let ring = self.ring.poly_ring().unwrap();
        let p = ring.field().characteristic();
        if p == 0 {
            return None;
        }
        let staircase = super::ring::standard_monomials(ring, gb, 12)?;
        let q = p.checked_pow(staircase.len() as u32)?;
        if q > 4096 {
            return None;
        }
        for x in self.residue_elements(&staircase) {
            if x.is_zero() {
                continue;
            }
            if !self.reduce(&x.pow(q - 1)).is_one() {
                return Some(TriState::no(Witness::Certificate(alloc::format!(
                    "{x} is a nonzero non-unit of the residue ring"
                ))));
            }
        }
        Some(TriState::yes(Witness::Certificate(alloc::format!("residue ring is a field with {q} elements"))))
    }

    /// Elements of `R` spanned over the prime field by the given monomials.
    fn residue_elements(&self, staircase: &[crate::polyalg::Monomial]) -> Vec<RingElement> {
        let ring = self.ring.poly_ring().unwrap();
        let f = ring.field();
        let p = f.characteristic();
        let mut out = Vec::new();
        let total = p.pow(staircase.len() as u32);
        for mut code in 0..total {
            let mut terms = Vec::new();
            for m in staircase {
                let c = code % p;
                code /= p;
                if c != 0 {
                    terms.push((m.clone(), f.from_i64(c as i64)));
                }
            }
            out.push(self.ring.from_poly(&ring.from_terms(terms)).unwrap());
        }
        out
    }

    /// Size of `R / self` when it is finite and at most `cap`.
    pub fn residue_size(&self, cap: u64) -> Option<u64> {
        match &self.data {
            IdealData::ZMod(d) => Some(*d).filter(|d| *d <= cap),
            IdealData::Quotient(gb) => {
                let ring = self.ring.poly_ring().unwrap();
                let p = ring.field().characteristic();
                if p == 0 {
                    return None;
                }
                let staircase = super::ring::standard_monomials(ring, gb, 64)?;
                p.checked_pow(staircase.len() as u32).filter(|q| *q <= cap)
            }
        }
    }

    /// Representatives of `R / self` (canonical residues), when finite and at most `cap`.
    pub fn residue_representatives(&self, cap: u64) -> Option<Vec<RingElement>> {
        let size = self.residue_size(cap)?;
        match &self.data {
            IdealData::ZMod(_) => Some((0..size).map(|v| self.ring.from_int(v as i64)).collect()),
            IdealData::Quotient(gb) => {
                let ring = self.ring.poly_ring().unwrap();
                let staircase = super::ring::standard_monomials(ring, gb, 64)?;
                Some(self.residue_elements(&staircase))
            }
        }
    }
}

/// `A ∩ B` for ideals of the ambient polynomial ring, via `u·A + (1-u)·B` and eliminating `u`.
fn intersect_lifted(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>, AlgebraError> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let ext = ring.extended(&["_u"], ring.order().clone());
    let u = ext.var(ring.nvars());
    let one_minus_u = ext.sub(&ext.one(), &u);
    let mut gens: Vec<Poly> = a.iter().map(|g| ext.mul(&u, &ring.embed(g, &ext))).collect();
    gens.extend(b.iter().map(|g| ext.mul(&one_minus_u, &ring.embed(g, &ext))));
    let kept = eliminate(&ext, &gens, &[ring.nvars()])?;
    let down: Vec<Poly> = kept.iter().map(|g| ext.restrict(g, ring)).collect();
    reduced_groebner(ring, &down)
}

impl PartialEq for IdealHandle {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.data == other.data
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
