//! The ring `R(I)_{a,b}`, stored on the module decomposition `R ⊕ It`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;
use alloc::sync::Arc;

use crate::error::AlgebraError;
use crate::ringcore::{IdealHandle, RingElement, RingHandle};

/// Roots `α, β` of `γ²(t² + at + b)` modulo a prime, or in `R[t]` when `modulus` is absent:
/// `γa = -(α+β)` and `γ²b = αβ + p_corr` with `p_corr ∈ modulus`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootData {
    pub alpha: RingElement,
    pub beta: RingElement,
    pub gamma: RingElement,
    pub p_corr: RingElement,
    pub modulus: Option<IdealHandle>,
}

impl RootData {
    /// Roots of `t² + at + b` in `R[t]` itself.
    pub fn global(alpha: RingElement, beta: RingElement) -> Self {
        let ring = alpha.ring().clone();
        RootData { alpha, beta, gamma: ring.one(), p_corr: ring.zero(), modulus: None }
    }

    /// Roots modulo `prime`, with `p_corr` solved from the second identity.
    pub fn relative(rr: &RabRing, alpha: RingElement, beta: RingElement, gamma: RingElement, prime: IdealHandle) -> Self {
        let p_corr = &(&(&gamma * &gamma) * rr.b()) - &(&alpha * &beta);
        RootData { alpha, beta, gamma, p_corr, modulus: Some(prime) }
    }

    /// The same roots shifted by `q`: `(α + q, β - q)`, with `p_corr` recomputed.
    pub fn shifted(&self, rr: &RabRing, q: &RingElement) -> Self {
        let alpha = &self.alpha + q;
        let beta = &self.beta - q;
        let p_corr = &(&(&self.gamma * &self.gamma) * rr.b()) - &(&alpha * &beta);
        RootData { alpha, beta, gamma: self.gamma.clone(), p_corr, modulus: self.modulus.clone() }
    }

    /// `α` and `β` exchanged.
    pub fn swapped(&self) -> Self {
        RootData { alpha: self.beta.clone(), beta: self.alpha.clone(), ..self.clone() }
    }

    pub fn is_global(&self) -> bool {
        self.modulus.is_none()
    }
}

#[derive(Clone)]
pub struct RabRing(Arc<RabData>);

#[derive(Debug)]
struct RabData {
    base: RingHandle,
    ideal: IdealHandle,
    a: RingElement,
    b: RingElement,
    roots: Option<RootData>,
    check_membership: bool,
}

/// `r + it` with `i ∈ I`.
#[derive(Clone)]
pub struct RabElement {
    ring: RabRing,
    r: RingElement,
    i: RingElement,
}

/// `R(I)_{a,b}`; `I` must be nonzero and proper.
pub fn make_rab(base: &RingHandle, ideal: &IdealHandle, a: &RingElement, b: &RingElement) -> Result<RabRing, AlgebraError> {
    base.ensure_same(ideal.ring())?;
    base.ensure_same(a.ring())?;
    base.ensure_same(b.ring())?;
    if ideal.is_zero() {
        return Err(AlgebraError::BadIdeal("I is the zero ideal".into()));
    }
    if ideal.is_whole() {
        return Err(AlgebraError::BadIdeal("I is the unit ideal".into()));
    }
    Ok(RabRing(Arc::new(RabData {
        base: base.clone(),
        ideal: ideal.clone(),
        a: a.clone(),
        b: b.clone(),
        roots: None,
        check_membership: true,
    })))
}

/// Nagata's idealization `R ⋉ I = R(I)_{0,0}`.
pub fn idealization(base: &RingHandle, ideal: &IdealHandle) -> Result<RabRing, AlgebraError> {
    make_rab(base, ideal, &base.zero(), &base.zero())
}

/// The amalgamated duplication `R ⋈ I`, realised as `R(I)_{-1,0}`: there `t² = t`
/// and `(r, i) ↦ (r, r + i)` is an isomorphism onto `{(r, r+i)} ⊆ R × R`.
pub fn duplication(base: &RingHandle, ideal: &IdealHandle) -> Result<RabRing, AlgebraError> {
    make_rab(base, ideal, &base.from_int(-1), &base.zero())
}

impl RabRing {
    pub fn base(&self) -> &RingHandle {
        &self.0.base
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.0.ideal
    }

    pub fn a(&self) -> &RingElement {
        &self.0.a
    }

    pub fn b(&self) -> &RingElement {
        &self.0.b
    }

    pub fn roots(&self) -> Option<&RootData> {
        self.0.roots.as_ref()
    }

    pub fn same(&self, other: &RabRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base.same(&other.0.base)
                && self.0.ideal == other.0.ideal
                && self.0.a == other.0.a
                && self.0.b == other.0.b)
    }

    fn ensure_same(&self, other: &RabRing) -> Result<(), AlgebraError> {
        if self.same(other) {
            Ok(())
        } else {
            Err(AlgebraError::Ambient("elements belong to different R(I)_{a,b}"))
        }
    }

    /// Turns the `i ∈ I` check on element construction on or off.
    pub fn with_membership_checks(&self, on: bool) -> RabRing {
        RabRing(Arc::new(RabData { check_membership: on, ..self.data_clone() }))
    }

    fn data_clone(&self) -> RabData {
        RabData {
            base: self.0.base.clone(),
            ideal: self.0.ideal.clone(),
            a: self.0.a.clone(),
            b: self.0.b.clone(),
            roots: self.0.roots.clone(),
            check_membership: self.0.check_membership,
        }
    }

    /// Checks the root identities and returns the ring with the roots attached.
    pub fn verify_factorization(&self, roots: &RootData) -> Result<RabRing, AlgebraError> {
        check_roots(self, roots)?;
        Ok(RabRing(Arc::new(RabData { roots: Some(roots.clone()), ..self.data_clone() })))
    }

    pub fn element(&self, r: &RingElement, i: &RingElement) -> Result<RabElement, AlgebraError> {
        self.0.base.ensure_same(r.ring())?;
        self.0.base.ensure_same(i.ring())?;
        if self.0.check_membership && !self.0.ideal.contains(i) {
            return Err(AlgebraError::NotMember(format!("{i} is not in I = {}", self.0.ideal)));
        }
        Ok(RabElement { ring: self.clone(), r: r.clone(), i: i.clone() })
    }

    pub(crate) fn element_unchecked(&self, r: RingElement, i: RingElement) -> RabElement {
        RabElement { ring: self.clone(), r, i }
    }

    /// The image of `r ∈ R`.
    pub fn from_base(&self, r: &RingElement) -> RabElement {
        self.element_unchecked(r.clone(), self.0.base.zero())
    }

    pub fn zero(&self) -> RabElement {
        self.from_base(&self.0.base.zero())
    }

    pub fn one(&self) -> RabElement {
        self.from_base(&self.0.base.one())
    }

    /// `i t` for `i ∈ I`.
    pub fn t_multiple(&self, i: &RingElement) -> Result<RabElement, AlgebraError> {
        self.element(&self.0.base.zero(), i)
    }

    /// The retraction `s + jt ↦ s + jα`, available when the roots lie in `R[t]`.
    pub fn ev_alpha(&self, x: &RabElement) -> Result<RingElement, AlgebraError> {
        self.ensure_same(&x.ring)?;
        match &self.0.roots {
            Some(roots) if roots.is_global() => Ok(&x.r + &(&x.i * &roots.alpha)),
            _ => Err(AlgebraError::MissingRoots),
        }
    }
}

fn check_roots(rr: &RabRing, roots: &RootData) -> Result<(), AlgebraError> {
    let base = rr.base();
    for x in [&roots.alpha, &roots.beta, &roots.gamma, &roots.p_corr] {
        base.ensure_same(x.ring())?;
    }
    let first = &roots.gamma * rr.a() + &roots.alpha + &roots.beta;
    if !first.is_zero() {
        return Err(AlgebraError::FactorizationMismatch(format!(
            "gamma*a = -(alpha+beta) fails: gamma*a + alpha + beta = {first}"
        )));
    }
    let second = &(&(&roots.gamma * &roots.gamma) * rr.b()) - &(&(&roots.alpha * &roots.beta) + &roots.p_corr);
    if !second.is_zero() {
        return Err(AlgebraError::FactorizationMismatch(format!(
            "gamma^2*b = alpha*beta + p fails: difference {second}"
        )));
    }
    match &roots.modulus {
        None => {
            if !roots.gamma.is_one() || !roots.p_corr.is_zero() {
                return Err(AlgebraError::FactorizationMismatch(
                    "roots in R[t] need gamma = 1 and p = 0".into(),
                ));
            }
        }
        Some(prime) => {
            base.ensure_same(prime.ring())?;
            if prime.is_whole() {
                return Err(AlgebraError::BadPrime("the unit ideal".into()));
            }
            if !prime.contains(&roots.p_corr) {
                return Err(AlgebraError::FactorizationMismatch(format!(
                    "p = {} is not in the prime {prime}",
                    roots.p_corr
                )));
            }
            if prime.contains(&roots.gamma) {
                return Err(AlgebraError::FactorizationMismatch(format!("gamma = {} lies in the prime", roots.gamma)));
            }
        }
    }
    Ok(())
}

impl PartialEq for RabRing {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Debug for RabRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RabRing({self})")
    }
}

impl fmt::Display for RabRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})_{{{},{}}}", self.0.base, self.0.ideal, self.0.a, self.0.b)
    }
}

impl RabElement {
    pub fn ring(&self) -> &RabRing {
        &self.ring
    }

    pub fn r(&self) -> &RingElement {
        &self.r
    }

    pub fn i(&self) -> &RingElement {
        &self.i
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.i.is_zero()
    }

    pub fn checked_add(&self, other: &RabElement) -> Result<RabElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.ring.element_unchecked(&self.r + &other.r, &self.i + &other.i))
    }

    pub fn checked_sub(&self, other: &RabElement) -> Result<RabElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.ring.element_unchecked(&self.r - &other.r, &self.i - &other.i))
    }

    /// `(r + it)(s + jt) = (rs - bij) + (rj + si - aij)t`.
    pub fn checked_mul(&self, other: &RabElement) -> Result<RabElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        let ij = &self.i * &other.i;
        let r = &(&self.r * &other.r) - &(self.ring.b() * &ij);
        let i = &(&(&self.r * &other.i) + &(&other.r * &self.i)) - &(self.ring.a() * &ij);
        Ok(self.ring.element_unchecked(r, i))
    }

    pub fn checked_eq(&self, other: &RabElement) -> Result<bool, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.r == other.r && self.i == other.i)
    }

    pub fn pow(&self, mut e: u64) -> RabElement {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl PartialEq for RabElement {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.i == other.i && self.ring.same(&other.ring)
    }
}

impl Eq for RabElement {}

impl fmt::Debug for RabElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RabElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})t", self.r, self.i)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RabElement> for &RabElement {
            type Output = RabElement;
            fn $method(self, rhs: &RabElement) -> RabElement {
                self.$checked(rhs).expect("operands from different R(I)_{a,b}")
            }
        }
        impl $trait<RabElement> for RabElement {
            type Output = RabElement;
            fn $method(self, rhs: RabElement) -> RabElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &RabElement {
    type Output = RabElement;
    fn neg(self) -> RabElement {
        self.ring.element_unchecked(-&self.r, -&self.i)
    }
}
