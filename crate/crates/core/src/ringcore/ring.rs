use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::polyalg::{normal_form, reduced_groebner, Coeff, Field, Monomial, Poly, PolyRing};
use crate::util::mulmod;

/// A base ring `R`: a quotient `k[x_1..x_n]/J` or `Z/n`. Cheap to clone.
#[derive(Clone)]
pub struct RingHandle(Arc<RingData>);

#[derive(Debug, PartialEq)]
struct RingData {
    backend: Backend,
    assumptions: Assumptions,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Backend {
    Quotient(QuotientData),
    ZMod(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientData {
    pub poly: PolyRing,
    /// Reduced Groebner basis of `J` under the ring's order.
    pub gb: Vec<Poly>,
    /// Every variable has a pure power among the leading monomials of `gb`.
    pub finite_dim: bool,
}

/// User assertions for properties the backend cannot decide.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assumptions {
    pub reduced: Option<bool>,
    pub domain: Option<bool>,
}

/// Canonical representative: normal form modulo `J`, or least residue mod `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Repr {
    Poly(Poly),
    Int(u64),
}

/// An element of a [`RingHandle`]. Equality is equality of canonical representatives.
#[derive(Clone)]
pub struct RingElement {
    ring: RingHandle,
    repr: Repr,
}

impl RingHandle {
    pub fn quotient(poly: PolyRing, relations: &[Poly]) -> Result<Self, AlgebraError> {
        let gb = reduced_groebner(&poly, relations)?;
        if gb.iter().any(|g| poly.as_constant(g).is_some()) {
            return Err(AlgebraError::ImproperIdeal);
        }
        let finite_dim = (0..poly.nvars()).all(|v| {
            gb.iter().any(|g| {
                let m = g.leading_monomial().unwrap();
                m.0[v] > 0 && m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0)
            })
        });
        Ok(Self::build(Backend::Quotient(QuotientData { poly, gb, finite_dim })))
    }

    pub fn zmod(n: u64) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::BadModulus(n));
        }
        Ok(Self::build(Backend::ZMod(n)))
    }

    fn build(backend: Backend) -> Self {
        RingHandle(Arc::new(RingData { backend, assumptions: Assumptions::default() }))
    }

    /// A new handle carrying user assertions. Assertions that contradict a computed
    /// flag are rejected.
    pub fn with_assumptions(&self, assumptions: Assumptions) -> Result<Self, AlgebraError> {
        let plain = RingHandle::build(self.0.backend.clone());
        let computed = super::flags::computed_flags(&plain);
        let clash = |asserted: Option<bool>, computed: Option<bool>| matches!((asserted, computed), (Some(a), Some(c)) if a != c);
        if clash(assumptions.reduced, computed.reduced.as_bool()) || clash(assumptions.domain, computed.domain.as_bool()) {
            return Err(AlgebraError::Unsupported("assertion contradicts a computed property".into()));
        }
        Ok(RingHandle(Arc::new(RingData { backend: self.0.backend.clone(), assumptions })))
    }

    pub fn assumptions(&self) -> &Assumptions {
        &self.0.assumptions
    }

    pub fn backend(&self) -> &Backend {
        &self.0.backend
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0.backend {
            Backend::ZMod(n) => Some(n),
            Backend::Quotient(_) => None,
        }
    }

    pub fn quotient_data(&self) -> Option<&QuotientData> {
        match &self.0.backend {
            Backend::Quotient(q) => Some(q),
            Backend::ZMod(_) => None,
        }
    }

    pub fn poly_ring(&self) -> Option<&PolyRing> {
        self.quotient_data().map(|q| &q.poly)
    }

    /// Same ring, possibly through a different handle.
    pub fn same(&self, other: &RingHandle) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.backend == other.0.backend
    }

    pub(crate) fn ensure_same(&self, other: &RingHandle) -> Result<(), AlgebraError> {
        if self.same(other) {
            Ok(())
        } else {
            Err(AlgebraError::Ambient("elements belong to different rings"))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &self.0.backend {
            Backend::ZMod(n) => *n,
            Backend::Quotient(q) => q.poly.field().characteristic(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.0.backend {
            Backend::ZMod(_) => true,
            Backend::Quotient(q) => q.finite_dim && q.poly.field().characteristic() != 0,
        }
    }

    pub(crate) fn element(&self, repr: Repr) -> RingElement {
        RingElement { ring: self.clone(), repr }
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> RingElement {
        match &self.0.backend {
            Backend::ZMod(n) => self.element(Repr::Int((i128::from(v).rem_euclid(i128::from(*n))) as u64)),
            Backend::Quotient(q) => self.from_poly_unchecked(q.poly.from_int(v)),
        }
    }

    pub fn from_coeff(&self, c: Coeff) -> Result<RingElement, AlgebraError> {
        let q = self.quotient_data().ok_or(AlgebraError::Ambient("coefficients need a polynomial backend"))?;
        Ok(self.from_poly_unchecked(q.poly.constant(c)))
    }

    pub fn var(&self, name: &str) -> Result<RingElement, AlgebraError> {
        let q = self.quotient_data().ok_or(AlgebraError::Ambient("Z/n has no variables"))?;
        let i = q.poly.var_index(name).ok_or(AlgebraError::Ambient("unknown variable"))?;
        Ok(self.from_poly_unchecked(q.poly.var(i)))
    }

    /// The class of a polynomial of the ambient ring.
    pub fn from_poly(&self, p: &Poly) -> Result<RingElement, AlgebraError> {
        let q = self.quotient_data().ok_or(AlgebraError::Ambient("Z/n has no polynomial elements"))?;
        q.poly.check(p)?;
        Ok(self.from_poly_unchecked(p.clone()))
    }

    fn from_poly_unchecked(&self, p: Poly) -> RingElement {
        let q = self.quotient_data().expect("polynomial backend");
        let nf = if q.gb.is_empty() { p } else { crate::polyalg::reduce(&q.poly, &p, &q.gb, None) };
        self.element(Repr::Poly(nf))
    }

    /// Canonical lift of an element to the ambient polynomial ring.
    pub fn lift(&self, x: &RingElement) -> Poly {
        match &x.repr {
            Repr::Poly(p) => p.clone(),
            Repr::Int(_) => panic!("Z/n elements have no polynomial lift"),
        }
    }

    pub(crate) fn add_repr(&self, a: &Repr, b: &Repr) -> Repr {
        match (&self.0.backend, a, b) {
            (Backend::ZMod(n), Repr::Int(x), Repr::Int(y)) => Repr::Int(((u128::from(*x) + u128::from(*y)) % u128::from(*n)) as u64),
            (Backend::Quotient(q), Repr::Poly(x), Repr::Poly(y)) => Repr::Poly(q.poly.add(x, y)),
            _ => unreachable!("representation does not match backend"),
        }
    }

    pub(crate) fn neg_repr(&self, a: &Repr) -> Repr {
        match (&self.0.backend, a) {
            (Backend::ZMod(n), Repr::Int(x)) => Repr::Int(if *x == 0 { 0 } else { n - x }),
            (Backend::Quotient(q), Repr::Poly(x)) => Repr::Poly(q.poly.neg(x)),
            _ => unreachable!("representation does not match backend"),
        }
    }

    pub(crate) fn mul_repr(&self, a: &Repr, b: &Repr) -> Repr {
        match (&self.0.backend, a, b) {
            (Backend::ZMod(n), Repr::Int(x), Repr::Int(y)) => Repr::Int(mulmod(*x, *y, *n)),
            (Backend::Quotient(q), Repr::Poly(x), Repr::Poly(y)) => {
                let p = q.poly.mul(x, y);
                Repr::Poly(if q.gb.is_empty() { p } else { crate::polyalg::reduce(&q.poly, &p, &q.gb, None) })
            }
            _ => unreachable!("representation does not match backend"),
        }
    }

    /// Standard monomials of `J`, when there are at most `cap` of them.
    pub fn standard_monomials(&self, cap: usize) -> Option<Vec<Monomial>> {
        let q = self.quotient_data()?;
        standard_monomials(&q.poly, &q.gb, cap)
    }

    /// Number of elements, when finite and representable.
    pub fn cardinality(&self) -> Option<u128> {
        match &self.0.backend {
            Backend::ZMod(n) => Some(u128::from(*n)),
            Backend::Quotient(q) => {
                if !self.is_finite() {
                    return None;
                }
                let k = standard_monomials(&q.poly, &q.gb, 128)?.len() as u32;
                u128::from(q.poly.field().characteristic()).checked_pow(k)
            }
        }
    }

    /// Renders an element in canonical syntax.
    pub fn render(&self, x: &RingElement) -> String {
        alloc::format!("{x}")
    }
}

/// Monomials not divisible by any leading monomial of `gb`; `None` if there are
/// more than `cap` (or infinitely many).
pub fn standard_monomials(ring: &PolyRing, gb: &[Poly], cap: usize) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = gb.iter().filter_map(|g| g.leading_monomial()).collect();
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut current = alloc::vec![0u32; n];
    fn divisible(m: &[u32], leads: &[&Monomial]) -> bool {
        leads.iter().any(|l| l.0.iter().zip(m).all(|(a, b)| a <= b))
    }
    // depth-first over exponent vectors; multiples of a non-standard monomial are pruned
    fn walk(v: usize, current: &mut Vec<u32>, leads: &[&Monomial], out: &mut Vec<Monomial>, cap: usize) -> bool {
        if v == current.len() {
            out.push(Monomial(current.clone()));
            return out.len() <= cap;
        }
        let mut e = 0;
        loop {
            current[v] = e;
            if divisible(current, leads) {
                break;
            }
            if !walk(v + 1, current, leads, out, cap) {
                current[v] = 0;
                return false;
            }
            e += 1;
            if e as usize > cap {
                current[v] = 0;
                return false;
            }
        }
        current[v] = 0;
        true
    }
    if walk(0, &mut current, &leads, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

impl fmt::Debug for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHandle({self})")
    }
}

impl PartialEq for RingHandle {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Display for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.backend {
            Backend::ZMod(n) => write!(f, "Z/{n}"),
            Backend::Quotient(q) => {
                write!(f, "{}[{}]", q.poly.field(), q.poly.names().join(","))?;
                if !q.gb.is_empty() {
                    f.write_str("/(")?;
                    for (k, g) in q.gb.iter().enumerate() {
                        if k > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{}", q.poly.display(g))?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl RingElement {
    pub fn ring(&self) -> &RingHandle {
        &self.ring
    }

    pub fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn as_int(&self) -> Option<u64> {
        match self.repr {
            Repr::Int(v) => Some(v),
            Repr::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.repr {
            Repr::Poly(p) => Some(p),
            Repr::Int(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(v) => *v == 0,
            Repr::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.ring.element(self.ring.add_repr(&self.repr, &other.repr)))
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        let neg = self.ring.neg_repr(&other.repr);
        Ok(self.ring.element(self.ring.add_repr(&self.repr, &neg)))
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.ring.element(self.ring.mul_repr(&self.repr, &other.repr)))
    }

    /// Decidable equality; errors when the owners differ.
    pub fn checked_eq(&self, other: &RingElement) -> Result<bool, AlgebraError> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.repr == other.repr)
    }

    pub fn pow(&self, mut e: u64) -> RingElement {
        let mut base = self.repr.clone();
        let mut acc = self.ring.one().repr;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.ring.mul_repr(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.ring.mul_repr(&base, &base);
            }
        }
        self.ring.element(acc)
    }

    /// Multiplicative inverse when the element is a unit detectable without search:
    /// a residue coprime to `n`, or a nonzero constant polynomial.
    pub fn simple_inverse(&self) -> Option<RingElement> {
        match (&self.ring.0.backend, &self.repr) {
            (Backend::ZMod(n), Repr::Int(v)) => {
                let inv = crate::util::mod_inverse(*v, *n)?;
                Some(self.ring.element(Repr::Int(inv)))
            }
            (Backend::Quotient(q), Repr::Poly(p)) => {
                let c = q.poly.as_constant(p)?;
                if q.poly.field().is_zero(&c) {
                    return None;
                }
                Some(self.ring.from_poly_unchecked(q.poly.constant(q.poly.field().inv(&c))))
            }
            _ => unreachable!(),
        }
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.ring.same(&other.ring)
    }
}

impl Eq for RingElement {}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by representative only; meant for elements of one ring.
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.cmp(&other.repr)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ring.0.backend, &self.repr) {
            (_, Repr::Int(v)) => write!(f, "{v}"),
            (Backend::Quotient(q), Repr::Poly(p)) => write!(f, "{}", q.poly.display(p)),
            _ => unreachable!(),
        }
    }
}

// Operator forms panic on owner mismatch; use the `checked_*` methods to get an error instead.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("ring element operands from different rings")
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.element(self.ring.neg_repr(&self.repr))
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Helpers for building polynomial quotient rings from a field and variable names.
pub fn poly_ring(field: Field, names: &[&str], order: crate::polyalg::MonomialOrder) -> PolyRing {
    PolyRing::new(field, names.iter().map(|s| String::from(*s)).collect(), order)
}

/// Normal form of a polynomial against a basis, for callers holding lifted data.
pub(crate) fn nf(ring: &PolyRing, p: &Poly, gb: &[Poly]) -> Poly {
    if gb.is_empty() {
        p.clone()
    } else {
        normal_form(ring, p, gb).expect("ambient checked by caller")
    }
}
