use core::cmp::Ordering;
use core::fmt;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::coeff::{Coeff, Field};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse polynomial. Terms are nonzero and sorted in decreasing order under the
/// owning [`PolyRing`]'s monomial order; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Poly {
        Poly { terms }
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Whether variable `i` occurs in any term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.0[i] > 0)
    }
}

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, names, order }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..self.clone() }
    }

    /// Same ring with extra variables appended after the existing ones.
    pub fn extended(&self, extra: &[&str], order: MonomialOrder) -> PolyRing {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| String::from(*s)));
        PolyRing { field: self.field, names, order }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn check(&self, p: &Poly) -> Result<(), AlgebraError> {
        if p.terms.iter().all(|t| t.mono.nvars() == self.nvars()) {
            Ok(())
        } else {
            Err(AlgebraError::Ambient("polynomial has the wrong number of variables"))
        }
    }

    pub fn zero(&self) -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_int(&self, v: i64) -> Poly {
        self.constant(self.field.from_i64(v))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn term(&self, mono: Monomial, coeff: Coeff) -> Poly {
        if self.field.is_zero(&coeff) {
            self.zero()
        } else {
            Poly { terms: alloc::vec![Term { mono, coeff }] }
        }
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(&self, terms: I) -> Poly {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(slot) => *slot = self.field.add(slot, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        self.collect_sorted(acc)
    }

    fn collect_sorted(&self, acc: BTreeMap<Monomial, Coeff>) -> Poly {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
        Poly { terms }
    }

    /// Re-sorts a polynomial produced under another order of the same arity.
    pub fn resort(&self, p: &Poly) -> Poly {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
        Poly { terms }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (x, y) = (&a.terms[i], &b.terms[j]);
            match self.order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(y.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&x.coeff, &y.coeff);
                    if !self.field.is_zero(&c) {
                        out.push(Term { mono: x.mono.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.clone(), coeff: self.field.neg(&t.coeff) })
                .collect(),
        }
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly, c: &Coeff) -> Poly {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.clone(), coeff: self.field.mul(&t.coeff, c) })
                .collect(),
        }
    }

    /// `c * m * a`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: &Coeff) -> Poly {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(m), coeff: self.field.mul(&t.coeff, c) })
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for x in &a.terms {
            for y in &b.terms {
                let m = x.mono.mul(&y.mono);
                let c = self.field.mul(&x.coeff, &y.coeff);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = self.field.add(slot, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        self.collect_sorted(acc)
    }

    pub fn pow(&self, a: &Poly, mut e: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            None => self.zero(),
            Some(t) if self.field.is_one(&t.coeff) => a.clone(),
            Some(t) => self.scale(a, &self.field.inv(&t.coeff)),
        }
    }

    /// The constant coefficient if `a` is a constant polynomial (zero included).
    pub fn as_constant(&self, a: &Poly) -> Option<Coeff> {
        match a.terms.as_slice() {
            [] => Some(self.field.zero()),
            [t] if t.mono.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
    pub fn exact_div(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        let lead = b.leading()?;
        let mut rem = a.clone();
        let mut quot = self.zero();
        while let Some(t) = rem.leading().cloned() {
            if !lead.mono.divides(&t.mono) {
                return None;
            }
            let m = t.mono.div(&lead.mono);
            let c = self.field.div(&t.coeff, &lead.coeff);
            rem = self.sub(&rem, &self.mul_term(b, &m, &c));
            quot = self.add(&quot, &self.term(m, c));
        }
        Some(quot)
    }

    /// Moves a polynomial of `self` into `target`, mapping variable `i` to `map[i]`.
    pub fn map_vars(&self, a: &Poly, target: &PolyRing, map: &[usize]) -> Poly {
        debug_assert_eq!(map.len(), self.nvars());
        target.from_terms(a.terms.iter().map(|t| {
            let mut e = alloc::vec![0; target.nvars()];
            for (i, &x) in t.mono.0.iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), t.coeff.clone())
        }))
    }

    /// Embeds into a ring whose first `nvars()` variables coincide with ours.
    pub fn embed(&self, a: &Poly, target: &PolyRing) -> Poly {
        let map: Vec<usize> = (0..self.nvars()).collect();
        self.map_vars(a, target, &map)
    }

    /// Inverse of [`embed`](Self::embed) for polynomials free of the extra variables.
    pub fn restrict(&self, a: &Poly, target: &PolyRing) -> Poly {
        let k = target.nvars();
        debug_assert!(a.terms.iter().all(|t| t.mono.0[k..].iter().all(|&e| e == 0)));
        target.from_terms(a.terms.iter().map(|t| (Monomial(t.mono.0[..k].to_vec()), t.coeff.clone())))
    }

    pub fn display<'a>(&'a self, p: &'a Poly) -> PolyDisplay<'a> {
        PolyDisplay { ring: self, poly: p }
    }
}

/// Canonical rendering such as `x^2*y + 2*y`; it parses back to the same polynomial.
pub struct PolyDisplay<'a> {
    ring: &'a PolyRing,
    poly: &'a Poly,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let field = self.ring.field;
        for (k, t) in self.poly.terms.iter().enumerate() {
            let negative = t.coeff.is_negative_literal();
            let mag = if negative { field.neg(&t.coeff) } else { t.coeff.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = field.is_one(&mag);
            if t.mono.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for (i, &e) in t.mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.ring.names[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn qxy() -> PolyRing {
        PolyRing::new(Field::Rationals, vec!["x".into(), "y".into()], MonomialOrder::DegRevLex)
    }

    #[test]
    fn square_of_binomial() {
        let r = PolyRing::new(Field::Rationals, vec!["x".into()], MonomialOrder::Lex);
        let p = r.add(&r.var(0), &r.one());
        let sq = r.pow(&p, 2);
        assert_eq!(r.display(&sq).to_string(), "x^2 + 2*x + 1");
    }

    #[test]
    fn display_signs_and_fractions() {
        let r = qxy();
        let half = Coeff::Q(num_rational::BigRational::new(1.into(), 2.into()));
        let p = r.sub(&r.mul(&r.var(0), &r.var(1)), &r.scale(&r.var(1), &half));
        assert_eq!(r.display(&p).to_string(), "x*y - 1/2*y");
        assert_eq!(r.display(&r.neg(&r.one())).to_string(), "-1");
    }

    #[test]
    fn exact_division() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let prod = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.exact_div(&prod, &r.add(&x, &y)), Some(r.sub(&x, &y)));
        assert_eq!(r.exact_div(&x, &y), None);
    }

    #[test]
    fn prime_field_cancellation() {
        let r = PolyRing::new(Field::Prime(2), vec!["x".into()], MonomialOrder::Lex);
        let x = r.var(0);
        assert!(r.add(&x, &x).is_zero());
    }
}
