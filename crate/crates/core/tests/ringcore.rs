mod common;

use common::{ideal, kxy_mod_xy};
use proptest::prelude::*;
use rees_quot_core::polyalg::{Field, MonomialOrder};
use rees_quot_core::ringcore::{
    flags, is_nilpotent, minimal_primes_base, poly_ring, Assumptions, IdealHandle, RingElement, RingHandle,
};
use rees_quot_core::truth::{Provenance, Witness};
use rees_quot_core::AlgebraError;

fn zmod(n: u64) -> RingHandle {
    RingHandle::zmod(n).unwrap()
}

#[test]
fn improper_and_bad_modulus() {
    let poly = poly_ring(Field::Rationals, &["x"], MonomialOrder::Lex);
    assert_eq!(RingHandle::quotient(poly.clone(), &[poly.one()]).unwrap_err(), AlgebraError::ImproperIdeal);
    assert_eq!(RingHandle::zmod(1).unwrap_err(), AlgebraError::BadModulus(1));
    assert!(RingHandle::quotient(poly, &[]).is_ok());
}

#[test]
fn element_arithmetic() {
    let (r, x, y) = kxy_mod_xy(2);
    assert_eq!(&y * &(&y + &x), &y * &y);
    assert_eq!((&y * &y).to_string(), "y^2");
    let z = zmod(16);
    assert!((&z.from_int(4) * &z.from_int(4)).is_zero());
    let poly = poly_ring(Field::Rationals, &["x"], MonomialOrder::Lex);
    let q = RingHandle::quotient(poly, &[]).unwrap();
    let x1 = &q.var("x").unwrap() + &q.one();
    assert_eq!(x1.pow(2).to_string(), "x^2 + 2*x + 1");
    assert!(matches!(x.checked_mul(&z.one()), Err(AlgebraError::Ambient(_))));
    assert!(r.one().is_one());
}

#[test]
fn finite_dimension_flag() {
    let poly = poly_ring(Field::prime(2).unwrap(), &["x", "y"], MonomialOrder::DegRevLex);
    let (x, y) = (poly.var(0), poly.var(1));
    let rels = [poly.mul(&x, &y), poly.pow(&x, 3), poly.pow(&y, 3)];
    let r = RingHandle::quotient(poly, &rels).unwrap();
    assert!(r.is_finite());
    assert_eq!(r.cardinality(), Some(32));
    let (open, _, _) = kxy_mod_xy(2);
    assert!(!open.is_finite());
    assert_eq!(open.cardinality(), None);
}

#[test]
fn intersections_and_colons() {
    let (r, x, y) = kxy_mod_xy(2);
    assert!(ideal(&[&x]).intersect(&ideal(&[&y])).unwrap().is_zero());
    let z = zmod(16);
    let c = IdealHandle::zero(&z).colon_element(&z.from_int(4)).unwrap();
    assert_eq!(c.divisor(), Some(4));
    let (r3, x3, y3) = kxy_mod_xy(3);
    let c = IdealHandle::zero(&r3).colon(&ideal(&[&x3, &y3])).unwrap();
    assert!(c.is_zero());
    // (x) ∩ (x + y) = (x^2) in k[x,y]/(xy): x(x+y) = x^2
    let m = ideal(&[&x]).intersect(&ideal(&[&(&x + &y)])).unwrap();
    assert!(m.equals(&ideal(&[&(&x * &x)])).unwrap());
    assert!(IdealHandle::zero(&r).colon_element(&r.zero()).unwrap().is_whole());
}

#[test]
fn annihilators() {
    let (_, x, y) = kxy_mod_xy(2);
    assert!(IdealHandle::principal(&x).annihilator().equals(&ideal(&[&y])).unwrap());
    assert_eq!(IdealHandle::principal(&zmod(16).from_int(2)).annihilator().divisor(), Some(8));
    let (r3, x3, y3) = kxy_mod_xy(3);
    let two_y = &r3.from_int(2) * &y3;
    assert!(IdealHandle::principal(&two_y).annihilator().equals(&ideal(&[&x3])).unwrap());
}

#[test]
fn colon_certificates() {
    // every generator g of (A : f) satisfies g f ∈ A, and f-multiples of A-colon land in A
    let (r, x, y) = kxy_mod_xy(3);
    let a = ideal(&[&(&x * &x), &(&y * &y * &y)]);
    for f in [&x, &y, &(&x + &y), &(&x * &x)] {
        let c = a.colon_element(f).unwrap();
        for g in c.gens() {
            assert!(a.contains(&(g * f)));
        }
        assert!(c.contains_ideal(&a).unwrap().is_yes());
    }
    assert!(a.colon(&IdealHandle::whole(&r)).unwrap().equals(&a).unwrap());
}

#[test]
fn radical_membership() {
    let poly = poly_ring(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex);
    let q = RingHandle::quotient(poly, &[]).unwrap();
    let (x, y) = (q.var("x").unwrap(), q.var("y").unwrap());
    assert!(IdealHandle::principal(&(&x * &x)).radical_contains(&x).unwrap());
    assert!(!IdealHandle::principal(&(&x * &y)).radical_contains(&y).unwrap());
    assert!(is_nilpotent(&zmod(16).from_int(2)));
    assert!(!is_nilpotent(&zmod(12).from_int(2)));
}

#[test]
fn minimal_primes() {
    let ps = minimal_primes_base(&zmod(6)).unwrap();
    let ds: Vec<u64> = ps.iter().map(|p| p.divisor().unwrap()).collect();
    assert_eq!(ds, vec![2, 3]);
    let (_, x, y) = kxy_mod_xy(2);
    let ps = minimal_primes_base(x.ring()).unwrap();
    assert_eq!(ps.len(), 2);
    assert!(ps.iter().any(|p| p.equals(&ideal(&[&x])).unwrap()));
    assert!(ps.iter().any(|p| p.equals(&ideal(&[&y])).unwrap()));
    let poly = poly_ring(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex);
    let circle = poly.sub(&poly.add(&poly.pow(&poly.var(0), 2), &poly.pow(&poly.var(1), 2)), &poly.one());
    assert!(minimal_primes_base(&RingHandle::quotient(poly, &[circle]).unwrap()).is_none());
}

#[test]
fn base_flags() {
    let f = flags(&zmod(16));
    assert!(f.reduced.is_no() && f.domain.is_no());
    assert_eq!(f.reduced.witness, Some(Witness::Element(zmod(16).from_int(4))));
    assert!(flags(&zmod(6)).reduced.is_yes());
    let (r, _, _) = kxy_mod_xy(2);
    let f = flags(&r);
    assert!(f.reduced.is_yes() && f.domain.is_no());
    match f.domain.witness {
        Some(Witness::Pair(a, b)) => {
            assert!(!a.is_zero() && !b.is_zero() && (&a * &b).is_zero());
        }
        other => panic!("unexpected witness {other:?}"),
    }
    let poly = poly_ring(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex);
    let cusp = poly.sub(&poly.pow(&poly.var(1), 2), &poly.pow(&poly.var(0), 3));
    let c = RingHandle::quotient(poly, &[cusp]).unwrap();
    let f = flags(&c);
    assert!(f.reduced.is_unknown() && f.domain.is_unknown());
    let asserted = c.with_assumptions(Assumptions { reduced: Some(true), domain: Some(true) }).unwrap();
    let f = flags(&asserted);
    assert!(f.domain.is_yes());
    assert_eq!(f.domain.provenance, Provenance::Asserted);
    assert!(r.with_assumptions(Assumptions { reduced: None, domain: Some(true) }).is_err());
}

#[test]
fn primality_of_ideals() {
    let (r, x, y) = kxy_mod_xy(2);
    assert!(ideal(&[&x]).is_prime().is_yes());
    assert!(IdealHandle::zero(&r).is_prime().is_no());
    assert!(ideal(&[&(&x * &x), &y]).is_prime().is_no());
    assert!(IdealHandle::principal(&zmod(12).from_int(3)).is_prime().is_yes());
    assert!(IdealHandle::principal(&zmod(12).from_int(6)).is_prime().is_no());
    // x^2 + x + 1 is irreducible over F_2, so F_2[x]/(x^2+x+1) is a field
    let poly = poly_ring(Field::prime(2).unwrap(), &["x"], MonomialOrder::DegRevLex);
    let rel = poly.add(&poly.add(&poly.pow(&poly.var(0), 2), &poly.var(0)), &poly.one());
    assert!(IdealHandle::zero(&RingHandle::quotient(poly.clone(), &[rel]).unwrap()).is_prime().is_yes());
    let rel = poly.add(&poly.pow(&poly.var(0), 2), &poly.one());
    assert!(IdealHandle::zero(&RingHandle::quotient(poly, &[rel]).unwrap()).is_prime().is_no());
}

#[test]
fn zmod_annihilator_formula_exhaustive() {
    for n in 2..=200u64 {
        let z = zmod(n);
        for d in 0..n {
            let ann = IdealHandle::principal(&z.from_int(d as i64)).annihilator();
            // brute force: smallest positive k with k d ≡ 0
            let k = (1..=n).find(|k| (k * d) % n == 0).unwrap();
            assert_eq!(ann.divisor(), Some(k), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn zmod_ideal_ops_match_brute_force() {
    for n in [12u64, 16, 18, 30, 36] {
        let z = zmod(n);
        let set = |i: &IdealHandle| -> Vec<u64> { (0..n).filter(|&v| i.contains(&z.from_int(v as i64))).collect() };
        for d1 in 1..=n {
            for d2 in [2u64, 3, 4, 6] {
                let a = IdealHandle::principal(&z.from_int(d1 as i64));
                let b = IdealHandle::principal(&z.from_int(d2 as i64));
                let (sa, sb) = (set(&a), set(&b));
                let meet: Vec<u64> = sa.iter().copied().filter(|v| sb.contains(v)).collect();
                assert_eq!(set(&a.intersect(&b).unwrap()), meet);
                let prods: Vec<u64> = (0..n).filter(|v| a.product(&b).unwrap().contains(&z.from_int(*v as i64))).collect();
                let brute: Vec<u64> = (0..n).filter(|v| v % crate_gcd(crate_gcd(d1 * d2, n), n) == 0).collect();
                assert_eq!(prods, brute);
                let colon: Vec<u64> = (0..n).filter(|&r| sb.iter().all(|&g| sa.contains(&((r * g) % n)))).collect();
                assert_eq!(set(&a.colon(&b).unwrap()), colon);
            }
        }
    }
}

fn crate_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        crate_gcd(b, a % b)
    }
}

fn small_poly() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..5)
}

fn build(r: &RingHandle, terms: &[(u32, u32, i64)]) -> RingElement {
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    terms.iter().fold(r.zero(), |acc, &(a, b, c)| &acc + &(&(&x.pow(a.into()) * &y.pow(b.into())) * &r.from_int(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn combinations_of_generators_are_members(f in small_poly(), g in small_poly(), h in small_poly()) {
        let (r, x, y) = kxy_mod_xy(5);
        let i = ideal(&[&(&x * &x), &(&y + &x)]);
        let member = &(&build(&r, &f) * &(&x * &x)) + &(&build(&r, &g) * &(&y + &x));
        prop_assert!(i.contains(&member));
        // an element and its residue differ by a member
        let e = build(&r, &h);
        prop_assert!(i.contains(&(&e - &i.reduce(&e))));
    }

    #[test]
    fn arithmetic_agrees_with_lifted_polynomials(f in small_poly(), g in small_poly()) {
        let (r, _, _) = kxy_mod_xy(7);
        let (a, b) = (build(&r, &f), build(&r, &g));
        let poly = r.poly_ring().unwrap();
        let lifted = r.from_poly(&poly.mul(&r.lift(&a), &r.lift(&b))).unwrap();
        prop_assert_eq!(&a * &b, lifted);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }
}
