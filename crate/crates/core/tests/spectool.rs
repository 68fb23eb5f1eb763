mod common;

use common::{xy_char2, xy_char3, ideal, kxy_mod_xy, zmod_rab};
use rees_quot_core::polyalg::{Field, MonomialOrder};
use rees_quot_core::reesfam::{make_rab, RabRing, RootData};
use rees_quot_core::ringcore::{poly_ring, IdealHandle, RingHandle};
use rees_quot_core::spectool::{
    factor_quadratic_mod_prime, fiber_over_prime, is_domain_rab, is_reduced_rab, localization_class,
    minimal_primes_rab, recognize_special, Factorization, FiberResult, LocalizationCase, SearchBounds,
};
use rees_quot_core::truth::Witness;
use rees_quot_core::AlgebraError;

fn zprime(rr: &RabRing, p: i64) -> IdealHandle {
    IdealHandle::principal(&rr.base().from_int(p))
}

#[test]
fn quadratic_over_zmod_residues() {
    let rr = zmod_rab(6, 3, 0, -1);
    match factor_quadratic_mod_prime(&rr, &zprime(&rr, 2)).unwrap() {
        Factorization::Roots(rd) => {
            assert_eq!(rd.alpha.as_int().unwrap() % 2, 1);
            assert_eq!(rd.beta.as_int().unwrap() % 2, 1);
        }
        other => panic!("{other:?}"),
    }
    match factor_quadratic_mod_prime(&rr, &zprime(&rr, 3)).unwrap() {
        Factorization::Roots(rd) => {
            let mut roots = [rd.alpha.as_int().unwrap() % 3, rd.beta.as_int().unwrap() % 3];
            roots.sort();
            assert_eq!(roots, [1, 2]);
        }
        other => panic!("{other:?}"),
    }
    // t² + 1 has no root modulo 3
    let irr = zmod_rab(6, 3, 0, 1);
    assert!(matches!(factor_quadratic_mod_prime(&irr, &zprime(&irr, 3)).unwrap(), Factorization::Irreducible(_)));
    assert!(matches!(factor_quadratic_mod_prime(&irr, &zprime(&irr, 1)), Err(AlgebraError::BadPrime(_))));
}

#[test]
fn quadratic_decisions_match_root_search() {
    for n in [6u64, 10, 14, 15, 21, 22, 26, 33, 35] {
        for p in rees_quot_core::util::factorize(n).iter().map(|f| f.0) {
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    let rr = zmod_rab(n, p, a, b);
                    let has_root = (0..p as i64).any(|t| (t * t + a * t + b).rem_euclid(p as i64) == 0);
                    let f = factor_quadratic_mod_prime(&rr, &zprime(&rr, p as i64)).unwrap();
                    assert_eq!(matches!(f, Factorization::Roots(_)), has_root, "n={n} p={p} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn quadratic_over_finite_extension_fields() {
    // F_4[y]/(y²) with F_4 = F_2[x]/(x² + x + 1), over the prime (y); t² + t + x has a root
    // iff Tr(x) = x + x² = 1 vanishes, which it does not
    let poly = poly_ring(Field::prime(2).unwrap(), &["x", "y"], MonomialOrder::DegRevLex);
    let (x, y) = (poly.var(0), poly.var(1));
    let rel = poly.add(&poly.add(&poly.pow(&x, 2), &x), &poly.one());
    let r = RingHandle::quotient(poly.clone(), &[rel, poly.pow(&y, 2)]).unwrap();
    let (xe, ye) = (r.var("x").unwrap(), r.var("y").unwrap());
    let m = IdealHandle::principal(&ye);
    assert!(m.is_prime().is_yes());
    let i = IdealHandle::principal(&ye);
    let f4 = [r.zero(), r.one(), xe.clone(), &xe + &r.one()];
    let mut irreducible = 0;
    for a in &f4 {
        for b in &f4 {
            let rr = make_rab(&r, &i, a, b).unwrap();
            let expect = f4.iter().any(|t| m.contains(&(&(&(t * t) + &(a * t)) + b)));
            irreducible += usize::from(!expect);
            match factor_quadratic_mod_prime(&rr, &m).unwrap() {
                Factorization::Roots(rd) => {
                    assert!(expect);
                    assert!(rr.verify_factorization(&rd).is_ok());
                }
                Factorization::Irreducible(_) => assert!(!expect),
                Factorization::Unknown(w) => panic!("{w}"),
            }
        }
    }
    // monic irreducible quadratics over F_4: (16 - 4) / 2 = 6
    assert_eq!(irreducible, 6);
}

#[test]
fn syntactic_square_root_over_polynomial_residues() {
    let (r, x, y) = kxy_mod_xy(3);
    let rr = make_rab(&r, &ideal(&[&x, &y]), &r.zero(), &-(&y * &y)).unwrap();
    match factor_quadratic_mod_prime(&rr, &ideal(&[&x])).unwrap() {
        Factorization::Roots(rd) => {
            assert!(rd.alpha == y || rd.alpha == -&y);
            assert_eq!(rd.beta, -&rd.alpha);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn domain_examples() {
    // F_3[u], I = (u), t² - u: u is not a square
    let poly = poly_ring(Field::prime(3).unwrap(), &["u"], MonomialOrder::DegRevLex);
    let r = RingHandle::quotient(poly, &[]).unwrap();
    let u = r.var("u").unwrap();
    let rr = make_rab(&r, &IdealHandle::principal(&u), &r.zero(), &-&u).unwrap();
    assert!(is_domain_rab(&rr).unwrap().is_yes());
    // t² - u² does factor
    let rr2 = make_rab(&r, &IdealHandle::principal(&u), &r.zero(), &-(&u * &u)).unwrap();
    let v = is_domain_rab(&rr2).unwrap();
    assert!(v.is_no());
    match v.witness {
        Some(Witness::RabPair(a, b)) => assert!(!a.is_zero() && !b.is_zero() && (&a * &b).is_zero()),
        other => panic!("{other:?}"),
    }
    assert!(is_domain_rab(&zmod_rab(16, 2, 3, 1)).unwrap().is_no());
    let v = is_domain_rab(&xy_char3()).unwrap();
    assert!(v.is_no());
    match v.witness {
        Some(Witness::RabPair(a, b)) => assert!((&a * &b).is_zero()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn reducedness_examples() {
    let v = is_reduced_rab(&xy_char2(true)).unwrap();
    assert!(v.is_no());
    match v.witness {
        Some(Witness::RabElement(w)) => {
            assert!(!w.is_zero() && (&w * &w).is_zero());
            let y = w.ring().base().var("y").unwrap();
            assert_eq!(w.r(), &(&y * &y));
            assert_eq!(w.i(), &y);
        }
        other => panic!("{other:?}"),
    }
    assert!(is_reduced_rab(&xy_char2(false)).unwrap().is_yes());
    assert!(is_reduced_rab(&xy_char3()).unwrap().is_no());
    // irreducible modulo both minimal primes of Z/6: t² + t + 1 mod 2 and t² + 1 mod 3 ... use t² + 1 + ...
    let rr = zmod_rab(6, 2, 1, 5);
    // mod 2: t² + t + 1 irreducible; mod 3: t² + t + 2 irreducible
    assert!(is_reduced_rab(&rr).unwrap().is_yes());
    assert!(is_reduced_rab(&zmod_rab(12, 2, 1, 5)).unwrap().is_no());
}

#[test]
fn special_members() {
    let rep = recognize_special(&xy_char2(true)).unwrap();
    assert!(rep.idealization.is_yes());
    let rep = recognize_special(&xy_char2(false)).unwrap();
    assert!(rep.duplication.is_yes());
    let map = rep.duplication_map.unwrap();
    let x = map.target.base().var("x").unwrap();
    assert!(map.target.ideal().equals(&IdealHandle::principal(&(&x * &x))).unwrap());
    let rep = recognize_special(&xy_char3()).unwrap();
    assert!(rep.idealization.is_no() && rep.duplication.is_no());
    let z = zmod_rab(16, 2, 4, 0);
    let zb = z.base().clone();
    let z = z.verify_factorization(&RootData::global(zb.zero(), zb.from_int(-4))).unwrap();
    let rep = recognize_special(&z).unwrap();
    assert!(rep.idealization.is_yes());
    assert_eq!(recognize_special(&zmod_rab(16, 2, 4, 0)).unwrap_err(), AlgebraError::MissingRoots);
}

#[test]
fn special_maps_are_homomorphisms_on_samples() {
    for rr in [xy_char2(true), xy_char2(false)] {
        let rep = recognize_special(&rr).unwrap();
        let base = rr.base().clone();
        let (x, y) = (base.var("x").unwrap(), base.var("y").unwrap());
        let g = rr.ideal().gens()[0].clone();
        let samples: Vec<_> = [(&x, &y), (&y, &x), (&(&x + &base.one()), &(&y * &y)), (&base.one(), &base.one())]
            .iter()
            .map(|(r, s)| rr.element(r, &(&g * *s)).unwrap())
            .collect();
        for map in [rep.idealization_map, rep.duplication_map].into_iter().flatten() {
            for a in &samples {
                for b in &samples {
                    assert_eq!(map.apply(&(a * b)), &map.apply(a) * &map.apply(b));
                    assert_eq!(map.apply(&(a + b)), &map.apply(a) + &map.apply(b));
                }
                assert_eq!(map.apply(a).is_zero(), a.is_zero());
            }
        }
    }
}

#[test]
fn fibers_of_the_second_example() {
    let rr = xy_char3();
    let base = rr.base().clone();
    let (x, y) = (base.var("x").unwrap(), base.var("y").unwrap());
    match fiber_over_prime(&rr, &ideal(&[&x]), None).unwrap() {
        FiberResult::Reducible { merged, witness, .. } => {
            assert!(!merged);
            assert_eq!(witness, Some(y.clone()));
        }
        other => panic!("{other:?}"),
    }
    let f = fiber_over_prime(&rr, &ideal(&[&y]), None).unwrap();
    assert!(matches!(f, FiberResult::Reducible { merged: true, .. }));
    let mins = minimal_primes_rab(&rr, None).unwrap().unwrap();
    assert_eq!(mins.len(), 3);
}

#[test]
fn fibers_need_roots_when_undecided() {
    // Q[x,y]/(x² + y² - 1) over the zero ideal (asserted prime): no syntactic root of the discriminant
    let poly = poly_ring(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex);
    let rel = poly.sub(&poly.add(&poly.pow(&poly.var(0), 2), &poly.pow(&poly.var(1), 2)), &poly.one());
    let r = RingHandle::quotient(poly, &[rel]).unwrap();
    let x = r.var("x").unwrap();
    let rr = make_rab(&r, &IdealHandle::principal(&x), &r.zero(), &x).unwrap();
    assert_eq!(fiber_over_prime(&rr, &IdealHandle::zero(&r), None).unwrap_err(), AlgebraError::NeedRoots);
}

#[test]
fn zmod_fibers_and_localizations() {
    let rr = zmod_rab(15, 3, 0, -1);
    match fiber_over_prime(&rr, &zprime(&rr, 5), None).unwrap() {
        FiberResult::Reducible { merged, .. } => assert!(!merged),
        other => panic!("{other:?}"),
    }
    let rep = localization_class(&rr, &zprime(&rr, 5), None, SearchBounds::default()).unwrap();
    match rep.case {
        LocalizationCase::Case2b { lambda, .. } => assert_eq!(lambda.as_int().unwrap() % 3, 0),
        other => panic!("{other:?}"),
    }
    let dup = zmod_rab(6, 3, 0, -1);
    let mins = minimal_primes_rab(&dup, None).unwrap().unwrap();
    assert_eq!(mins.len(), 2);
    let z = zmod_rab(16, 2, 4, 0);
    let zb = z.base().clone();
    let z = z.verify_factorization(&RootData::global(zb.zero(), zb.from_int(-4))).unwrap();
    assert_eq!(localization_class(&z, &zprime(&z, 2), None, SearchBounds::default()).unwrap().case, LocalizationCase::Case2a);
    let irr = zmod_rab(6, 3, 0, 1);
    assert_eq!(localization_class(&irr, &zprime(&irr, 3), None, SearchBounds::default()).unwrap().case, LocalizationCase::Case1);
}

#[test]
fn predicate_soundness_on_samples() {
    // every descriptor is closed under addition and absorbs products; contraction is the base prime
    let rr = xy_char3();
    let base = rr.base().clone();
    let (x, y) = (base.var("x").unwrap(), base.var("y").unwrap());
    let ring_samples: Vec<_> = [base.zero(), base.one(), x.clone(), y.clone(), &x + &y, &y * &y, &x + &base.one(), &y - &base.from_int(2)].to_vec();
    let mut elems = Vec::new();
    for r in &ring_samples {
        for s in &ring_samples {
            for g in rr.ideal().gens() {
                elems.push(rr.element(r, &(g * s)).unwrap());
            }
        }
    }
    for p in minimal_primes_rab(&rr, None).unwrap().unwrap() {
        for a in elems.iter().filter(|e| p.contains(e)) {
            if a.i().is_zero() {
                assert!(p.base_prime.contains(a.r()));
            }
            for b in &elems {
                assert!(p.contains(&(a * b)));
                if p.contains(b) {
                    assert!(p.contains(&(a + b)));
                }
            }
        }
        for a in elems.iter().filter(|e| !p.contains(e)) {
            for b in elems.iter().filter(|e| !p.contains(e)) {
                assert!(!p.contains(&(a * b)));
            }
        }
    }
}
