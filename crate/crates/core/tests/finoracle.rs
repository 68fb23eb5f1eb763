mod common;

use common::{ideal, zmod_rab};
use proptest::prelude::*;
use rees_quot_core::finoracle::*;
use rees_quot_core::polyalg::{Field, MonomialOrder};
use rees_quot_core::reesfam::{make_rab, RabRing, RootData};
use rees_quot_core::ringcore::{poly_ring, IdealHandle, RingHandle};

/// `F_2[x,y]/(xy, x^3, y^3)`
fn truncated() -> RingHandle {
    let poly = poly_ring(Field::prime(2).unwrap(), &["x", "y"], MonomialOrder::DegRevLex);
    let (x, y) = (poly.var(0), poly.var(1));
    let rels = [poly.mul(&x, &y), poly.pow(&x, 3), poly.pow(&y, 3)];
    RingHandle::quotient(poly, &rels).unwrap()
}

/// The first worked example over the truncation, roots `y + x`, `y`.
fn truncated_xy_char2(i_is_y: bool) -> RabRing {
    let r = truncated();
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    let i = if i_is_y { ideal(&[&y]) } else { ideal(&[&x]) };
    let rr = make_rab(&r, &i, &x, &(&y * &y)).unwrap();
    rr.verify_factorization(&RootData::global(&y + &x, y.clone())).unwrap()
}

fn zmod(n: u64) -> FiniteModel {
    base_model(&RingHandle::zmod(n).unwrap(), DEFAULT_CAP).unwrap().0
}

fn sorted_sets(spec: &BruteSpec) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = spec.primes.iter().map(|p| members(&p.members)).collect();
    v.sort();
    v
}

#[test]
fn enumeration_sizes() {
    let r16 = RingHandle::zmod(16).unwrap();
    let i = IdealHandle::principal(&r16.from_int(2));
    assert_eq!(enumerate_ideal(&i, DEFAULT_CAP).unwrap().len(), 8);
    assert_eq!(enumerate_rab(&zmod_rab(16, 2, 4, 0), DEFAULT_CAP).unwrap().len(), 128);
    assert_eq!(enumerate_base(&truncated(), DEFAULT_CAP).unwrap().len(), 32);
    assert!(matches!(enumerate_rab(&zmod_rab(16, 2, 4, 0), 100), Err(rees_quot_core::AlgebraError::TooLarge { .. })));
    let (kxy, ..) = common::kxy_mod_xy(2);
    assert!(enumerate_base(&kxy, DEFAULT_CAP).is_err());
}

#[test]
fn ideal_closure_matches_divisor_multiples() {
    for n in 2..=40u64 {
        let r = RingHandle::zmod(n).unwrap();
        for g in 0..n {
            let elems = enumerate_ideal(&IdealHandle::principal(&r.from_int(g as i64)), DEFAULT_CAP).unwrap();
            let d = rees_quot_core::util::gcd(g, n);
            let expected: Vec<u64> = (0..n).filter(|v| v % d == 0).collect();
            let got: Vec<u64> = elems.iter().map(|e| e.as_int().unwrap()).collect();
            assert_eq!(got, expected, "n = {n}, g = {g}");
        }
    }
}

#[test]
fn nilradicals() {
    assert_eq!(members(&nilradical_bf(&zmod(16))), (0..16).step_by(2).collect::<Vec<_>>());
    assert_eq!(members(&nilradical_bf(&zmod(6))), vec![0]);
    // agrees element by element with radical membership
    let r = truncated();
    let (m, elems) = base_model(&r, DEFAULT_CAP).unwrap();
    let nil = nilradical_bf(&m);
    let zero = IdealHandle::zero(&r);
    for (k, e) in elems.iter().enumerate() {
        assert_eq!(nil[k], zero.radical_contains(e).unwrap(), "{e}");
    }
    assert!(check_ideal(&m, &nil).is_ok());
}

#[test]
fn small_spectra() {
    assert_eq!(sorted_sets(&primes_bf(&zmod(6)).unwrap()), vec![vec![0, 2, 4], vec![0, 3]]);
    assert_eq!(primes_bf(&zmod(16)).unwrap().primes.len(), 1);
    // Z/30 has three maximal ideals
    assert_eq!(primes_bf(&zmod(30)).unwrap().primes.len(), 3);
    let spec = primes_bf(&base_model(&truncated(), DEFAULT_CAP).unwrap().0).unwrap();
    assert_eq!(spec.primes.len(), 1);
}

#[test]
fn fifteen_fiber_count() {
    let rr = zmod_rab(15, 3, 0, -1);
    let oracle = rab_oracle(&rr, DEFAULT_CAP).unwrap();
    assert_eq!(oracle.model.size(), 75);
    assert_eq!(oracle.spec.primes.len(), 3);
    // contraction: (3, 0) lies in one prime, (5, 0) in two
    let over = |p: u64| oracle.spec.primes.iter().filter(|q| q.contains(zmod_rab_index(15, 3, p, 0))).count();
    assert_eq!((over(3), over(5)), (1, 2));
    for q in &oracle.spec.primes {
        let local = local_factor_bf(&oracle.model, &q.members).unwrap();
        if q.contains(zmod_rab_index(15, 3, 5, 0)) {
            assert_eq!(local.invariants.size, 5);
        }
    }
}

#[test]
fn local_factors() {
    let m6 = zmod(6);
    let spec = primes_bf(&m6).unwrap();
    let at2 = spec.primes.iter().find(|p| p.contains(2)).unwrap();
    let f = local_factor_bf(&m6, &at2.members).unwrap();
    assert_eq!(f.invariants.size, 2);
    assert_eq!(f.invariants.residue_size, 2);

    let m16 = zmod(16);
    let p = &primes_bf(&m16).unwrap().primes[0];
    let f = local_factor_bf(&m16, &p.members).unwrap();
    assert_eq!(f.invariants.size, 16);
    assert_eq!(f.invariants.cotangent_size, 2);
    assert_eq!(f.invariants.power_sizes, vec![8, 4, 2, 1]);

    // not prime
    let mut bad = vec![false; 6];
    bad[0] = true;
    assert!(matches!(local_factor_bf(&m6, &bad), Err(rees_quot_core::AlgebraError::BadPrime(_))));
}

#[test]
fn integer_tables_match_element_arithmetic() {
    for (n, d) in [(12, 2), (12, 3), (12, 4), (12, 6), (16, 2), (18, 3), (9, 3)] {
        for (a, b) in [(0, 0), (1, 0), (0, n - 1), (5, 7), (n - 1, 3)] {
            let rr = zmod_rab(n, d, a as i64, b as i64);
            let (m, _) = rab_model(&rr, DEFAULT_CAP).unwrap();
            assert!(m.same_tables(&zmod_rab_model(n, d, a, b).unwrap()), "n = {n}, d = {d}, a = {a}, b = {b}");
            assert!(m.check_axioms().is_ok());
        }
    }
}

#[test]
fn crosschecks() {
    // duplication of (3) in Z/6: both fibers merged
    let report = crosscheck(&zmod_rab(6, 3, 0, -1), DEFAULT_CAP).unwrap();
    assert_eq!(report.primes, 2);
    let report = crosscheck(&zmod_rab(15, 3, 0, -1), DEFAULT_CAP).unwrap();
    assert_eq!(report.primes, 3);

    // Z/16, I = (2), a = 4, b = 0 with roots 0, -4: the idealization map is checked on 128^2 pairs
    let r = RingHandle::zmod(16).unwrap();
    let rr = zmod_rab(16, 2, 4, 0).verify_factorization(&RootData::global(r.zero(), r.from_int(-4))).unwrap();
    let report = crosscheck(&rr, DEFAULT_CAP).unwrap();
    let maps = report.checks.iter().find(|c| c.name == "special maps").unwrap();
    assert!(maps.performed);
    assert!(maps.detail.starts_with('1') || maps.detail.starts_with('2'));

    for i_is_y in [true, false] {
        let rr = truncated_xy_char2(i_is_y);
        let report = crosscheck(&rr, DEFAULT_CAP).unwrap();
        assert_eq!(report.size, 32 * 4);
        assert!(report.checks.iter().all(|c| c.performed), "{report:?}");
    }
}

#[test]
fn isomorphism_search() {
    // Z/4 and F_2[x]/(x^2) have equal size but different characteristic
    let poly = poly_ring(Field::prime(2).unwrap(), &["x"], MonomialOrder::Lex);
    let x2 = poly.pow(&poly.var(0), 2);
    let dual = base_model(&RingHandle::quotient(poly, &[x2]).unwrap(), DEFAULT_CAP).unwrap().0;
    assert_eq!(find_isomorphism(&zmod(4), &dual, ISO_BUDGET), IsoOutcome::NotIsomorphic);
    // Z/2(I)_{0,0} with I = Z/2 is the dual numbers; Z/2(Z/2)_{1,1} is F_4
    assert!(matches!(find_isomorphism(&zmod_rab_model(2, 1, 0, 0).unwrap(), &dual, ISO_BUDGET), IsoOutcome::Found(_)));
    let f4 = zmod_rab_model(2, 1, 1, 1).unwrap();
    assert_eq!(find_isomorphism(&f4, &dual, ISO_BUDGET), IsoOutcome::NotIsomorphic);
    // Z/6 against a copy relabelled by x -> 5x
    let m6 = zmod(6);
    let relabel: Vec<usize> = (0..6).map(|x| x * 5 % 6).collect();
    let inv: Vec<usize> = (0..6).map(|y| relabel.iter().position(|&v| v == y).unwrap()).collect();
    let permuted = FiniteModel::from_fn(6, 0, relabel[1], |x, y| relabel[(inv[x] + inv[y]) % 6], |x, y| relabel[inv[x] * inv[y] % 6]).unwrap();
    match find_isomorphism(&m6, &permuted, ISO_BUDGET) {
        IsoOutcome::Found(map) => assert!(check_isomorphism(&m6, &permuted, &map).is_ok()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn question_search_small() {
    let report = search_localization_question(2..=12, &mut full_sweep).unwrap();
    assert!(report.counterexamples.is_empty(), "{:?}", report.counterexamples);
    assert!(report.instances > 0);
    assert_eq!(report.instances, report.case_counts.iter().sum::<usize>());
    let empty = search_localization_question(2..=12, &mut |_, _| Vec::new()).unwrap();
    assert_eq!(empty.instances, 0);
    assert!(empty.candidates.is_empty());
    // Z/15, I = (3), a = 0, b = -1 over (5)
    let one = search_localization_question(15..=15, &mut |_, d| if d == 3 { vec![(0, 14)] } else { vec![] }).unwrap();
    assert!(one.counterexamples.is_empty());
    assert_eq!(one.case_counts, [0, 1, 1, 0]);
}

fn arbitrary_rab() -> impl Strategy<Value = (u64, u64, u64, u64)> {
    (4u64..=30).prop_flat_map(|n| {
        let divisors: Vec<u64> = (2..n).filter(|d| n % d == 0).collect();
        let divisors = if divisors.is_empty() { vec![1] } else { divisors };
        (Just(n), prop::sample::select(divisors), 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_invariants((n, d, a, b) in arbitrary_rab()) {
        let m = zmod_rab_model(n, d, a, b).unwrap();
        let spec = primes_bf(&m).unwrap();
        // local factors multiply up to the whole ring
        let sizes: usize = spec.primes.iter().map(|p| local_factor_bf(&m, &p.members).unwrap().invariants.size).product();
        prop_assert_eq!(sizes, m.size());
        // each prime contracts to exactly one prime of Z/n
        for p in &spec.primes {
            let below: Vec<u64> = (2..=n).filter(|q| n % q == 0 && rees_quot_core::util::is_prime(*q))
                .filter(|&q| p.contains(zmod_rab_index(n, d, q, 0))).collect();
            prop_assert_eq!(below.len(), 1);
        }
        prop_assert!(check_ideal(&m, &spec.nilradical).is_ok());
    }
}
