#![allow(dead_code)]

use rees_quot_core::polyalg::{Field, MonomialOrder};
use rees_quot_core::reesfam::{make_rab, RabRing, RootData};
use rees_quot_core::ringcore::{poly_ring, IdealHandle, RingElement, RingHandle};

/// `k[x, y]/(xy)` over `F_p`, degrevlex.
pub fn kxy_mod_xy(p: u32) -> (RingHandle, RingElement, RingElement) {
    let poly = poly_ring(Field::prime(p).unwrap(), &["x", "y"], MonomialOrder::DegRevLex);
    let xy = poly.mul(&poly.var(0), &poly.var(1));
    let r = RingHandle::quotient(poly, &[xy]).unwrap();
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    (r, x, y)
}

pub fn ideal(gens: &[&RingElement]) -> IdealHandle {
    let owned: Vec<RingElement> = gens.iter().map(|g| (*g).clone()).collect();
    IdealHandle::new(owned[0].ring(), &owned).unwrap()
}

/// The first worked example: `R(I)_{x,y^2}` over `F_2[x,y]/(xy)`, roots `y + x`, `y`.
pub fn xy_char2(i_is_y: bool) -> RabRing {
    let (r, x, y) = kxy_mod_xy(2);
    let i = if i_is_y { ideal(&[&y]) } else { ideal(&[&x]) };
    let rr = make_rab(&r, &i, &x, &(&y * &y)).unwrap();
    rr.verify_factorization(&RootData::global(&y + &x, y.clone())).unwrap()
}

/// The second worked example over `F_3` with `r = 0`: `I = (x, y)`, `a = 0`, `b = -y^2`,
/// roots `y`, `-y`.
pub fn xy_char3() -> RabRing {
    let (r, x, y) = kxy_mod_xy(3);
    let i = ideal(&[&x, &y]);
    let rr = make_rab(&r, &i, &r.zero(), &-(&y * &y)).unwrap();
    rr.verify_factorization(&RootData::global(y.clone(), -&y)).unwrap()
}

pub fn zmod_rab(n: u64, d: u64, a: i64, b: i64) -> RabRing {
    let r = RingHandle::zmod(n).unwrap();
    let i = IdealHandle::principal(&r.from_int(d as i64));
    make_rab(&r, &i, &r.from_int(a), &r.from_int(b)).unwrap()
}
