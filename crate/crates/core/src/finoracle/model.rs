use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::reesfam::{RabElement, RabRing};
use crate::ringcore::{IdealHandle, RingElement, RingHandle};

/// Default bound on enumerated elements.
pub const DEFAULT_CAP: usize = 10_000;

/// Largest ring for which operation tables are built.
pub const TABLE_LIMIT: usize = 4096;

/// A finite commutative ring on `0..n` given by full operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
}

impl FiniteModel {
    /// Tables from operation closures; `add` must be a group law with identity `zero`.
    pub fn from_fn(
        n: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        if n > TABLE_LIMIT {
            return Err(AlgebraError::TooLarge { size: n as u128, cap: TABLE_LIMIT });
        }
        let mut at = alloc::vec![0u16; n * n];
        let mut mt = alloc::vec![0u16; n * n];
        for x in 0..n {
            for y in x..n {
                let s = add(x, y) as u16;
                let p = mul(x, y) as u16;
                at[x * n + y] = s;
                at[y * n + x] = s;
                mt[x * n + y] = p;
                mt[y * n + x] = p;
            }
        }
        let mut neg = alloc::vec![0u16; n];
        for x in 0..n {
            neg[x] = (0..n).find(|&y| at[x * n + y] as usize == zero).expect("additive inverse") as u16;
        }
        Ok(FiniteModel { n, add: at, mul: mt, neg, zero, one })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Identical tables (same element numbering).
    pub fn same_tables(&self, other: &FiniteModel) -> bool {
        self == other
    }

    /// Exhaustive associativity and distributivity check; returns the first failing triple.
    pub fn check_axioms(&self) -> Result<(), (usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            if self.mul(x, self.one) != x || self.add(x, self.zero) != x {
                return Err((x, self.one, self.zero));
            }
            for y in 0..n {
                let xy = self.mul(x, y);
                let xpy = self.add(x, y);
                let row_xy = &self.mul[xy * n..xy * n + n];
                let row_xpy = &self.mul[xpy * n..xpy * n + n];
                for z in 0..n {
                    if row_xy[z] as usize != self.mul(x, self.mul(y, z)) {
                        return Err((x, y, z));
                    }
                    if row_xpy[z] as usize != self.add(self.mul(x, z), self.mul(y, z)) {
                        return Err((x, y, z));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Elements of `R`, in canonical order: residues `0..n`, or prime-field combinations of
/// standard monomials.
pub fn enumerate_base(ring: &RingHandle, cap: usize) -> Result<Vec<RingElement>, AlgebraError> {
    if let Some(n) = ring.modulus() {
        if n as u128 > cap as u128 {
            return Err(AlgebraError::TooLarge { size: n.into(), cap });
        }
        return Ok((0..n).map(|v| ring.from_int(v as i64)).collect());
    }
    if !ring.is_finite() {
        return Err(AlgebraError::TooLarge { size: u128::MAX, cap });
    }
    let size = ring.cardinality().ok_or(AlgebraError::TooLarge { size: u128::MAX, cap })?;
    if size > cap as u128 {
        return Err(AlgebraError::TooLarge { size, cap });
    }
    let reps = IdealHandle::zero(ring).residue_representatives(cap as u64);
    reps.ok_or(AlgebraError::TooLarge { size, cap })
}

/// Elements of `I`: the closure of its generators under addition and multiplication by `R`.
pub fn enumerate_ideal(ideal: &IdealHandle, cap: usize) -> Result<Vec<RingElement>, AlgebraError> {
    let ring = ideal.ring();
    let all = enumerate_base(ring, cap)?;
    let mut products: Vec<RingElement> = Vec::new();
    for g in ideal.gens() {
        for r in &all {
            let p = g * r;
            if !p.is_zero() {
                products.push(p);
            }
        }
    }
    products.sort();
    products.dedup();
    let mut seen: BTreeMap<RingElement, ()> = BTreeMap::new();
    seen.insert(ring.zero(), ());
    let mut frontier = alloc::vec![ring.zero()];
    while let Some(x) = frontier.pop() {
        for p in &products {
            let y = &x + p;
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), ());
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_keys().collect())
}

/// Elements `(r, i)` of `R(I)_{a,b}`, ordered by `r` then `i`.
pub fn enumerate_rab(rr: &RabRing, cap: usize) -> Result<Vec<RabElement>, AlgebraError> {
    let rs = enumerate_base(rr.base(), cap)?;
    let is = enumerate_ideal(rr.ideal(), cap)?;
    let size = rs.len() as u128 * is.len() as u128;
    if size > cap as u128 {
        return Err(AlgebraError::TooLarge { size, cap });
    }
    let mut out = Vec::with_capacity(size as usize);
    for r in &rs {
        for i in &is {
            out.push(rr.element(r, i)?);
        }
    }
    Ok(out)
}

/// Operation tables of `R`, indexed as [`enumerate_base`].
pub fn base_model(ring: &RingHandle, cap: usize) -> Result<(FiniteModel, Vec<RingElement>), AlgebraError> {
    let elems = enumerate_base(ring, cap)?;
    if let Some(n) = ring.modulus() {
        let n = n as usize;
        let model = FiniteModel::from_fn(n, 0, 1 % n, |x, y| (x + y) % n, |x, y| (x * y) % n)?;
        return Ok((model, elems));
    }
    let index: BTreeMap<RingElement, usize> = elems.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let model = FiniteModel::from_fn(
        elems.len(),
        index[&ring.zero()],
        index[&ring.one()],
        |x, y| index[&(&elems[x] + &elems[y])],
        |x, y| index[&(&elems[x] * &elems[y])],
    )?;
    Ok((model, elems))
}

/// Operation tables of `R(I)_{a,b}` computed with its multiplication law, indexed as
/// [`enumerate_rab`].
pub fn rab_model(rr: &RabRing, cap: usize) -> Result<(FiniteModel, Vec<RabElement>), AlgebraError> {
    let elems = enumerate_rab(rr, cap)?;
    let index: BTreeMap<(RingElement, RingElement), usize> =
        elems.iter().enumerate().map(|(k, e)| ((e.r().clone(), e.i().clone()), k)).collect();
    let key = |e: RabElement| index[&(e.r().clone(), e.i().clone())];
    let model = FiniteModel::from_fn(
        elems.len(),
        key(rr.zero()),
        key(rr.one()),
        |x, y| key(&elems[x] + &elems[y]),
        |x, y| key(&elems[x] * &elems[y]),
    )?;
    Ok((model, elems))
}

/// `R(I)_{a,b}` for `R = Z/n`, `I = (d)` with `d | n` (`d = 1` and `d = n` allowed), on the
/// index `r·(n/d) + i/d`, using integer arithmetic only.
pub fn zmod_rab_model(n: u64, d: u64, a: u64, b: u64) -> Result<FiniteModel, AlgebraError> {
    assert!(n >= 1 && d >= 1 && n % d == 0);
    let m = (n / d) as usize;
    let nn = n as usize;
    let (a, b) = (a % n, b % n);
    let split = move |x: usize| ((x / m) as u64, ((x % m) as u64) * d);
    let join = move |r: u64, i: u64| (r % n) as usize * m + ((i % n) / d) as usize;
    FiniteModel::from_fn(
        nn * m,
        0,
        join(1 % n, 0),
        |x, y| {
            let ((r, i), (s, j)) = (split(x), split(y));
            join(r + s, i + j)
        },
        |x, y| {
            let ((r, i), (s, j)) = (split(x), split(y));
            let ij = i * j % n;
            join(r * s % n + n - b * ij % n, (r * j + s * i) % n + n - a * ij % n)
        },
    )
}

/// Index of `(r, i)` in [`zmod_rab_model`] and [`enumerate_rab`] orderings over `Z/n`.
pub fn zmod_rab_index(n: u64, d: u64, r: u64, i: u64) -> usize {
    (r % n) as usize * (n / d) as usize + ((i % n) / d) as usize
}
