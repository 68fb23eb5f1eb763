//! Coefficient fields: exact rationals and prime fields `F_p` with `p < 2^31`.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::util::modpow;

/// The field a polynomial ring is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `F_p`; the modulus is prime and below `2^31`.
    Prime(u32),
}

/// A field element. Which variant is valid is dictated by the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    Q(BigRational),
    /// Least nonnegative residue.
    P(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if p >= 1 << 31 || !crate::util::is_prime(u64::from(p)) {
            return Err(AlgebraError::BadModulus(u64::from(p)));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => u64::from(*p),
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::one()),
            Field::Prime(_) => Coeff::P(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::P(v.rem_euclid(i64::from(*p)) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((v % &m) + &m) % &m;
                Coeff::P(u32::try_from(r).expect("residue fits in u32"))
            }
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(q) => q.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((u64::from(*x) + u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Q(x)) => Coeff::Q(-x),
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { p - x }),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((u64::from(*x) * u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Rationals, Coeff::Q(x)) => Coeff::Q(x.recip()),
            (Field::Prime(p), Coeff::P(x)) => {
                let p = u64::from(*p);
                Coeff::P(modpow(u64::from(*x), p - 2, p) as u32)
            }
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// A square root inside the field, if one exists.
    pub fn sqrt(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (Field::Rationals, Coeff::Q(x)) => {
                if x.is_negative() {
                    return None;
                }
                let n = exact_isqrt(x.numer())?;
                let d = exact_isqrt(x.denom())?;
                Some(Coeff::Q(BigRational::new(n, d)))
            }
            (Field::Prime(p), Coeff::P(x)) => {
                crate::util::sqrt_mod_prime(u64::from(*x), u64::from(*p)).map(|r| Coeff::P(r as u32))
            }
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }
}

fn exact_isqrt(v: &BigInt) -> Option<BigInt> {
    let r = v.sqrt();
    if &(&r * &r) == v {
        Some(r)
    } else {
        None
    }
}

impl Coeff {
    /// True when the coefficient renders with a leading minus sign.
    pub(crate) fn is_negative_literal(&self) -> bool {
        matches!(self, Coeff::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::P(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
