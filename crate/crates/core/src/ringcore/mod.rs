//! Base rings `R`, canonical element arithmetic and the ideal calculus.

mod flags;
mod ideal;
mod ring;

pub use flags::{flags, is_nilpotent, minimal_primes_base, Flags};
pub use ideal::IdealHandle;
pub use ring::{poly_ring, standard_monomials, Assumptions, Backend, QuotientData, Repr, RingElement, RingHandle};
