//! Exact multivariate polynomial arithmetic over `Q` and `F_p`.

mod coeff;
mod groebner;
mod monomial;
mod poly;
mod sqrt;

pub use coeff::{Coeff, Field};
pub use groebner::{eliminate, is_groebner, normal_form, normal_form_with_quotients, reduced_groebner, s_polynomial};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Poly, PolyDisplay, PolyRing, Term};
pub use sqrt::poly_sqrt;

pub(crate) use groebner::reduce;
