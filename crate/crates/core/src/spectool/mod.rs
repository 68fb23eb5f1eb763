//! Decision procedures for spectra and structural predicates of `R(I)_{a,b}`.

mod fiber;
mod localization;
mod predicates;
mod quadratic;

pub use fiber::{fiber_over_prime, minimal_primes_rab, FiberResult, PrimeDescriptor, PrimeKind};
pub use localization::{localization_class, LocalizationCase, LocalizationReport, SearchBounds};
pub use predicates::{is_domain_rab, is_reduced_rab, rab_from_roots, recognize_special, SpecialMap, SpecialReport};
pub use quadratic::{factor_quadratic_mod_prime, residue_kind, Factorization, Residue, FINITE_RESIDUE_CAP};
