//! Brute-force ground truth on finite rings.

mod crosscheck;
mod iso;
mod model;
mod search;
mod spectrum;

pub use crosscheck::{crosscheck, crosscheck_with, ideal_of_set, rab_oracle, verify_map, CheckLine, CrosscheckReport, RabOracle};
pub use iso::{check_isomorphism, find_isomorphism, IsoOutcome, ISO_LIMIT};
pub use model::{
    base_model, enumerate_base, enumerate_ideal, enumerate_rab, rab_model, zmod_rab_index, zmod_rab_model, FiniteModel,
    DEFAULT_CAP, TABLE_LIMIT,
};
pub use search::{
    full_sweep, search_localization_question, Candidate, CaseKind, Comparison, Instance, QuestionReport, ISO_BUDGET,
};
pub use spectrum::{
    check_ideal, idempotents, local_factor_bf, local_invariants, members, nilradical_bf, primality_failure,
    primes_bf, primitive_idempotents, zero_divisor_pair, BrutePrime, BruteSpec, ElementSet, LocalFactor,
    LocalInvariants,
};
