//! Exact algebra for the ring family `R(I)_{a,b} = R[It]/(I^2(t^2+at+b))`.
//!
//! Base rings are polynomial quotients over `Q` or `F_p`, or `Z/n`. On top of the
//! ideal calculus sit the ring family itself ([`reesfam`]), decision procedures for
//! its spectrum and structural predicates ([`spectool`]) and a brute-force oracle
//! for finite instances ([`finoracle`]).

#![no_std]

extern crate alloc;

pub mod error;
pub mod finoracle;
pub mod polyalg;
pub mod reesfam;
pub mod ringcore;
pub mod spectool;
pub mod truth;
pub mod util;

pub use error::AlgebraError;
