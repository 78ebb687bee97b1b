//! Exact arithmetic for balancing-type integer sequences.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised in four layers:
//!
//! * [`quadarith`]: elements of real quadratic rings, integer square roots,
//!   periodic continued fractions and fundamental units.
//! * [`sequences`]: balancing, cobalancing, Lucas-balancing, Lucas-cobalancing
//!   and Pell numbers together with the eight "almost" variants of first and
//!   second type, their balancers and membership criteria.
//! * [`pellsolver`]: all integer solutions of `ax² + bxy + cy² = m` for
//!   indefinite forms, generated from orbit representatives.
//! * [`verifier`]: a catalog of identities between the sequences, checked
//!   with exact arithmetic over index ranges.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod pellsolver;
pub mod quadarith;
pub mod sequences;
pub mod verifier;

pub use crate::error::{Error, Result};
pub use num_bigint::BigInt;
