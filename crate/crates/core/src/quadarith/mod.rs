//! Exact arithmetic in real quadratic rings.
//!
//! [`QuadInt`] stores `p + q√d` (or `(p + q√d)/2` for the half-integral
//! elements of orders with discriminant `≡ 1 (mod 4)`) without normalising
//! the radicand, so `3 + √8` stays `3 + √8` rather than becoming `3 + 2√2`.

mod contfrac;
mod quad;
mod sqrt;
mod unit;

pub use self::contfrac::{ContinuedFraction, Convergents, Expansion, QuadraticIrrational, Step};
pub use self::quad::QuadInt;
pub use self::sqrt::{is_perfect_square, isqrt, perfect_square_root};
pub use self::unit::{fundamental_unit, rho_coordinates, tau, Discriminant};

pub(crate) use self::sqrt::root_of_square;
