//! The thirteen balancing-type sequences.
//!
//! Balancing, cobalancing, Lucas-balancing, Lucas-cobalancing and Pell
//! numbers come from their recurrences (or, independently, from powers of
//! `1 + √2`). The eight almost kinds are composed from those through their
//! closed-form expressions; the verifier checks that composition against
//! values read off Pell-equation solutions.
//!
//! All kinds are indexed from 0. The interleaved almost kinds (B**, C**,
//! b*, c*) use one index `k` whose odd and even values select the two
//! branches `k = 2n - 1` and `k = 2n`. Two index-0 values need a choice:
//! `c₀ = -1` extends the Binet form to `α⁻¹`, and `c**₀ = 3` is taken as
//! stated rather than as `3c₀`.

mod kind;
mod membership;
mod table;

pub use self::kind::{BalancerKind, Family, SequenceKind};
pub use self::membership::{balancer, definitional_check, is_member, Membership};
pub use self::table::{term, term_binet, terms, SequenceTable};
