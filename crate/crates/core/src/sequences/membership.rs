use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::kind::{BalancerKind, Family, SequenceKind};
use crate::quadarith::root_of_square;
use crate::{Error, Result};

/// Outcome of a membership test. `witness` is the square root of the
/// criterion's radicand, i.e. the matching Lucas-type value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<BigInt>,
}

fn radicand(kind: SequenceKind, x: &BigInt) -> Result<BigInt> {
    let (linear, constant) = kind
        .radicand_coefficients()
        .ok_or(Error::NoMembershipCriterion)?;
    Ok(8 * x * x + linear * x + constant)
}

/// Tests `x` against the perfect-square criterion of `kind`.
pub fn is_member(kind: SequenceKind, x: &BigInt) -> Result<Membership> {
    let rad = radicand(kind, x)?;
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    let witness = root_of_square(&rad);
    Ok(Membership {
        member: witness.is_some(),
        witness,
    })
}

/// `r = (-2n - 1 + √radicand)/2` for a member `n` of `kind.sequence()`.
///
/// The result can be negative: 1 is an almost balancing number of second
/// type with balancer -1.
pub fn balancer(kind: BalancerKind, n: &BigInt) -> Result<BigInt> {
    let rad = radicand(kind.sequence(), n)?;
    let root = root_of_square(&rad).ok_or(Error::NotMember)?;
    let top: BigInt = root - 2 * n - 1u32;
    let (r, rem) = top.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::ParityViolation);
    }
    Ok(r)
}

/// `[(n+1) + ... + (n+r)] - [1 + ... + (n-1)]` for the balancing families and
/// `[(n+1) + ... + (n+r)] - [1 + ... + n]` for the cobalancing ones, in
/// closed form. Zero means balanced; ±1 marks the two almost types.
///
/// Negative `r` is read as the signed sum `r·n + r(r+1)/2`, which keeps the
/// degenerate balancer of 1 meaningful.
pub fn definitional_check(family: Family, n: &BigInt, r: &BigInt) -> BigInt {
    let right = r * n + ((r * (r + 1u32)) >> 1u32);
    let left = match family {
        Family::Balancing | Family::AlmostBalancing => n * (n - 1u32),
        Family::Cobalancing | Family::AlmostCobalancing => n * (n + 1u32),
    } >> 1u32;
    right - left
}
