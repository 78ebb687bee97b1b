use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `⌊√x⌋` for a non-negative integer of any size.
///
/// Newton iteration from a power of two above the root, followed by exact
/// integer correction so the result never depends on the stopping rule.
pub fn isqrt(x: &BigInt) -> Result<BigInt> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    Ok(isqrt_unchecked(x))
}

fn isqrt_unchecked(x: &BigInt) -> BigInt {
    if *x < BigInt::from(2) {
        return x.clone();
    }
    let bits = x.bits();
    let mut guess = BigInt::one() << bits.div_ceil(2);
    loop {
        let next = (&guess + x / &guess) >> 1u32;
        if next >= guess {
            break;
        }
        guess = next;
    }
    while &guess * &guess > *x {
        guess -= 1u32;
    }
    loop {
        let up = &guess + 1u32;
        if &up * &up <= *x {
            guess = up;
        } else {
            break;
        }
    }
    guess
}

/// The square root of `x` when `x` is a perfect square, `None` otherwise.
pub fn perfect_square_root(x: &BigInt) -> Result<Option<BigInt>> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    Ok(root_of_square(x))
}

pub fn is_perfect_square(x: &BigInt) -> Result<bool> {
    perfect_square_root(x).map(|r| r.is_some())
}

/// Like [`perfect_square_root`], with negative inputs treated as non-squares.
pub(crate) fn root_of_square(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    // Squares are 0, 1, 4 or 9 modulo 16.
    let low = x.magnitude().iter_u32_digits().next().unwrap_or(0) & 15;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let r = isqrt_unchecked(x);
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}
