use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::contfrac::QuadraticIrrational;
use super::quad::QuadInt;
use super::sqrt::root_of_square;
use crate::{Error, Result};

/// A positive non-square integer `Δ ≡ 0, 1 (mod 4)`.
///
/// The order of discriminant `Δ` is `Z[ρ]` with `ρ = √(Δ/4)` when `Δ ≡ 0` and
/// `ρ = (1 + √Δ)/2` when `Δ ≡ 1 (mod 4)`. Units are returned as [`QuadInt`]s
/// over radicand `Δ/4` or `Δ` respectively.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Discriminant(BigInt);

impl Discriminant {
    pub fn new(delta: impl Into<BigInt>) -> Result<Self> {
        let delta = delta.into();
        if !delta.is_positive() || root_of_square(&delta).is_some() {
            return Err(Error::DegenerateDiscriminant);
        }
        match delta.mod_floor(&BigInt::from(4)) {
            r if r <= BigInt::one() => Ok(Discriminant(delta)),
            _ => Err(Error::NotADiscriminant),
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    /// `Δ ≡ 1 (mod 4)`.
    pub fn is_odd(&self) -> bool {
        self.0.is_odd()
    }

    /// The radicand of the ring the units of this order live in.
    pub fn radicand(&self) -> BigInt {
        if self.is_odd() {
            self.0.clone()
        } else {
            &self.0 >> 2u32
        }
    }

    fn element(&self, u: BigInt, v: BigInt) -> QuadInt {
        if self.is_odd() {
            // u + v(1 + √Δ)/2 = (2u + v + v√Δ)/2
            QuadInt::from_halves(2 * u + &v, v, self.0.clone())
        } else {
            QuadInt::new(u, v, self.radicand())
        }
        .expect("valid discriminant")
    }
}

/// The smallest unit `ε > 1` of the order of discriminant `delta`.
///
/// Read off the first convergent `p/q` of `ρ` with `p - q ρ̄` of norm `±1`.
pub fn fundamental_unit(delta: impl Into<BigInt>) -> Result<QuadInt> {
    let disc = Discriminant::new(delta)?;
    let omega = if disc.is_odd() {
        QuadraticIrrational::new(1, disc.value().clone(), 2)?
    } else {
        QuadraticIrrational::sqrt(disc.radicand())?
    };
    for (p, q) in omega.convergents() {
        // ρ + ρ̄ is 1 for odd discriminants and 0 otherwise.
        let u = if disc.is_odd() { p - &q } else { p };
        let unit = disc.element(u, q);
        if unit.norm().abs().is_one() {
            return Ok(unit);
        }
    }
    unreachable!("the convergents of a quadratic irrational never run out")
}

/// The smallest unit `τ > 1` of norm `+1`: the fundamental unit, or its
/// square when the fundamental unit has norm `-1`.
pub fn tau(delta: impl Into<BigInt>) -> Result<QuadInt> {
    let eps = fundamental_unit(delta)?;
    Ok(if eps.norm().is_one() { eps } else { eps.pow(2) })
}

/// Coordinates `(u, v)` of `x = u + vρ` in the order of discriminant `delta`.
pub fn rho_coordinates(disc: &Discriminant, x: &QuadInt) -> Result<(BigInt, BigInt)> {
    if x.d() != &disc.radicand() {
        return Err(Error::RingMismatch);
    }
    if !disc.is_odd() {
        return Ok((x.p().clone(), x.q().clone()));
    }
    let (t, v) = if x.is_halved() {
        (x.p().clone(), x.q().clone())
    } else {
        (x.p() * 2, x.q() * 2)
    };
    Ok(((t - &v) / 2, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q: i64, d: i64) -> QuadInt {
        QuadInt::new(p, q, d).unwrap()
    }

    #[test]
    fn known_units() {
        assert_eq!(tau(32).unwrap(), q(3, 1, 8));
        assert_eq!(tau(8).unwrap(), q(3, 2, 2));
        assert_eq!(fundamental_unit(8).unwrap(), q(1, 1, 2));
        assert_eq!(
            fundamental_unit(5).unwrap(),
            QuadInt::from_halves(1, 1, 5).unwrap()
        );
        assert_eq!(tau(5).unwrap(), QuadInt::from_halves(3, 1, 5).unwrap());
        assert_eq!(
            fundamental_unit(13).unwrap(),
            QuadInt::from_halves(3, 1, 13).unwrap()
        );
        assert_eq!(fundamental_unit(4 * 94).unwrap(), q(2143295, 221064, 94));
    }

    #[test]
    fn rejects_bad_discriminants() {
        assert_eq!(tau(0), Err(Error::DegenerateDiscriminant));
        assert_eq!(tau(-8), Err(Error::DegenerateDiscriminant));
        assert_eq!(tau(16), Err(Error::DegenerateDiscriminant));
        assert_eq!(tau(6), Err(Error::NotADiscriminant));
        assert_eq!(tau(7), Err(Error::NotADiscriminant));
    }

    #[test]
    fn coordinates() {
        let d32 = Discriminant::new(32).unwrap();
        assert_eq!(
            rho_coordinates(&d32, &tau(32).unwrap()).unwrap(),
            (3.into(), 1.into())
        );
        let d5 = Discriminant::new(5).unwrap();
        // τ_5 = (3 + √5)/2 = 1 + ρ
        assert_eq!(
            rho_coordinates(&d5, &tau(5).unwrap()).unwrap(),
            (1.into(), 1.into())
        );
        // 2 + √5 = 1 + 2ρ
        assert_eq!(
            rho_coordinates(&d5, &q(2, 1, 5)).unwrap(),
            (1.into(), 2.into())
        );
        assert_eq!(rho_coordinates(&d32, &q(1, 1, 2)), Err(Error::RingMismatch));
    }

    /// Smallest `v ≥ 1` with `Δv² + 4` a square, scanning `v ≤ limit`. With
    /// `t² - Δv² = 4`, `(t + v√Δ)/2` is the corresponding norm-one unit.
    fn brute_force_tau_v(delta: i128, limit: i128) -> Option<i128> {
        (1..=limit).find(|&v| {
            let n = delta * v * v + 4;
            let r = (n as f64).sqrt() as i128;
            (r - 1..=r + 1).any(|t| t >= 0 && t * t == n)
        })
    }

    #[test]
    fn tau_matches_brute_force() {
        const LIMIT: i128 = 1_000_000;
        for delta in 5..=200i64 {
            let Ok(disc) = Discriminant::new(delta) else {
                continue;
            };
            let t = tau(delta).unwrap();
            assert!(t.norm().is_one(), "Δ={delta}");
            let (u, v) = rho_coordinates(&disc, &t).unwrap();
            assert!(u.is_positive() && v.is_positive());
            let v: i128 = v.try_into().unwrap_or(i128::MAX);
            // v is also the √Δ coefficient of 2τ.
            match brute_force_tau_v(delta as i128, v.min(LIMIT)) {
                Some(found) => assert_eq!(found, v, "Δ={delta}"),
                None => assert!(v > LIMIT, "Δ={delta}"),
            }
        }
    }
}
