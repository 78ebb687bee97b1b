use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sqrt::root_of_square;
use crate::{Error, Result};

/// An element `p + q√d` of a real quadratic ring, or `(p + q√d)/2` when
/// [`is_halved`](QuadInt::is_halved) is set.
///
/// Halved elements only arise for `d ≡ 1 (mod 4)`; they are kept in lowest
/// terms, so a halved element always has odd `p` and `q`. Equality is
/// structural on this canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    halved: bool,
}

fn check_radicand(d: &BigInt) -> Result<()> {
    if !d.is_positive() || root_of_square(d).is_some() {
        return Err(Error::InvalidRadicand);
    }
    Ok(())
}

impl QuadInt {
    /// `p + q√d`; `d` must be a positive non-square.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        check_radicand(&d)?;
        Ok(QuadInt {
            p: p.into(),
            q: q.into(),
            d,
            halved: false,
        })
    }

    /// `(p2 + q2√d)/2`, the doubled-coordinate form used for discriminants
    /// `≡ 1 (mod 4)`.
    ///
    /// Fails with [`Error::ParityViolation`] when the value is not an
    /// algebraic integer.
    pub fn from_halves(
        p2: impl Into<BigInt>,
        q2: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let d = d.into();
        check_radicand(&d)?;
        Self::normalize(p2.into(), q2.into(), d, 2)
    }

    /// The multiplicative identity of `Z[√d]`.
    pub fn one(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(1, 0, d)
    }

    /// Rational coordinate. For a halved element this is the doubled value.
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// Coefficient of `√d`. For a halved element this is the doubled value.
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_halved(&self) -> bool {
        self.halved
    }

    fn denominator(&self) -> u32 {
        if self.halved {
            2
        } else {
            1
        }
    }

    fn normalize(mut p: BigInt, mut q: BigInt, d: BigInt, mut den: u32) -> Result<Self> {
        while den > 1 && p.is_even() && q.is_even() {
            p >>= 1u32;
            q >>= 1u32;
            den /= 2;
        }
        match den {
            1 => Ok(QuadInt {
                p,
                q,
                d,
                halved: false,
            }),
            // (p + q√d)/2 with p, q odd is integral exactly when d ≡ 1 (mod 4).
            2 if p.is_odd() && q.is_odd() && d.mod_floor(&BigInt::from(4)).is_one() => {
                Ok(QuadInt {
                    p,
                    q,
                    d,
                    halved: true,
                })
            }
            _ => Err(Error::ParityViolation),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let (l, r) = (self.denominator(), other.denominator());
        let p = &self.p * r + &other.p * l;
        let q = &self.q * r + &other.q * l;
        Self::normalize(p, q, self.d.clone(), l * r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let p = &self.p * &other.p + &self.d * &self.q * &other.q;
        let q = &self.p * &other.q + &self.q * &other.p;
        Self::normalize(
            p,
            q,
            self.d.clone(),
            self.denominator() * other.denominator(),
        )
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = QuadInt {
            p: BigInt::one(),
            q: BigInt::zero(),
            d: self.d.clone(),
            halved: false,
        };
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.checked_mul(&base).expect("same ring");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        result
    }

    pub fn neg(&self) -> Self {
        QuadInt {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
            halved: self.halved,
        }
    }

    /// The Galois conjugate `p - q√d`.
    pub fn conj(&self) -> Self {
        QuadInt {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
            halved: self.halved,
        }
    }

    /// `x · conj(x)`, always an integer.
    pub fn norm(&self) -> BigInt {
        let n = &self.p * &self.p - &self.d * &self.q * &self.q;
        if self.halved {
            n / 4
        } else {
            n
        }
    }

    /// `x + conj(x)`, always an integer.
    pub fn trace(&self) -> BigInt {
        if self.halved {
            self.p.clone()
        } else {
            &self.p * 2
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.q.is_negative() { '-' } else { '+' };
        if self.halved {
            write!(f, "({}{}{}√{})/2", self.p, sign, self.q.abs(), self.d)
        } else {
            write!(f, "{}{}{}√{}", self.p, sign, self.q.abs(), self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, q: i64, d: i64) -> QuadInt {
        QuadInt::new(p, q, d).unwrap()
    }

    #[test]
    fn silver_ratio_squared() {
        assert_eq!(q(1, 1, 2).pow(2), q(3, 2, 2));
    }

    #[test]
    fn silver_ratio_has_norm_minus_one() {
        assert_eq!(q(1, 1, 2).norm(), BigInt::from(-1));
    }

    #[test]
    fn radicand_is_not_normalised() {
        // (3 + √8)² = 17 + 6√8; the orbit matrix for 8x² - y² squares to [[17,48],[6,17]].
        assert_eq!(q(3, 1, 8).pow(2), q(17, 6, 8));
    }

    #[test]
    fn ring_mismatch() {
        assert_eq!(
            q(1, 1, 2).checked_mul(&q(1, 1, 3)),
            Err(Error::RingMismatch)
        );
        assert_eq!(
            q(1, 1, 2).checked_add(&q(1, 1, 8)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn rejects_square_radicands() {
        assert_eq!(QuadInt::new(1, 1, 4), Err(Error::InvalidRadicand));
        assert_eq!(QuadInt::new(1, 1, 0), Err(Error::InvalidRadicand));
        assert_eq!(QuadInt::new(1, 1, -3), Err(Error::InvalidRadicand));
    }

    #[test]
    fn golden_ratio_in_halves() {
        let phi = QuadInt::from_halves(1, 1, 5).unwrap();
        assert!(phi.is_halved());
        assert_eq!(phi.norm(), BigInt::from(-1));
        assert_eq!(phi.trace(), BigInt::one());
        // φ² = φ + 1 = (3 + √5)/2
        assert_eq!(phi.pow(2), QuadInt::from_halves(3, 1, 5).unwrap());
        // φ³ = 2 + √5 is no longer halved.
        assert_eq!(phi.pow(3), q(2, 1, 5));
    }

    #[test]
    fn non_integral_halves_rejected() {
        assert_eq!(QuadInt::from_halves(1, 1, 3), Err(Error::ParityViolation));
        assert_eq!(QuadInt::from_halves(1, 2, 5), Err(Error::ParityViolation));
        assert_eq!(QuadInt::from_halves(4, 2, 3).unwrap(), q(2, 1, 3));
    }

    #[test]
    fn display() {
        assert_eq!(q(3, 1, 8).to_string(), "3+1√8");
        assert_eq!(q(3, -2, 2).to_string(), "3-2√2");
        assert_eq!(
            QuadInt::from_halves(1, 1, 5).unwrap().to_string(),
            "(1+1√5)/2"
        );
    }

    fn element(d: i64) -> impl Strategy<Value = QuadInt> {
        (-1000i64..1000, -1000i64..1000, any::<bool>()).prop_map(move |(p, qq, half)| {
            if half && d % 4 == 1 {
                QuadInt::from_halves(2 * p + 1, 2 * qq + 1, d).unwrap()
            } else {
                q(p, qq, d)
            }
        })
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative((x, y) in prop::sample::select(vec![2i64, 3, 5, 8, 13, 21, 32])
            .prop_flat_map(|d| (element(d), element(d))))
        {
            let xy = x.checked_mul(&y).unwrap();
            prop_assert_eq!(xy.norm(), x.norm() * y.norm());
            prop_assert_eq!(xy.d(), x.d());
        }

        #[test]
        fn norm_matches_product_with_conjugate(x in element(13)) {
            let n = x.checked_mul(&x.conj()).unwrap();
            prop_assert_eq!(n.q(), &BigInt::zero());
            prop_assert!(!n.is_halved());
            prop_assert_eq!(n.p(), &x.norm());
        }

        #[test]
        fn exponents_add(x in element(5), m in 0u64..=64, n in 0u64..=64) {
            prop_assert_eq!(x.pow(m + n), x.pow(m).checked_mul(&x.pow(n)).unwrap());
        }
    }
}
