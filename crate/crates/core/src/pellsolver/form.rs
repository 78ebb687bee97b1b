use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::quadarith::{rho_coordinates, tau, Discriminant, QuadInt};
use crate::{Error, Result};

/// An indefinite binary quadratic form `ax² + bxy + cy²` with `a ≠ 0` and a
/// positive non-square discriminant `b² - 4ac`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    disc: Discriminant,
}

impl QuadraticForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        // a = 0 would also make the discriminant the square b².
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let disc = Discriminant::new(&b * &b - 4 * &a * &c)?;
        Ok(QuadraticForm { a, b, c, disc })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn discriminant(&self) -> &Discriminant {
        &self.disc
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A 2×2 integer matrix acting on row vectors, `[x y] ↦ [x y]·M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitMatrix {
    pub m11: BigInt,
    pub m12: BigInt,
    pub m21: BigInt,
    pub m22: BigInt,
}

impl OrbitMatrix {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Self {
        OrbitMatrix {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (x * &self.m11 + y * &self.m21, x * &self.m12 + y * &self.m22)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        OrbitMatrix {
            m11: &self.m11 * &rhs.m11 + &self.m12 * &rhs.m21,
            m12: &self.m11 * &rhs.m12 + &self.m12 * &rhs.m22,
            m21: &self.m21 * &rhs.m11 + &self.m22 * &rhs.m21,
            m22: &self.m21 * &rhs.m12 + &self.m22 * &rhs.m22,
        }
    }

    /// The integer inverse; only valid for determinant one.
    pub fn inverse(&self) -> Self {
        debug_assert!(self.det().is_one());
        OrbitMatrix {
            m11: self.m22.clone(),
            m12: -&self.m12,
            m21: -&self.m21,
            m22: self.m11.clone(),
        }
    }

    /// `M^n`, with negative `n` going through the inverse.
    pub fn pow(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for OrbitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// The matrix of multiplication by `τ = u + vρ` in the basis matching the
/// form, for both parities of the discriminant.
pub fn orbit_matrix(form: &QuadraticForm) -> Result<OrbitMatrix> {
    Ok(orbit_matrix_with(form, &tau(form.disc.value().clone())?))
}

pub(crate) fn orbit_matrix_with(form: &QuadraticForm, tau: &QuadInt) -> OrbitMatrix {
    let (u, v) = rho_coordinates(&form.disc, tau).expect("τ lives in the order of Δ");
    let (a, b, c) = (&form.a, &form.b, &form.c);
    let (left, right) = if form.disc.is_odd() {
        // b is odd here, so (1 ∓ b)/2 are integers.
        let one = BigInt::one();
        (&u + (&one - b) / 2 * &v, &u + (&one + b) / 2 * &v)
    } else {
        (&u - b / 2 * &v, &u + b / 2 * &v)
    };
    let m = OrbitMatrix {
        m11: left,
        m12: a * &v,
        m21: -(c * &v),
        m22: right,
    };
    debug_assert!(m.det().is_one());
    m
}
