use balance_forge_core::quadarith::{
    fundamental_unit, is_perfect_square, isqrt, perfect_square_root, tau, ContinuedFraction,
    QuadInt,
};
use balance_forge_core::{BigInt, Error};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn non_square() -> impl Strategy<Value = i64> {
    (2i64..5_000).prop_filter("non-square", |d| {
        let r = (*d as f64).sqrt() as i64;
        r * r != *d && (r + 1) * (r + 1) != *d
    })
}

proptest! {
    #[test]
    fn isqrt_brackets_the_root(x in 0u128..(1u128 << 100)) {
        let n = BigInt::from(x);
        let r = isqrt(&n).unwrap();
        prop_assert!(&r * &r <= n);
        prop_assert!((&r + 1u32) * (&r + 1u32) > n);
    }

    #[test]
    fn squares_are_recognised(x in 0u64..u64::MAX) {
        let sq = BigInt::from(x) * BigInt::from(x);
        prop_assert_eq!(perfect_square_root(&sq).unwrap(), Some(BigInt::from(x)));
        if x > 0 {
            prop_assert!(!is_perfect_square(&(sq + 1u32)).unwrap());
        }
    }

    #[test]
    fn norm_is_multiplicative(d in non_square(), p1 in -1000i64..1000, q1 in -1000i64..1000,
                              p2 in -1000i64..1000, q2 in -1000i64..1000) {
        let (x, y) = (QuadInt::new(p1, q1, d).unwrap(), QuadInt::new(p2, q2, d).unwrap());
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        prop_assert_eq!(x.checked_mul(&x.conj()).unwrap(), QuadInt::new(x.norm(), 0, d).unwrap());
        prop_assert_eq!(x.pow(3), x.checked_mul(&x).unwrap().checked_mul(&x).unwrap());
    }

    #[test]
    fn fundamental_unit_has_norm_one_or_minus_one(d in non_square()) {
        let delta = big(4 * d);
        let eps = fundamental_unit(delta.clone()).unwrap();
        prop_assert_eq!(eps.norm().abs(), BigInt::one());
        let t = tau(delta).unwrap();
        prop_assert_eq!(t.norm(), BigInt::one());
        prop_assert!(t.p().is_positive() && t.q().is_positive());
    }

    #[test]
    fn sqrt_expansion_is_periodic_with_palindromic_body(d in non_square()) {
        let cf = ContinuedFraction::of_sqrt(d).unwrap();
        prop_assert!(cf.preperiod.is_empty());
        let a0 = big((d as f64).sqrt() as i64);
        prop_assert_eq!(&cf.a0, &a0);
        let (last, body) = cf.period.split_last().unwrap();
        prop_assert_eq!(last, &(2 * &a0));
        prop_assert!(body.iter().eq(body.iter().rev()));
    }
}

#[test]
fn smallest_pell_units_by_scan() {
    // x² - dy² = ±1 with the smallest positive y, found by scanning y.
    for d in 2i64..120 {
        let r = (d as f64).sqrt() as i64;
        if r * r == d {
            continue;
        }
        let eps = fundamental_unit(big(4 * d)).unwrap();
        let (x, y) = (1i64..)
            .find_map(|y| {
                [d * y * y + 1, d * y * y - 1].into_iter().find_map(|v| {
                    let s = (v as f64).sqrt().round() as i64;
                    (s * s == v).then_some((s, y))
                })
            })
            .unwrap();
        assert_eq!(eps, QuadInt::new(x, y, d).unwrap(), "d={d}");
    }
}

#[test]
fn convergents_of_sqrt_two() {
    let cf = ContinuedFraction::of_sqrt(2).unwrap();
    let got: Vec<_> = cf.convergents().take(6).collect();
    let want: Vec<_> = [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29), (99, 70)]
        .map(|(p, q)| (big(p), big(q)))
        .into();
    assert_eq!(got, want);
}

#[test]
fn domain_errors() {
    assert_eq!(isqrt(&big(-1)), Err(Error::NegativeRadicand));
    assert_eq!(QuadInt::new(1, 1, 4), Err(Error::InvalidRadicand));
    assert_eq!(
        fundamental_unit(big(16)),
        Err(Error::DegenerateDiscriminant)
    );
    assert_eq!(fundamental_unit(big(7)), Err(Error::NotADiscriminant));
    let (x, y) = (
        QuadInt::new(1, 1, 2).unwrap(),
        QuadInt::new(1, 1, 3).unwrap(),
    );
    assert_eq!(x.checked_mul(&y), Err(Error::RingMismatch));
}
