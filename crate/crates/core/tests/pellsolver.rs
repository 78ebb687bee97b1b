mod common;

use std::collections::BTreeSet;

use balance_forge_core::pellsolver::{
    representatives, solutions, Limit, PellSolver, QuadraticForm, Sign,
};
use balance_forge_core::{BigInt, Error};
use common::{big, pell_brute};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Random indefinite forms with a non-zero right-hand side.
fn problem() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-12i64..=12, -12i64..=12, -12i64..=12, -60i64..=60)
        .prop_filter("indefinite, m ≠ 0", |&(a, b, c, m)| {
            m != 0 && QuadraticForm::new(a, b, c).is_ok()
        })
}

fn as_i128(s: &(BigInt, BigInt)) -> (i128, i128) {
    (i128::try_from(&s.0).unwrap(), i128::try_from(&s.1).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn xbound_mode_matches_brute_force((a, b, c, m) in problem(), bound in 1i64..400) {
        let form = QuadraticForm::new(a, b, c).unwrap();
        let got: BTreeSet<_> = solutions(&form, &big(m), &Limit::XBound(big(bound)))
            .unwrap()
            .map(|s| as_i128(&(s.x, s.y)))
            .collect();
        prop_assert_eq!(got, pell_brute(a, b, c, m, bound));
    }

    #[test]
    fn stream_is_ordered_and_tagged((a, b, c, m) in problem()) {
        let form = QuadraticForm::new(a, b, c).unwrap();
        let solver = PellSolver::new(form.clone(), m).unwrap();
        let sols: Vec<_> = solver.solutions(&Limit::XBound(big(5_000))).collect();
        let keys: Vec<_> = sols.iter().map(|s| (s.x.abs(), s.x.clone(), s.y.clone())).collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        for s in &sols {
            prop_assert_eq!(form.eval(&s.x, &s.y), big(m));
            let (x0, y0) = &solver.representatives()[s.representative];
            let (x, y) = solver.matrix().pow(s.exponent).apply(x0, y0);
            let (x, y) = match s.sign {
                Sign::Plus => (x, y),
                Sign::Minus => (-x, -y),
            };
            prop_assert_eq!((&x, &y), (&s.x, &s.y));
        }
    }

    #[test]
    fn the_orbit_matrix_preserves_solutions((a, b, c, m) in problem()) {
        let form = QuadraticForm::new(a, b, c).unwrap();
        let solver = PellSolver::new(form.clone(), m).unwrap();
        prop_assert_eq!(solver.matrix().det(), big(1));
        for (x, y) in solver.representatives() {
            prop_assert_eq!(form.eval(x, y), big(m));
            prop_assert!(!y.is_negative() && solver.bound().admits(y));
            for e in [-2, -1, 1, 2] {
                let (u, v) = solver.matrix().pow(e).apply(x, y);
                prop_assert_eq!(form.eval(&u, &v), big(m));
            }
        }
    }

    #[test]
    fn count_mode_gives_increasing_positive_solutions((a, b, c, m) in problem(), n in 1usize..8) {
        let form = QuadraticForm::new(a, b, c).unwrap();
        let got: Vec<_> = solutions(&form, &big(m), &Limit::Count(n)).unwrap().collect();
        prop_assert!(got.len() <= n);
        prop_assert!(got.iter().all(|s| s.x.is_positive() && s.y.is_positive()));
        prop_assert!(got.windows(2).all(|w| (&w[0].x, &w[0].y) < (&w[1].x, &w[1].y)));
        // Below a brute-force window, the positive solutions are exactly the prefix.
        if let Some(last) = got.last() {
            let cap = i64::try_from(&last.x).map_or(200_000, |x| x.min(200_000));
            let mut want: Vec<_> = pell_brute(a, b, c, m, cap).into_iter().filter(|&(x, y)| x > 0 && y > 0).collect();
            want.truncate(n);
            let got: Vec<_> = got
                .iter()
                .filter(|s| s.x <= big(cap))
                .map(|s| as_i128(&(s.x.clone(), s.y.clone())))
                .collect();
            prop_assert_eq!(want, got);
        }
    }
}

#[test]
fn large_rep_bound_uses_the_norm_equation() {
    // The fundamental unit of ℤ[√991] has 30 digits, so ⌊U⌋ is far past any scan.
    let form = QuadraticForm::new(1, 0, -991).unwrap();
    let m = big(33);
    let reps = representatives(&form, &m).unwrap();
    let solver = PellSolver::new(form.clone(), m.clone()).unwrap();
    assert!(solver.bound().floor() > big(100_000));
    for (x, y) in &reps {
        assert_eq!(form.eval(x, y), m);
    }
    let got: BTreeSet<_> = solutions(&form, &m, &Limit::XBound(big(20_000)))
        .unwrap()
        .map(|s| as_i128(&(s.x, s.y)))
        .collect();
    assert_eq!(got, pell_brute(1, 0, -991, 33, 20_000));
}

#[test]
fn equations_without_solutions_yield_nothing() {
    let form = QuadraticForm::new(1, 0, -3).unwrap();
    assert!(representatives(&form, &big(2)).unwrap().is_empty());
    assert_eq!(
        solutions(&form, &big(2), &Limit::Count(5)).unwrap().len(),
        0
    );
}

#[test]
fn invalid_problems() {
    assert_eq!(
        QuadraticForm::new(1, 2, 1).unwrap_err(),
        Error::DegenerateDiscriminant
    );
    assert_eq!(
        PellSolver::new(QuadraticForm::new(8, 0, -1).unwrap(), 0).unwrap_err(),
        Error::DegenerateRightHandSide
    );
    assert!(BigInt::zero().is_zero());
}
