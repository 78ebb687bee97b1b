use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::form::{OrbitMatrix, QuadraticForm};
use crate::quadarith::{fundamental_unit, isqrt, root_of_square, QuadInt, QuadraticIrrational};
use crate::{Error, Result};

/// A solution row `(x, y)`.
pub type Row = (BigInt, BigInt);

/// Beyond this many candidate `y₀` the representative search switches from
/// scanning to solving `s² - Δy² = 4am` by continued fractions.
const SCAN_LIMIT: u64 = 100_000;

/// The representative bound `U`, held exactly as `U² = num/den`.
///
/// With `τ` of norm one and trace `T = τ + 1/τ`,
/// `U² = |am|·τ/Δ·(1 ∓ 1/τ)² = |am|·(T ∓ 2)/Δ`, taking `-` when `am > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepBound {
    num: BigInt,
    den: BigInt,
}

impl RepBound {
    pub(crate) fn new(form: &QuadraticForm, m: &BigInt, tau: &QuadInt) -> Result<Self> {
        let am = form.a() * m;
        if am.is_zero() {
            return Err(Error::DegenerateRightHandSide);
        }
        let shift = if am.is_positive() { -2 } else { 2 };
        let num = am.abs() * (tau.trace() + shift);
        Ok(RepBound {
            num,
            den: form.discriminant().value().clone(),
        })
    }

    /// `(num, den)` with `U² = num/den`.
    pub fn squared(&self) -> (&BigInt, &BigInt) {
        (&self.num, &self.den)
    }

    /// `⌊U⌋`, exact.
    pub fn floor(&self) -> BigInt {
        isqrt(&(&self.num / &self.den)).expect("U² ≥ 0")
    }

    /// `y ≤ U`.
    pub fn admits(&self, y: &BigInt) -> bool {
        y * y * &self.den <= self.num
    }
}

/// Rows `[x₀ y₀]` with `0 ≤ y₀ ≤ U` and `F(x₀, y₀) = m`, by testing whether
/// `Δy₀² + 4am` is a square. Both signs of the root are kept, so two rows
/// of the same orbit can both appear.
pub(crate) fn scan(form: &QuadraticForm, m: &BigInt, bound: &RepBound) -> Vec<Row> {
    let delta = form.discriminant().value();
    let four_am = 4 * form.a() * m;
    let two_a = 2 * form.a();
    let top = bound.floor();
    let mut out = Vec::new();
    let mut y = BigInt::zero();
    while y <= top {
        if let Some(s) = root_of_square(&(delta * &y * &y + &four_am)) {
            let by = form.b() * &y;
            let tops = if s.is_zero() {
                [Some(-&by), None]
            } else {
                [Some(&s - &by), Some(-&s - &by)]
            };
            for t in tops.into_iter().flatten() {
                let (x, r) = t.div_rem(&two_a);
                if r.is_zero() {
                    out.push((x, y.clone()));
                }
            }
        }
        y += 1u32;
    }
    out
}

/// Fundamental solutions of `s² - Dy² = ±1`.
fn unit_solutions(d: &BigInt, n: &BigInt) -> Vec<Row> {
    if n.is_one() {
        return alloc::vec![(BigInt::one(), BigInt::zero())];
    }
    // Z[√D]: the fundamental unit of discriminant 4D.
    let eps = fundamental_unit(4 * d).expect("D is a positive non-square");
    if eps.norm().is_one() {
        Vec::new()
    } else {
        alloc::vec![(eps.p().clone(), eps.q().clone())]
    }
}

/// One solution of `s² - Dy² = n` with `gcd(s, y) = 1` per class, following
/// the continued-fraction method of Lagrange, Matthews and Mollin: for each
/// `z² ≡ D (mod |n|)` with `-|n|/2 < z ≤ |n|/2`, expand `(z + √D)/|n|` and
/// stop at the first complete quotient with denominator ±1 that yields a
/// solution.
fn primitive_solutions(d: &BigInt, n: &BigInt) -> Vec<Row> {
    if n.abs().is_one() {
        return unit_solutions(d, n);
    }
    let abs_n = n.abs();
    let mut out = Vec::new();
    let mut z = -(&abs_n - 1u32) / 2;
    let z_max = &abs_n / 2;
    while z <= z_max {
        let r: BigInt = &z * &z - d;
        if r.is_multiple_of(&abs_n) {
            if let Some(sol) = solve_class(d, n, &abs_n, &z) {
                out.push(sol);
            }
        }
        z += 1u32;
    }
    out
}

fn solve_class(d: &BigInt, n: &BigInt, abs_n: &BigInt, z: &BigInt) -> Option<Row> {
    let x = QuadraticIrrational::new(z.clone(), d.clone(), abs_n.clone()).expect("normal form");
    debug_assert_eq!(x.q(), abs_n);
    let mut seen = alloc::collections::BTreeMap::new();
    let (mut a_prev, mut a_cur) = (BigInt::zero(), BigInt::one());
    let (mut b_prev, mut b_cur) = (BigInt::one(), BigInt::zero());
    let mut end: Option<usize> = None;
    for (i, step) in x.expansion().enumerate() {
        // Run the preperiod and two full periods.
        match seen.get(&(step.p.clone(), step.q.clone())) {
            Some(&first) if end.is_none() => end = Some(i + (i - first)),
            Some(_) => {}
            None => {
                seen.insert((step.p.clone(), step.q.clone()), i);
            }
        }
        if end.is_some_and(|e| i >= e) {
            return None;
        }
        let a_next = &step.a * &a_cur + &a_prev;
        let b_next = &step.a * &b_cur + &b_prev;
        a_prev = core::mem::replace(&mut a_cur, a_next);
        b_prev = core::mem::replace(&mut b_cur, b_next);
        let p_next = &step.a * &step.q - &step.p;
        let q_next = (d - &p_next * &p_next) / &step.q;
        if q_next.abs().is_one() {
            let s = abs_n * &a_cur - z * &b_cur;
            if &s * &s - d * &b_cur * &b_cur == *n {
                return Some((s, b_cur));
            }
        }
    }
    None
}

/// Every solution class of `s² - Dy² = n`, from the primitive solutions of
/// `n/f²` for each square `f²` dividing `n`.
fn norm_solutions(d: &BigInt, n: &BigInt) -> Vec<Row> {
    let mut out = Vec::new();
    let mut f = BigInt::one();
    while &f * &f <= n.abs() {
        let (q, r) = n.div_rem(&(&f * &f));
        if r.is_zero() {
            out.extend(
                primitive_solutions(d, &q)
                    .into_iter()
                    .map(|(s, y)| (&f * s, &f * y)),
            );
        }
        f += 1u32;
    }
    out
}

/// The orbit point with least `|y|`, sign-normalised to `y ≥ 0`.
fn minimal_in_orbit(row: Row, m: &OrbitMatrix) -> Row {
    let mut best = row.clone();
    for step in [m.clone(), m.inverse()] {
        let (mut x, mut y) = row.clone();
        loop {
            let (x2, y2) = step.apply(&x, &y);
            if y2.abs() > y.abs() {
                break;
            }
            (x, y) = (x2, y2);
            if y.abs() < best.1.abs() {
                best = (x.clone(), y.clone());
            }
        }
    }
    if best.1.is_negative() {
        best = (-best.0, -best.1);
    }
    best
}

/// Representatives for forms whose bound is too large to scan. Each class
/// of `s² - Δy² = 4am` is converted to `x = (s - by)/(2a)` and moved to its
/// least-`|y|` point, which lies below `U`.
pub(crate) fn by_norm_equation(form: &QuadraticForm, m: &BigInt, matrix: &OrbitMatrix) -> Vec<Row> {
    let delta = form.discriminant().value();
    let n = 4 * form.a() * m;
    let two_a = 2 * form.a();
    let mut out: Vec<Row> = Vec::new();
    for (s, y) in norm_solutions(delta, &n) {
        for (s, y) in [
            (s.clone(), y.clone()),
            (-&s, -&y),
            (s.clone(), -&y),
            (-&s, y.clone()),
        ] {
            let t: BigInt = &s - form.b() * &y;
            let (x, r) = t.div_rem(&two_a);
            if r.is_zero() {
                let row = minimal_in_orbit((x, y), matrix);
                if !out.contains(&row) {
                    out.push(row);
                }
            }
        }
    }
    out.sort_by(|p, q| (&p.1, &p.0).cmp(&(&q.1, &q.0)));
    out
}

pub(crate) fn representatives_with(
    form: &QuadraticForm,
    m: &BigInt,
    bound: &RepBound,
    matrix: &OrbitMatrix,
) -> Vec<Row> {
    let reps = if bound.floor() <= BigInt::from(SCAN_LIMIT) {
        scan(form, m, bound)
    } else {
        by_norm_equation(form, m, matrix)
    };
    for (x, y) in &reps {
        assert_eq!(&form.eval(x, y), m, "representative ({x}, {y}) fails F = m");
        debug_assert!(bound.admits(y));
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pellsolver::orbit_matrix;
    use crate::quadarith::tau;

    fn form(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::new(a, b, c).unwrap()
    }

    fn bound(f: &QuadraticForm, m: i64) -> RepBound {
        RepBound::new(
            f,
            &m.into(),
            &tau(f.discriminant().value().clone()).unwrap(),
        )
        .unwrap()
    }

    fn rows(v: &[(i64, i64)]) -> Vec<Row> {
        v.iter().map(|&(x, y)| (x.into(), y.into())).collect()
    }

    #[test]
    fn exact_bounds() {
        let cases = [
            ((8, 0, -1), -9, 18, 4),
            ((2, 0, -1), -7, 14, 3),
            ((8, 0, -1), 7, 7, 2),
            ((2, 0, -1), 9, 9, 3),
        ];
        for ((a, b, c), m, u2, floor) in cases {
            let f = form(a, b, c);
            let u = bound(&f, m);
            let (num, den) = u.squared();
            assert_eq!(num / den, BigInt::from(u2));
            assert!((num % den).is_zero());
            assert_eq!(u.floor(), BigInt::from(floor));
        }
        // y₀ = 3 sits exactly on the bound for 2x² - y² = 9.
        assert!(bound(&form(2, 0, -1), 9).admits(&3.into()));
        assert!(!bound(&form(2, 0, -1), 9).admits(&4.into()));
    }

    #[test]
    fn zero_right_hand_side() {
        let f = form(8, 0, -1);
        let t = tau(32).unwrap();
        assert_eq!(
            RepBound::new(&f, &BigInt::zero(), &t),
            Err(Error::DegenerateRightHandSide)
        );
    }

    #[test]
    fn representatives_of_the_four_equations() {
        let cases = [
            ((8, 0, -1), -9, rows(&[(0, 3)])),
            ((8, 0, -1), 7, rows(&[(1, 1), (-1, 1)])),
            ((2, 0, -1), -7, rows(&[(1, 3), (-1, 3)])),
            ((2, 0, -1), 9, rows(&[(3, 3), (-3, 3)])),
            ((8, 0, -1), 1, rows(&[])),
        ];
        for ((a, b, c), m, want) in cases {
            let f = form(a, b, c);
            assert_eq!(scan(&f, &m.into(), &bound(&f, m)), want, "{f} = {m}");
        }
    }

    #[test]
    fn norm_equation_agrees_with_scan_up_to_orbits() {
        for (a, b, c, m) in [
            (8, 0, -1, -9),
            (8, 0, -1, 7),
            (2, 0, -1, -7),
            (2, 0, -1, 9),
            (3, 5, -7, 11),
            (-2, 3, 4, -5),
        ] {
            let f = form(a, b, c);
            let mat = orbit_matrix(&f).unwrap();
            let m = BigInt::from(m);
            let u = bound(&f, i64::try_from(&m).unwrap());
            let mut from_scan: Vec<Row> = scan(&f, &m, &u)
                .into_iter()
                .map(|r| minimal_in_orbit(r, &mat))
                .collect();
            from_scan.sort_by(|p, q| (&p.1, &p.0).cmp(&(&q.1, &q.0)));
            from_scan.dedup();
            assert_eq!(by_norm_equation(&f, &m, &mat), from_scan, "{f} = {m}");
        }
    }

    #[test]
    fn large_bound_uses_norm_equation() {
        // Δ = 409 has a fundamental unit near 10²², putting U around 10¹¹.
        let f = form(-10, -3, 10);
        let m = BigInt::from(-28);
        let t = tau(409).unwrap();
        let u = RepBound::new(&f, &m, &t).unwrap();
        assert!(u.floor() > BigInt::from(SCAN_LIMIT));
        let mat = orbit_matrix(&f).unwrap();
        for (x, y) in representatives_with(&f, &m, &u, &mat) {
            assert_eq!(f.eval(&x, &y), m);
            assert!(u.admits(&y));
        }
    }
}
