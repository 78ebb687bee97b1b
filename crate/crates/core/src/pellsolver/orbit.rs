use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::form::{orbit_matrix_with, OrbitMatrix, QuadraticForm};
use super::reps::{representatives_with, RepBound, Row};
use crate::quadarith::{root_of_square, tau, QuadInt};
use crate::Result;

/// How many solutions to produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    /// The first `n` solutions with `x > 0` and `y > 0`.
    Count(usize),
    /// Every solution with `|x| ≤ X`.
    XBound(BigInt),
}

/// Which of `±[x₀ y₀]Mⁿ` a solution came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A solution `(x, y)` of `F(x, y) = m`, equal to
/// `sign · [x₀ y₀]·M^exponent` for representative number `representative`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    pub x: BigInt,
    pub y: BigInt,
    pub representative: usize,
    pub exponent: i64,
    pub sign: Sign,
}

/// Solutions ordered by `|x|`, then `x`, then `y`, without repeats.
#[derive(Clone, Debug)]
pub struct SolutionStream {
    inner: alloc::vec::IntoIter<Solution>,
}

impl Iterator for SolutionStream {
    type Item = Solution;

    fn next(&mut self) -> Option<Solution> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for SolutionStream {}

/// Solver for `F(x, y) = m`: the unit `τ`, orbit matrix `M`, bound `U` and
/// representatives are fixed at construction; every solution is
/// `±[x₀ y₀]Mⁿ` for some representative and `n ∈ Z`.
#[derive(Clone, Debug)]
pub struct PellSolver {
    form: QuadraticForm,
    m: BigInt,
    tau: QuadInt,
    matrix: OrbitMatrix,
    inverse: OrbitMatrix,
    bound: RepBound,
    reps: Vec<Row>,
}

type Key = (BigInt, BigInt, BigInt);

fn key(x: &BigInt, y: &BigInt) -> Key {
    (x.abs(), x.clone(), y.clone())
}

impl PellSolver {
    pub fn new(form: QuadraticForm, m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        let tau = tau(form.discriminant().value().clone())?;
        let bound = RepBound::new(&form, &m, &tau)?;
        let matrix = orbit_matrix_with(&form, &tau);
        let inverse = matrix.inverse();
        let reps = representatives_with(&form, &m, &bound, &matrix);
        Ok(PellSolver {
            form,
            m,
            tau,
            matrix,
            inverse,
            bound,
            reps,
        })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn tau(&self) -> &QuadInt {
        &self.tau
    }

    pub fn matrix(&self) -> &OrbitMatrix {
        &self.matrix
    }

    pub fn bound(&self) -> &RepBound {
        &self.bound
    }

    pub fn representatives(&self) -> &[Row] {
        &self.reps
    }

    pub fn solutions(&self, limit: &Limit) -> SolutionStream {
        let found: Vec<Solution> = match limit {
            Limit::XBound(x) => self.within(x).into_values().collect(),
            Limit::Count(n) => self.first_positive(*n),
        };
        for s in &found {
            assert_eq!(
                self.form.eval(&s.x, &s.y),
                self.m,
                "solution ({}, {}) fails F = m",
                s.x,
                s.y
            );
        }
        SolutionStream {
            inner: found.into_iter(),
        }
    }

    /// Walks `[x₀ y₀]Mⁿ` for `n = 0, 1, 2, ...` (forward) or
    /// `n = -1, -2, ...` (backward), calling `visit` until `|x|` exceeds
    /// `x_max` while no longer decreasing. `|x_n|` is unimodal along an
    /// orbit (a combination of `τⁿ` and `τ⁻ⁿ`), so nothing within the bound
    /// lies beyond that point.
    fn walk(
        &self,
        rep: &Row,
        forward: bool,
        x_max: &BigInt,
        mut visit: impl FnMut(i64, &BigInt, &BigInt),
    ) {
        let step = if forward { &self.matrix } else { &self.inverse };
        let (mut x, mut y) = rep.clone();
        let mut n: i64 = 0;
        if !forward {
            (x, y) = step.apply(&x, &y);
            n = -1;
        }
        let mut prev: Option<BigInt> = None;
        loop {
            let ax = x.abs();
            if &ax <= x_max {
                visit(n, &x, &y);
            } else if prev.as_ref().is_some_and(|p| ax >= *p) {
                break;
            }
            prev = Some(ax);
            (x, y) = step.apply(&x, &y);
            n += if forward { 1 } else { -1 };
        }
    }

    fn within(&self, x_max: &BigInt) -> BTreeMap<Key, Solution> {
        let mut out = BTreeMap::new();
        for (i, rep) in self.reps.iter().enumerate() {
            for forward in [true, false] {
                self.walk(rep, forward, x_max, |n, x, y| {
                    for (sign, x, y) in [(Sign::Plus, x.clone(), y.clone()), (Sign::Minus, -x, -y)]
                    {
                        out.entry(key(&x, &y)).or_insert(Solution {
                            x,
                            y,
                            representative: i,
                            exponent: n,
                            sign,
                        });
                    }
                });
            }
        }
        out
    }

    /// For the walk from `rep`: the point where `|x|` and `|y|` have both
    /// started growing, after which the signs of `x` and `y` never change,
    /// and the largest `|x|` met before it.
    fn tail(&self, rep: &Row, forward: bool) -> ((BigSign, BigSign), BigInt) {
        let step = if forward { &self.matrix } else { &self.inverse };
        let (mut x, mut y) = rep.clone();
        let mut largest = x.abs();
        let (mut x_grew, mut y_grew) = (false, false);
        loop {
            let (x2, y2) = step.apply(&x, &y);
            x_grew |= x2.abs() > x.abs();
            y_grew |= y2.abs() > y.abs();
            (x, y) = (x2, y2);
            largest = largest.max(x.abs());
            if x_grew && y_grew {
                return ((x.sign(), y.sign()), largest);
            }
        }
    }

    fn first_positive(&self, n: usize) -> Vec<Solution> {
        if n == 0 {
            return Vec::new();
        }
        let positive = |s: &Solution| s.x.is_positive() && s.y.is_positive();
        let mut infinite = false;
        let mut finite_bound = BigInt::zero();
        for rep in &self.reps {
            for forward in [true, false] {
                let ((sx, sy), largest) = self.tail(rep, forward);
                infinite |= sx == sy;
                finite_bound = finite_bound.max(largest);
            }
        }
        if !infinite {
            return self
                .within(&finite_bound)
                .into_values()
                .filter(positive)
                .take(n)
                .collect();
        }
        let mut x_max = self
            .reps
            .iter()
            .map(|r| r.0.abs())
            .max()
            .unwrap_or_default()
            .max(BigInt::from(16));
        loop {
            let found: Vec<Solution> = self.within(&x_max).into_values().filter(positive).collect();
            if found.len() >= n {
                return found.into_iter().take(n).collect();
            }
            x_max = &x_max * &x_max;
        }
    }
}

/// `U`, exactly, for `F(x, y) = m`.
pub fn rep_bound(form: &QuadraticForm, m: &BigInt) -> Result<RepBound> {
    RepBound::new(form, m, &tau(form.discriminant().value().clone())?)
}

/// One representative row per orbit (possibly several), `0 ≤ y₀ ≤ U`.
pub fn representatives(form: &QuadraticForm, m: &BigInt) -> Result<Vec<Row>> {
    Ok(PellSolver::new(form.clone(), m.clone())?.reps)
}

pub fn solutions(form: &QuadraticForm, m: &BigInt, limit: &Limit) -> Result<SolutionStream> {
    Ok(PellSolver::new(form.clone(), m.clone())?.solutions(limit))
}

/// All solutions with `|x| ≤ bound`, by solving the quadratic in `y` for
/// every `x` in the window.
pub fn brute_force_solutions(form: &QuadraticForm, m: &BigInt, bound: u64) -> BTreeSet<Row> {
    let (b, c) = (form.b(), form.c());
    let delta = form.discriminant().value();
    let two_c = 2 * c;
    let mut out = BTreeSet::new();
    let bound = i64::try_from(bound).unwrap_or(i64::MAX);
    for x in -bound..=bound {
        let x = BigInt::from(x);
        // c·y² + bx·y + (ax² - m) = 0 has discriminant Δx² + 4cm.
        let Some(s) = root_of_square(&(delta * &x * &x + 4 * c * m)) else {
            continue;
        };
        for t in [-(b * &x) + &s, -(b * &x) - &s] {
            let (y, r) = t.div_rem(&two_c);
            if r.is_zero() {
                debug_assert_eq!(&form.eval(&x, &y), m);
                out.insert((x.clone(), y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::new(a, b, c).unwrap()
    }

    fn pairs(s: SolutionStream) -> Vec<(i64, i64)> {
        s.map(|s| (i64::try_from(&s.x).unwrap(), i64::try_from(&s.y).unwrap()))
            .collect()
    }

    fn first(a: i64, b: i64, c: i64, m: i64, n: usize) -> Vec<(i64, i64)> {
        pairs(solutions(&form(a, b, c), &m.into(), &Limit::Count(n)).unwrap())
    }

    fn set(v: &[(i64, i64)]) -> BTreeSet<Row> {
        v.iter().map(|&(x, y)| (x.into(), y.into())).collect()
    }

    #[test]
    fn almost_balancing_equations() {
        assert_eq!(first(8, 0, -1, -9, 3), [(3, 9), (18, 51), (105, 297)]);
        assert_eq!(
            first(8, 0, -1, 7, 5),
            [(1, 1), (2, 5), (4, 11), (11, 31), (23, 65)]
        );
        assert_eq!(first(2, 0, -1, -7, 4), [(1, 3), (3, 5), (9, 13), (19, 27)]);
        assert_eq!(first(2, 0, -1, 9, 3), [(3, 3), (15, 21), (87, 123)]);
    }

    #[test]
    fn bounded_window_order_and_tags() {
        let s: Vec<_> = solutions(&form(8, 0, -1), &BigInt::from(-9), &Limit::XBound(3.into()))
            .unwrap()
            .collect();
        let xy: Vec<_> = s
            .iter()
            .map(|s| (i64::try_from(&s.x).unwrap(), i64::try_from(&s.y).unwrap()))
            .collect();
        assert_eq!(xy, [(0, -3), (0, 3), (-3, -9), (-3, 9), (3, -9), (3, 9)]);
        let origin = s
            .iter()
            .find(|s| s.x.is_zero() && s.y.is_positive())
            .unwrap();
        assert_eq!(
            (origin.representative, origin.exponent, origin.sign),
            (0, 0, Sign::Plus)
        );
        let next = s
            .iter()
            .find(|s| s.x == BigInt::from(3) && s.y == BigInt::from(9))
            .unwrap();
        assert_eq!((next.exponent, next.sign), (1, Sign::Plus));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_solutions(&form(8, 0, -1), &BigInt::from(-9), 10),
            set(&[(0, 3), (0, -3), (3, 9), (3, -9), (-3, 9), (-3, -9)])
        );
        assert_eq!(
            brute_force_solutions(&form(8, 0, -1), &BigInt::from(7), 5),
            set(&[
                (1, 1),
                (1, -1),
                (-1, 1),
                (-1, -1),
                (2, 5),
                (2, -5),
                (-2, 5),
                (-2, -5),
                (4, 11),
                (4, -11),
                (-4, 11),
                (-4, -11)
            ])
        );
    }

    #[test]
    fn finite_positive_set() {
        // With x, y ≥ 1 the left side is at least 5, so (1, 1) is the only
        // positive solution even though the orbits are infinite.
        assert_eq!(first(1, 3, 1, 5, 4), [(1, 1)]);
        assert_eq!(first(1, 4, 1, 1, 4), []);
    }

    #[test]
    fn orbit_closure() {
        for (a, b, c, m) in [
            (8, 0, -1, -9),
            (8, 0, -1, 7),
            (2, 0, -1, -7),
            (2, 0, -1, 9),
            (3, 5, -7, 11),
        ] {
            let solver = PellSolver::new(form(a, b, c), m).unwrap();
            for (x0, y0) in solver.representatives() {
                for n in -8..=8 {
                    let (x, y) = solver.matrix().pow(n).apply(x0, y0);
                    assert_eq!(solver.form().eval(&x, &y), BigInt::from(m));
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_small_forms() {
        for (a, b, c, m) in [
            (3, 5, -7, 11),
            (-2, 3, 4, -5),
            (1, 1, -1, 1),
            (5, -1, -3, 9),
            (1, 0, -13, -1),
        ] {
            let f = form(a, b, c);
            let m = BigInt::from(m);
            let ours: BTreeSet<Row> = solutions(&f, &m, &Limit::XBound(2000.into()))
                .unwrap()
                .map(|s| (s.x, s.y))
                .collect();
            assert_eq!(ours, brute_force_solutions(&f, &m, 2000), "{f} = {m}");
        }
    }
}
