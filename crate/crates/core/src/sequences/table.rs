use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::kind::SequenceKind::{self, *};
use crate::quadarith::QuadInt;
use crate::{Error, Result};

/// Values of the five basic sequences, indexed from 0.
struct Basis {
    bal: Vec<BigInt>,
    cobal: Vec<BigInt>,
    lbal: Vec<BigInt>,
    lcobal: Vec<BigInt>,
    pell: Vec<BigInt>,
}

impl Basis {
    fn by_recurrence(len: usize) -> Self {
        fn second_order(len: usize, x0: i64, x1: i64, a: i64, b: i64, inc: i64) -> Vec<BigInt> {
            let mut v: Vec<BigInt> = Vec::with_capacity(len.max(2));
            v.push(x0.into());
            v.push(x1.into());
            while v.len() < len {
                let n = v.len();
                let next = a * &v[n - 1] + b * &v[n - 2] + inc;
                v.push(next);
            }
            v.truncate(len);
            v
        }
        Basis {
            bal: second_order(len, 0, 1, 6, -1, 0),
            // b₂ = 6·0 - 0 + 2, so the inhomogeneous recurrence already holds from n = 1.
            cobal: second_order(len, 0, 0, 6, -1, 2),
            lbal: second_order(len, 1, 3, 6, -1, 0),
            lcobal: second_order(len, -1, 1, 6, -1, 0),
            pell: second_order(len, 0, 1, 2, 1, 0),
        }
    }

    /// Reads every value off powers of α = 1 + √2. Index 0 of the
    /// cobalancing pair uses α⁻¹ = -1 + √2, the same extension that fixes
    /// c₀ = -1.
    fn by_binet(len: usize) -> Self {
        let alpha = alpha();
        let mut powers = Vec::with_capacity(2 * len + 1);
        powers.push(QuadInt::new(-1, 1, 2).expect("√2"));
        powers.push(QuadInt::one(2).expect("√2"));
        while powers.len() < 2 * len + 1 {
            let next = powers
                .last()
                .unwrap()
                .checked_mul(&alpha)
                .expect("same ring");
            powers.push(next);
        }
        // powers[k + 1] = α^k
        let pow = |k: usize| &powers[k + 1];
        let pow_odd = |n: usize| &powers[2 * n];
        Basis {
            bal: (0..len).map(|n| halve(pow(2 * n).q())).collect(),
            cobal: (0..len).map(|n| halve(&(pow_odd(n).q() - 1))).collect(),
            lbal: (0..len).map(|n| pow(2 * n).p().clone()).collect(),
            lcobal: (0..len).map(|n| pow_odd(n).p().clone()).collect(),
            pell: (0..len).map(|n| pow(n).q().clone()).collect(),
        }
    }

    fn get(&self, kind: SequenceKind, n: usize) -> &BigInt {
        match kind {
            Balancing => &self.bal[n],
            Cobalancing => &self.cobal[n],
            LucasBalancing => &self.lbal[n],
            LucasCobalancing => &self.lcobal[n],
            Pell => &self.pell[n],
            _ => unreachable!("not a basic kind"),
        }
    }
}

fn alpha() -> QuadInt {
    QuadInt::new(1, 1, 2).expect("√2")
}

fn halve(x: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero(), "Binet division is exact");
    q
}

/// The largest basic index the almost formulas read for index `k`.
fn basis_len(k_max: usize) -> usize {
    k_max + 3
}

/// Evaluates an almost kind at `k` from the basic sequences.
///
/// Interleaved kinds split `k` into the odd branch `k = 2n - 1` and the even
/// branch `k = 2n`; `k = 0` falls in the even branch with `n = 0`.
fn almost<'a>(
    kind: SequenceKind,
    k: usize,
    basis: impl Fn(SequenceKind, usize) -> &'a BigInt,
) -> BigInt {
    let (b, bb, c, cc) = (
        |n| basis(Balancing, n),
        |n| basis(Cobalancing, n),
        |n| basis(LucasBalancing, n),
        |n| basis(LucasCobalancing, n),
    );
    let odd = k % 2 == 1;
    let n = k.div_ceil(2);
    match kind {
        AlmostBalancingFirst => 3 * b(k),
        AlmostLucasBalancingFirst => 3 * c(k),
        AlmostBalancingSecond if odd => b(n - 1) + c(n - 1),
        AlmostBalancingSecond => c(n) - b(n),
        AlmostLucasBalancingSecond if odd => 8 * b(n - 1) + c(n - 1),
        AlmostLucasBalancingSecond => 8 * b(n) - c(n),
        AlmostCobalancingFirst if odd => 4 * bb(n) - bb(n - 1) + 1,
        AlmostCobalancingFirst => 2 * bb(n + 1) - bb(n),
        AlmostLucasCobalancingFirst if odd => cc(n + 1) - 2 * cc(n),
        AlmostLucasCobalancingFirst => cc(n + 2) - 4 * cc(n + 1),
        AlmostCobalancingSecond => 3 * bb(k) + 1,
        // 3c₀ would be -3; the stated base value is 3.
        AlmostLucasCobalancingSecond if k == 0 => BigInt::from(3),
        AlmostLucasCobalancingSecond => 3 * cc(k),
        _ => unreachable!("basic kind"),
    }
}

/// All thirteen sequences tabulated over `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    rows: Vec<Vec<BigInt>>,
}

impl SequenceTable {
    /// Basic kinds from their recurrences, almost kinds from those.
    pub fn by_recurrence(n_max: usize) -> Self {
        Self::from_basis(&Basis::by_recurrence(basis_len(n_max)), n_max)
    }

    /// Basic kinds from exact powers of `1 + √2`, almost kinds from those.
    pub fn by_binet(n_max: usize) -> Self {
        Self::from_basis(&Basis::by_binet(basis_len(n_max)), n_max)
    }

    fn from_basis(basis: &Basis, n_max: usize) -> Self {
        let rows = SequenceKind::ALL
            .iter()
            .map(|&kind| {
                (0..=n_max)
                    .map(|k| {
                        if kind.has_closed_form() {
                            basis.get(kind, k).clone()
                        } else {
                            almost(kind, k, |kind, n| basis.get(kind, n))
                        }
                    })
                    .collect()
            })
            .collect();
        SequenceTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn get(&self, kind: SequenceKind, n: usize) -> Option<&BigInt> {
        self.rows[kind.index()].get(n)
    }

    pub fn row(&self, kind: SequenceKind) -> &[BigInt] {
        &self.rows[kind.index()]
    }

    /// Swaps in a row computed elsewhere; it must cover `0..=n_max`.
    pub(crate) fn with_row(mut self, kind: SequenceKind, row: Vec<BigInt>) -> Self {
        assert_eq!(row.len(), self.n_max() + 1, "{kind} row length");
        self.rows[kind.index()] = row;
        self
    }
}

/// The `n`-th term of `kind`, from the recurrences.
pub fn term(kind: SequenceKind, n: u64) -> BigInt {
    terms(kind, n..=n).pop().expect("one term")
}

/// Terms `from..=to` of `kind`, from the recurrences.
pub fn terms(kind: SequenceKind, range: RangeInclusive<u64>) -> Vec<BigInt> {
    let (from, to) = (*range.start() as usize, *range.end() as usize);
    if from > to {
        return Vec::new();
    }
    let basis = Basis::by_recurrence(basis_len(to));
    (from..=to)
        .map(|k| {
            if kind.has_closed_form() {
                basis.get(kind, k).clone()
            } else {
                almost(kind, k, |kind, n| basis.get(kind, n))
            }
        })
        .collect()
}

/// The `n`-th term of a basic kind evaluated in `Z[√2]`.
///
/// With `α^k = p_k + q_k√2`: `B_n = q_{2n}/2`, `C_n = p_{2n}`,
/// `b_n = (q_{2n-1} - 1)/2`, `c_n = p_{2n-1}` and `P_n = q_n`.
pub fn term_binet(kind: SequenceKind, n: u64) -> Result<BigInt> {
    if !kind.has_closed_form() {
        return Err(Error::NoClosedForm);
    }
    if n == 0 {
        return Err(Error::UndefinedIndex);
    }
    let alpha = alpha();
    Ok(match kind {
        Balancing => halve(alpha.pow(2 * n).q()),
        LucasBalancing => alpha.pow(2 * n).p().clone(),
        Cobalancing => halve(&(alpha.pow(2 * n - 1).q() - BigInt::one())),
        LucasCobalancing => alpha.pow(2 * n - 1).p().clone(),
        Pell => alpha.pow(n).q().clone(),
        _ => unreachable!(),
    })
}
