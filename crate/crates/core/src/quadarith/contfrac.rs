use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sqrt::{isqrt, root_of_square};
use crate::{Error, Result};

/// The real number `(p + √d)/q`, kept in the normal form where `q` divides
/// `d - p²`. That form makes every complete quotient of the expansion again
/// integral in the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIrrational {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

/// One step of a continued-fraction expansion: the complete quotient
/// `(p + √d)/q` and its integer part `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub a: BigInt,
    pub p: BigInt,
    pub q: BigInt,
}

/// The unbounded sequence of [`Step`]s of a quadratic irrational.
#[derive(Clone, Debug)]
pub struct Expansion {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    root: BigInt,
}

impl QuadraticIrrational {
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut d, mut q) = (p.into(), d.into(), q.into());
        if !d.is_positive() || root_of_square(&d).is_some() {
            return Err(Error::InvalidRadicand);
        }
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            // (p + √d)/q = (p|q| + √(d q²))/(q|q|)
            let scale = q.abs();
            d *= &q * &q;
            p *= &scale;
            q *= &scale;
        }
        Ok(QuadraticIrrational { p, d, q })
    }

    /// `√d`.
    pub fn sqrt(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, d, 1)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn expansion(&self) -> Expansion {
        let root = isqrt(&self.d).expect("positive radicand");
        Expansion {
            p: self.p.clone(),
            q: self.q.clone(),
            d: self.d.clone(),
            root,
        }
    }

    pub fn continued_fraction(&self) -> ContinuedFraction {
        let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
        let mut terms = Vec::new();
        for step in self.expansion() {
            if let Some(&start) = seen.get(&(step.p.clone(), step.q.clone())) {
                return ContinuedFraction::from_terms(terms, start);
            }
            seen.insert((step.p, step.q), terms.len());
            terms.push(step.a);
        }
        unreachable!("the expansion is unbounded")
    }

    pub fn convergents(&self) -> Convergents<impl Iterator<Item = BigInt>> {
        Convergents::new(self.expansion().map(|s| s.a))
    }
}

impl Iterator for Expansion {
    type Item = Step;

    fn next(&mut self) -> Option<Step> {
        // √d is irrational, so ⌊(p + √d)/q⌋ only depends on ⌊p + √d⌋ = p + ⌊√d⌋.
        let top = &self.p + &self.root;
        let a = if self.q.is_positive() {
            top.div_floor(&self.q)
        } else {
            -top.div_floor(&-&self.q) - 1
        };
        let step = Step {
            a: a.clone(),
            p: self.p.clone(),
            q: self.q.clone(),
        };
        let p = &a * &self.q - &self.p;
        self.q = (&self.d - &p * &p) / &self.q;
        self.p = p;
        Some(step)
    }
}

/// An eventually periodic simple continued fraction
/// `[a0; preperiod..., period, period, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub a0: BigInt,
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

impl ContinuedFraction {
    fn from_terms(mut terms: Vec<BigInt>, start: usize) -> Self {
        let period: Vec<BigInt> = if start == 0 {
            // Purely periodic: pull a0 out and rotate it to the end of the cycle.
            let mut p = terms[1..].to_vec();
            p.push(terms[0].clone());
            terms.truncate(1);
            p
        } else {
            terms.split_off(start)
        };
        let a0 = terms.remove(0);
        ContinuedFraction {
            a0,
            preperiod: terms,
            period,
        }
    }

    /// Expansion of `√d`.
    pub fn of_sqrt(d: impl Into<BigInt>) -> Result<Self> {
        Ok(QuadraticIrrational::sqrt(d)?.continued_fraction())
    }

    /// All partial quotients, cycling the period forever.
    pub fn terms(&self) -> impl Iterator<Item = BigInt> + '_ {
        core::iter::once(self.a0.clone())
            .chain(self.preperiod.iter().cloned())
            .chain(self.period.iter().cycle().cloned())
    }

    pub fn convergents(&self) -> Convergents<impl Iterator<Item = BigInt> + '_> {
        Convergents::new(self.terms())
    }
}

/// Successive convergents `(p_k, q_k)` of a continued fraction.
#[derive(Clone, Debug)]
pub struct Convergents<I> {
    terms: I,
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
}

impl<I: Iterator<Item = BigInt>> Convergents<I> {
    pub fn new(terms: I) -> Self {
        Convergents {
            terms,
            prev: (BigInt::zero(), BigInt::one()),
            cur: (BigInt::one(), BigInt::zero()),
        }
    }
}

impl<I: Iterator<Item = BigInt>> Iterator for Convergents<I> {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<(BigInt, BigInt)> {
        let a = self.terms.next()?;
        let p = &a * &self.cur.0 + &self.prev.0;
        let q = &a * &self.cur.1 + &self.prev.1;
        self.prev = core::mem::replace(&mut self.cur, (p, q));
        Some(self.cur.clone())
    }
}
