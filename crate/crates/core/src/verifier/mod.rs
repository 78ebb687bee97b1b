//! A catalog of identities between the thirteen sequences, checked with
//! exact arithmetic.
//!
//! Each identity is a chain of expressions that must agree at every index of
//! its range, or (for the four Pell-type equations) a comparison of solver
//! output with the stated solution families. Every check runs against three
//! independently built term tables: the recurrences, powers of `1 + √2`, and
//! a table whose almost rows are read off the solver's solutions. The
//! theorems relating almost numbers to the basic ones are therefore not
//! tautologies on the third route.
//!
//! Ids are grouped by prefix (`teo6.bstar_odd` is in group `teo6`). Entries
//! in the `balrel` group and `baa12.B_printed` are candidates: they are
//! reported, but a failing candidate does not fail a run.

mod catalog;
mod source;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use self::catalog::{catalog, reach, solution_families, Check, Identity, Span, Val, T};
use self::source::Routed;
pub use self::source::{PellEquation, Route, TermSource};
use crate::pellsolver::Row;
use crate::{Error, Result};

/// Solutions per equation compared by default.
pub const DEFAULT_PELL_COUNT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The first index at which two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub index: u64,
    pub route: Route,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VerificationReport {
    pub id: String,
    /// Inclusive index range; empty when `range.0 > range.1`.
    pub range: (u64, u64),
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub candidate: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// True when every non-candidate report passed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports
        .iter()
        .filter(|r| !r.candidate)
        .all(VerificationReport::passed)
}

/// Every id in the catalog, in catalog order.
pub fn catalog_ids() -> Vec<&'static str> {
    catalog().iter().map(|i| i.id).collect()
}

/// Holds the three term tables and the solver's positive solutions, sized
/// for `n_max` and `pell_count`.
pub struct Verifier {
    n_max: u64,
    pell_count: usize,
    routes: Vec<Routed>,
    positives: Vec<(PellEquation, Vec<Row>)>,
    catalog: Vec<Identity>,
}

impl Verifier {
    pub fn new(n_max: u64, pell_count: usize) -> Result<Self> {
        if n_max == 0 || pell_count == 0 {
            return Err(Error::ArgumentsNotPositive);
        }
        let len = Self::table_len(n_max, pell_count);
        let routes = Route::BUILTIN
            .iter()
            .map(|&r| Routed::build(r, len))
            .collect();
        let positives = PellEquation::ALL
            .iter()
            .map(|&eq| (eq, eq.positive_solutions(pell_count)))
            .collect();
        Ok(Verifier {
            n_max,
            pell_count,
            routes,
            positives,
            catalog: catalog(),
        })
    }

    /// Largest index a source must answer for.
    pub fn table_len(n_max: u64, pell_count: usize) -> usize {
        (reach(n_max) as usize).max(pell_count + 2)
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn pell_count(&self) -> usize {
        self.pell_count
    }

    /// The identities picked by `selector`: `all`, a group prefix such as
    /// `teo6`, or a full id.
    fn select(&self, selector: &str) -> Result<Vec<&Identity>> {
        let picked: Vec<&Identity> = self
            .catalog
            .iter()
            .filter(|i| {
                selector == "all"
                    || i.id == selector
                    || i.id
                        .split_once('.')
                        .is_some_and(|(group, _)| group == selector)
            })
            .collect();
        if picked.is_empty() {
            Err(Error::NoSuchIdentity)
        } else {
            Ok(picked)
        }
    }

    pub fn verify(&self, id: &str) -> Result<VerificationReport> {
        let identity = self
            .catalog
            .iter()
            .find(|i| i.id == id)
            .ok_or(Error::NoSuchIdentity)?;
        Ok(self.run(identity, self.routes.iter().map(|r| r as &dyn TermSource)))
    }

    pub fn verify_matching(&self, selector: &str) -> Result<Vec<VerificationReport>> {
        Ok(self
            .select(selector)?
            .into_iter()
            .map(|i| self.run(i, self.routes.iter().map(|r| r as &dyn TermSource)))
            .collect())
    }

    pub fn verify_all(&self) -> Vec<VerificationReport> {
        self.verify_matching("all").expect("catalog is non-empty")
    }

    /// Checks the selected identities against a single caller-supplied
    /// source, which must answer indices up to [`Verifier::table_len`].
    pub fn verify_with(
        &self,
        source: &dyn TermSource,
        selector: &str,
    ) -> Result<Vec<VerificationReport>> {
        Ok(self
            .select(selector)?
            .into_iter()
            .map(|i| self.run(i, core::iter::once(source)))
            .collect())
    }

    fn range(&self, identity: &Identity) -> (u64, u64) {
        match (&identity.check, identity.span) {
            (Check::SolutionSet(_), _) => (1, self.pell_count as u64),
            (_, Span::From(lo)) => (lo, self.n_max),
            (_, Span::Fixed(lo, hi)) => (lo, hi),
        }
    }

    fn run<'s>(
        &self,
        identity: &Identity,
        sources: impl Iterator<Item = &'s dyn TermSource>,
    ) -> VerificationReport {
        let range = self.range(identity);
        let mut counterexample = None;
        for source in sources {
            counterexample = match &identity.check {
                Check::Chain(sides) => first_mismatch(sides, source, range),
                Check::SolutionSet(eq) => self.solution_mismatch(*eq, source),
            };
            if counterexample.is_some() {
                break;
            }
        }
        let mut note = identity.note.map(String::from);
        if range.0 > range.1 && note.is_none() {
            note = Some("no index in range".to_string());
        }
        VerificationReport {
            id: identity.id.to_string(),
            range,
            status: if counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample,
            candidate: identity.candidate,
            note,
        }
    }

    fn solution_mismatch(
        &self,
        eq: PellEquation,
        source: &dyn TermSource,
    ) -> Option<Counterexample> {
        let solved = &self
            .positives
            .iter()
            .find(|(e, _)| *e == eq)
            .expect("all four cached")
            .1;
        let family = solution_families(&T(source), eq, self.pell_count);
        let show = |r: Option<&(BigInt, BigInt)>| match r {
            Some((x, y)) => alloc::format!("({x}, {y})"),
            None => "missing".to_string(),
        };
        (0..self.pell_count.max(solved.len()).max(family.len()))
            .find(|&i| solved.get(i) != family.get(i))
            .map(|i| Counterexample {
                index: i as u64 + 1,
                route: source.route(),
                lhs: show(solved.get(i)),
                rhs: show(family.get(i)),
            })
    }
}

fn first_mismatch(
    sides: &[catalog::Expr],
    source: &dyn TermSource,
    (lo, hi): (u64, u64),
) -> Option<Counterexample> {
    let t = T(source);
    for n in lo..=hi {
        let first = sides[0](&t, n);
        for side in &sides[1..] {
            let other = side(&t, n);
            let agree = matches!((&first, &other), (Val::Int(a), Val::Int(b)) if a == b);
            if !agree {
                return Some(Counterexample {
                    index: n,
                    route: source.route(),
                    lhs: first.to_string(),
                    rhs: other.to_string(),
                });
            }
        }
    }
    None
}

/// Checks one identity over `1..=n_max` (or its base indices) on all routes.
pub fn verify(id: &str, n_max: u64) -> Result<VerificationReport> {
    Verifier::new(n_max, DEFAULT_PELL_COUNT)?.verify(id)
}

/// Checks the whole catalog.
pub fn verify_all(n_max: u64, pell_count: usize) -> Result<Vec<VerificationReport>> {
    Ok(Verifier::new(n_max, pell_count)?.verify_all())
}

/// Compares the first `count` positive solutions of `eq` with the stated
/// solution families.
pub fn verify_solution_sets(eq: PellEquation, count: usize) -> Result<VerificationReport> {
    let id = match eq {
        PellEquation::AlmostBalancingFirst => "teo1.neg9",
        PellEquation::AlmostBalancingSecond => "teo1.pos7",
        PellEquation::AlmostCobalancingFirst => "teo3.neg7",
        PellEquation::AlmostCobalancingSecond => "teo3.pos9",
    };
    Verifier::new(1, count)?.verify(id)
}
