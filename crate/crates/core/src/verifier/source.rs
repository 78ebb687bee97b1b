use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::pellsolver::{Limit, PellSolver, QuadraticForm, Row};
use crate::sequences::SequenceKind::{self, *};
use crate::sequences::SequenceTable;

/// How a table of terms was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Recurrence,
    Binet,
    /// Almost kinds read off the solver's solutions of the four Pell-type
    /// equations; basic kinds from the recurrences.
    PellOrbit,
    /// A caller-supplied source.
    Custom,
}

impl Route {
    pub const BUILTIN: [Route; 3] = [Route::Recurrence, Route::Binet, Route::PellOrbit];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Binet => "binet",
            Route::PellOrbit => "pell-orbit",
            Route::Custom => "custom",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Anything that can answer "what is the `n`-th term of `kind`".
///
/// Identities only read indices the verifier sized its tables for; a source
/// may panic outside that range.
pub trait TermSource {
    fn term(&self, kind: SequenceKind, n: u64) -> BigInt;

    fn route(&self) -> Route {
        Route::Custom
    }
}

impl TermSource for SequenceTable {
    fn term(&self, kind: SequenceKind, n: u64) -> BigInt {
        self.get(kind, n as usize)
            .cloned()
            .expect("index inside the table")
    }
}

impl<S: TermSource + ?Sized> TermSource for &S {
    fn term(&self, kind: SequenceKind, n: u64) -> BigInt {
        (**self).term(kind, n)
    }

    fn route(&self) -> Route {
        (**self).route()
    }
}

pub(crate) struct Routed {
    route: Route,
    table: SequenceTable,
}

impl Routed {
    pub(crate) fn build(route: Route, n_max: usize) -> Self {
        let table = match route {
            Route::Binet => SequenceTable::by_binet(n_max),
            Route::PellOrbit => pell_orbit_table(n_max),
            _ => SequenceTable::by_recurrence(n_max),
        };
        Routed { route, table }
    }
}

impl TermSource for Routed {
    fn term(&self, kind: SequenceKind, n: u64) -> BigInt {
        self.table.term(kind, n)
    }

    fn route(&self) -> Route {
        self.route
    }
}

/// The four equations whose positive solutions carry the almost kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PellEquation {
    /// `8x² - y² = -9`: `(B*, C*)`.
    AlmostBalancingFirst,
    /// `8x² - w² = 7`: `(B**, C**)`.
    AlmostBalancingSecond,
    /// `2x² - y² = -7`: `(2b* + 1, c*)`.
    AlmostCobalancingFirst,
    /// `2x² - w² = 9`: `(2b** + 1, c**)`.
    AlmostCobalancingSecond,
}

impl PellEquation {
    pub const ALL: [PellEquation; 4] = [
        PellEquation::AlmostBalancingFirst,
        PellEquation::AlmostBalancingSecond,
        PellEquation::AlmostCobalancingFirst,
        PellEquation::AlmostCobalancingSecond,
    ];

    /// `(a, b, c, m)` of `ax² + bxy + cy² = m`.
    pub fn coefficients(self) -> (i64, i64, i64, i64) {
        match self {
            PellEquation::AlmostBalancingFirst => (8, 0, -1, -9),
            PellEquation::AlmostBalancingSecond => (8, 0, -1, 7),
            PellEquation::AlmostCobalancingFirst => (2, 0, -1, -7),
            PellEquation::AlmostCobalancingSecond => (2, 0, -1, 9),
        }
    }

    pub fn solver(self) -> PellSolver {
        let (a, b, c, m) = self.coefficients();
        PellSolver::new(QuadraticForm::new(a, b, c).expect("indefinite"), m).expect("m ≠ 0")
    }

    /// The first `count` solutions with `x > 0` and `y > 0`, by `x`.
    pub fn positive_solutions(self, count: usize) -> Vec<Row> {
        self.solver()
            .solutions(&Limit::Count(count))
            .map(|s| (s.x, s.y))
            .collect()
    }
}

impl fmt::Display for PellEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, _, _, m) = self.coefficients();
        let y = match self {
            PellEquation::AlmostBalancingFirst | PellEquation::AlmostCobalancingFirst => "y",
            _ => "w",
        };
        write!(f, "{a}x² - {y}² = {m}")
    }
}

/// Replaces the eight almost rows of a recurrence table with values read
/// off solver output:
///
/// * `B*_k, C*_k`: the `k`-th solution of `8x² - y² = -9` with `x ≥ 0, y > 0`,
///   counting `(0, 3)` as the zeroth;
/// * `B**_k, C**_k`: the `k`-th positive solution of `8x² - w² = 7`;
/// * `b*_k, c*_k`: `((x - 1)/2, y)` for the zeroth, first, ... positive
///   solution of `2x² - y² = -7`;
/// * `b**_k, c**_k`: `((x - 1)/2, w)` for the `k`-th positive solution of
///   `2x² - w² = 9`.
///
/// The second-type rows keep their base values at `k = 0`, which lie off
/// the positive branch.
fn pell_orbit_table(n_max: usize) -> SequenceTable {
    let len = n_max + 1;
    let halve_pred = |x: &BigInt| -> BigInt {
        let t: BigInt = x - BigInt::one();
        debug_assert!((&t % 2u32).is_zero());
        t >> 1u32
    };

    let first = PellEquation::AlmostBalancingFirst;
    let mut bs: Vec<Row> = first
        .solver()
        .solutions(&Limit::XBound(BigInt::zero()))
        .filter(|s| s.y.is_positive())
        .map(|s| (s.x, s.y))
        .collect();
    bs.extend(first.positive_solutions(len.saturating_sub(1)));

    let mut bss: Vec<Row> = Vec::with_capacity(len);
    bss.push((1.into(), (-1).into()));
    bss.extend(PellEquation::AlmostBalancingSecond.positive_solutions(len.saturating_sub(1)));

    let cs = PellEquation::AlmostCobalancingFirst.positive_solutions(len);

    let mut css: Vec<Row> = Vec::with_capacity(len);
    css.push((3.into(), 3.into()));
    css.extend(PellEquation::AlmostCobalancingSecond.positive_solutions(len.saturating_sub(1)));

    let split = |rows: &[Row], f: &dyn Fn(&BigInt) -> BigInt| -> (Vec<BigInt>, Vec<BigInt>) {
        rows.iter()
            .take(len)
            .map(|(x, y)| (f(x), y.clone()))
            .unzip()
    };
    let id = |x: &BigInt| x.clone();
    let (b_first, c_first) = split(&bs, &id);
    let (b_second, c_second) = split(&bss, &id);
    let (bb_first, cc_first) = split(&cs, &halve_pred);
    let (mut bb_second, cc_second) = split(&css[1..], &halve_pred);
    // b**₀ = 1 and c**₀ = 3 are stated, not derived from the equation.
    bb_second.insert(0, BigInt::one());
    let mut cc_second_full = Vec::with_capacity(len);
    cc_second_full.push(BigInt::from(3));
    cc_second_full.extend(cc_second);
    bb_second.truncate(len);
    cc_second_full.truncate(len);

    SequenceTable::by_recurrence(n_max)
        .with_row(AlmostBalancingFirst, b_first)
        .with_row(AlmostLucasBalancingFirst, c_first)
        .with_row(AlmostBalancingSecond, b_second)
        .with_row(AlmostLucasBalancingSecond, c_second)
        .with_row(AlmostCobalancingFirst, bb_first)
        .with_row(AlmostLucasCobalancingFirst, cc_first)
        .with_row(AlmostCobalancingSecond, bb_second)
        .with_row(AlmostLucasCobalancingSecond, cc_second_full)
}
