use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::source::{PellEquation, TermSource};
use crate::quadarith::root_of_square;
use crate::sequences::SequenceKind::*;
use crate::sequences::{balancer, definitional_check, term_binet, BalancerKind, SequenceKind};

/// The value of one side of an identity at one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Val {
    Int(BigInt),
    /// A division that did not come out even.
    Frac(BigInt, u32),
    Undefined(&'static str),
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Int(x) => write!(f, "{x}"),
            Val::Frac(x, d) => write!(f, "{x}/{d}"),
            Val::Undefined(why) => write!(f, "undefined ({why})"),
        }
    }
}

fn int(x: BigInt) -> Val {
    Val::Int(x)
}

fn div(x: BigInt, d: u32) -> Val {
    let (q, r) = x.div_rem(&BigInt::from(d));
    if r.is_zero() {
        Val::Int(q)
    } else {
        Val::Frac(x, d)
    }
}

/// `(top + √rad)/2` when `rad` is a perfect square.
fn half_root_sum(top: BigInt, rad: BigInt) -> Val {
    match root_of_square(&rad) {
        Some(root) => div(top + root, 2),
        None => Val::Undefined("radicand is not a square"),
    }
}

fn balancer_of(kind: BalancerKind, x: BigInt) -> Val {
    match balancer(kind, &x) {
        Ok(r) => Val::Int(r),
        Err(_) => Val::Undefined("not a member"),
    }
}

/// Short accessors so the catalog reads like the formulas.
pub(crate) struct T<'a>(pub &'a dyn TermSource);

#[allow(non_snake_case)]
impl T<'_> {
    fn at(&self, kind: SequenceKind, n: u64) -> BigInt {
        self.0.term(kind, n)
    }
    fn B(&self, n: u64) -> BigInt {
        self.at(Balancing, n)
    }
    fn b(&self, n: u64) -> BigInt {
        self.at(Cobalancing, n)
    }
    fn C(&self, n: u64) -> BigInt {
        self.at(LucasBalancing, n)
    }
    fn c(&self, n: u64) -> BigInt {
        self.at(LucasCobalancing, n)
    }
    fn P(&self, n: u64) -> BigInt {
        self.at(Pell, n)
    }
    fn Bs(&self, n: u64) -> BigInt {
        self.at(AlmostBalancingFirst, n)
    }
    fn Bss(&self, n: u64) -> BigInt {
        self.at(AlmostBalancingSecond, n)
    }
    fn Cs(&self, n: u64) -> BigInt {
        self.at(AlmostLucasBalancingFirst, n)
    }
    fn Css(&self, n: u64) -> BigInt {
        self.at(AlmostLucasBalancingSecond, n)
    }
    fn bs(&self, n: u64) -> BigInt {
        self.at(AlmostCobalancingFirst, n)
    }
    fn bss(&self, n: u64) -> BigInt {
        self.at(AlmostCobalancingSecond, n)
    }
    fn cs(&self, n: u64) -> BigInt {
        self.at(AlmostLucasCobalancingFirst, n)
    }
    fn css(&self, n: u64) -> BigInt {
        self.at(AlmostLucasCobalancingSecond, n)
    }
    /// The balancer of the `n`-th term of the sequence `kind` balances.
    fn balancer(&self, kind: BalancerKind, n: u64) -> Val {
        balancer_of(kind, self.at(kind.sequence(), n))
    }
}

pub(crate) type Expr = for<'a, 'b> fn(&'a T<'b>, u64) -> Val;

fn e(f: Expr) -> Expr {
    f
}

macro_rules! sides {
    ($($x:expr),+ $(,)?) => { vec![$(e($x)),+] };
}

/// Which indices an identity is checked at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Span {
    /// `n_min..=n_max` for the requested `n_max`.
    From(u64),
    /// A fixed list of base indices.
    Fixed(u64, u64),
}

pub(crate) enum Check {
    /// Every expression must evaluate to the same integer.
    Chain(Vec<Expr>),
    /// The first positive solutions from the solver against the union of
    /// the stated solution families, merged by `x`.
    SolutionSet(PellEquation),
}

pub(crate) struct Identity {
    pub id: &'static str,
    pub span: Span,
    pub check: Check,
    /// Candidates are reported but do not decide the overall verdict.
    pub candidate: bool,
    pub note: Option<&'static str>,
}

fn chain(id: &'static str, n_min: u64, sides: Vec<Expr>) -> Identity {
    Identity {
        id,
        span: Span::From(n_min),
        check: Check::Chain(sides),
        candidate: false,
        note: None,
    }
}

fn base(id: &'static str, hi: u64, sides: Vec<Expr>) -> Identity {
    Identity {
        id,
        span: Span::Fixed(0, hi),
        check: Check::Chain(sides),
        candidate: false,
        note: None,
    }
}

fn solution_set(id: &'static str, eq: PellEquation) -> Identity {
    Identity {
        id,
        span: Span::From(1),
        check: Check::SolutionSet(eq),
        candidate: false,
        note: None,
    }
}

fn candidate(id: &'static str, n_min: u64, note: &'static str, sides: Vec<Expr>) -> Identity {
    Identity {
        id,
        span: Span::From(n_min),
        check: Check::Chain(sides),
        candidate: true,
        note: Some(note),
    }
}

fn table(values: &[i64], n: u64) -> Val {
    int(values[n as usize].into())
}

/// The family members of the four equations, merged by `x` and cut at
/// `count`.
pub(crate) fn solution_families(
    t: &T<'_>,
    eq: PellEquation,
    count: usize,
) -> Vec<(BigInt, BigInt)> {
    let upto = count as u64 + 1;
    let mut out: Vec<(BigInt, BigInt)> = Vec::new();
    for n in 1..=upto {
        match eq {
            PellEquation::AlmostBalancingFirst => out.push((3 * t.B(n), 3 * t.C(n))),
            PellEquation::AlmostBalancingSecond => {
                out.push((t.B(n - 1) + t.C(n - 1), 8 * t.B(n - 1) + t.C(n - 1)));
                out.push((t.C(n) - t.B(n), 8 * t.B(n) - t.C(n)));
            }
            PellEquation::AlmostCobalancingFirst => {
                out.push((6 * t.B(n - 1) + t.C(n - 1), 4 * t.B(n - 1) + 3 * t.C(n - 1)));
                out.push((6 * t.B(n) - t.C(n), 3 * t.C(n) - 4 * t.B(n)));
            }
            PellEquation::AlmostCobalancingSecond => out.push((
                6 * t.B(n - 1) + 3 * t.C(n - 1),
                12 * t.B(n - 1) + 3 * t.C(n - 1),
            )),
        }
    }
    out.sort();
    out.truncate(count);
    out
}

fn binet(kind: SequenceKind, n: u64) -> Val {
    match term_binet(kind, n) {
        Ok(x) => int(x),
        Err(_) => Val::Undefined("no closed form"),
    }
}

fn sum_check(kind: BalancerKind, x: BigInt) -> Val {
    match balancer(kind, &x) {
        Ok(r) => int(definitional_check(kind.family(), &x, &r)),
        Err(_) => Val::Undefined("not a member"),
    }
}

fn balancer_relations() -> Vec<Identity> {
    use BalancerKind::*;
    // Each almost number against every almost balancer type at the printed
    // offset; exactly one pairing per row holds.
    vec![
        candidate(
            "balrel.Bstar.Rstar",
            1,
            "B*_n = R*_{n+1}; fails",
            sides![|t, n| int(t.Bs(n)), |t, n| t
                .balancer(AlmostBalancerFirst, n + 1)],
        ),
        candidate(
            "balrel.Bstar.Rstarstar",
            1,
            "B*_n = R**_{n+1}; fails",
            sides![|t, n| int(t.Bs(n)), |t, n| t
                .balancer(AlmostBalancerSecond, n + 1)],
        ),
        candidate(
            "balrel.Bstar.rstar",
            1,
            "B*_n = r*_{n+1}; fails",
            sides![|t, n| int(t.Bs(n)), |t, n| t
                .balancer(AlmostCobalancerFirst, n + 1)],
        ),
        candidate(
            "balrel.Bstar.rstarstar",
            1,
            "B*_n = r**_{n+1}; printed pairing, holds",
            sides![|t, n| int(t.Bs(n)), |t, n| t
                .balancer(AlmostCobalancerSecond, n + 1)],
        ),
        candidate(
            "balrel.Bstarstar.Rstar",
            1,
            "B**_n = R*_n; fails",
            sides![|t, n| int(t.Bss(n)), |t, n| t
                .balancer(AlmostBalancerFirst, n)],
        ),
        candidate(
            "balrel.Bstarstar.Rstarstar",
            1,
            "B**_n = R**_n; fails",
            sides![|t, n| int(t.Bss(n)), |t, n| t
                .balancer(AlmostBalancerSecond, n)],
        ),
        candidate(
            "balrel.Bstarstar.rstar",
            1,
            "B**_n = r*_n; printed pairing, holds",
            sides![|t, n| int(t.Bss(n)), |t, n| t
                .balancer(AlmostCobalancerFirst, n)],
        ),
        candidate(
            "balrel.Bstarstar.rstarstar",
            1,
            "B**_n = r**_n; fails",
            sides![|t, n| int(t.Bss(n)), |t, n| t
                .balancer(AlmostCobalancerSecond, n)],
        ),
        candidate(
            "balrel.bstar.Rstar",
            1,
            "b*_n = R*_{n+2}; printed pairing, fails",
            sides![|t, n| int(t.bs(n)), |t, n| t
                .balancer(AlmostBalancerFirst, n + 2)],
        ),
        candidate(
            "balrel.bstar.Rstarstar",
            1,
            "b*_n = R**_{n+2}; holds",
            sides![|t, n| int(t.bs(n)), |t, n| t
                .balancer(AlmostBalancerSecond, n + 2)],
        ),
        candidate(
            "balrel.bstar.rstar",
            1,
            "b*_n = r*_{n+2}; fails",
            sides![|t, n| int(t.bs(n)), |t, n| t
                .balancer(AlmostCobalancerFirst, n + 2)],
        ),
        candidate(
            "balrel.bstar.rstarstar",
            1,
            "b*_n = r**_{n+2}; fails",
            sides![|t, n| int(t.bs(n)), |t, n| t
                .balancer(AlmostCobalancerSecond, n + 2)],
        ),
        candidate(
            "balrel.bstarstar.Rstar",
            1,
            "b**_n = R*_n; printed pairing, holds",
            sides![|t, n| int(t.bss(n)), |t, n| t
                .balancer(AlmostBalancerFirst, n)],
        ),
        candidate(
            "balrel.bstarstar.Rstarstar",
            1,
            "b**_n = R**_n; fails",
            sides![|t, n| int(t.bss(n)), |t, n| t
                .balancer(AlmostBalancerSecond, n)],
        ),
        candidate(
            "balrel.bstarstar.rstar",
            1,
            "b**_n = r*_n; fails",
            sides![|t, n| int(t.bss(n)), |t, n| t
                .balancer(AlmostCobalancerFirst, n)],
        ),
        candidate(
            "balrel.bstarstar.rstarstar",
            1,
            "b**_n = r**_n; fails",
            sides![|t, n| int(t.bss(n)), |t, n| t
                .balancer(AlmostCobalancerSecond, n)],
        ),
    ]
}

pub(crate) fn catalog() -> Vec<Identity> {
    let mut v = vec![
        base(
            "base.B",
            2,
            sides![|t, n| int(t.B(n)), |_, n| table(&[0, 1, 6], n)],
        ),
        base(
            "base.b",
            2,
            sides![|t, n| int(t.b(n)), |_, n| table(&[0, 0, 2], n)],
        ),
        base(
            "base.C",
            1,
            sides![|t, n| int(t.C(n)), |_, n| table(&[1, 3], n)],
        ),
        base(
            "base.c",
            1,
            sides![|t, n| int(t.c(n)), |_, n| table(&[-1, 1], n)],
        ),
        base(
            "base.P",
            1,
            sides![|t, n| int(t.P(n)), |_, n| table(&[0, 1], n)],
        ),
        base(
            "base.Bstar",
            0,
            sides![|t, n| int(t.Bs(n)), |_, n| table(&[0], n)],
        ),
        base(
            "base.Cstar",
            0,
            sides![|t, n| int(t.Cs(n)), |_, n| table(&[3], n)],
        ),
        base(
            "base.Bstarstar",
            2,
            sides![|t, n| int(t.Bss(n)), |_, n| table(&[1, 1, 2], n)],
        ),
        base(
            "base.Cstarstar",
            0,
            sides![|t, n| int(t.Css(n)), |_, n| table(&[-1], n)],
        ),
        base(
            "base.bstar",
            0,
            sides![|t, n| int(t.bs(n)), |_, n| table(&[0], n)],
        ),
        base(
            "base.cstar",
            0,
            sides![|t, n| int(t.cs(n)), |_, n| table(&[3], n)],
        ),
        base(
            "base.bstarstar",
            1,
            sides![|t, n| int(t.bss(n)), |_, n| table(&[1, 1], n)],
        ),
        base(
            "base.cstarstar",
            0,
            sides![|t, n| int(t.css(n)), |_, n| table(&[3], n)],
        ),
        // recurrences
        chain(
            "rec.B",
            1,
            sides![|t, n| int(t.B(n + 1)), |t, n| int(6 * t.B(n) - t.B(n - 1))],
        ),
        chain(
            "rec.b",
            1,
            sides![|t, n| int(t.b(n + 1)), |t, n| int(
                6 * t.b(n) - t.b(n - 1) + 2
            )],
        ),
        chain(
            "rec.C",
            1,
            sides![|t, n| int(t.C(n + 1)), |t, n| int(6 * t.C(n) - t.C(n - 1))],
        ),
        chain(
            "rec.c",
            1,
            sides![|t, n| int(t.c(n + 1)), |t, n| int(6 * t.c(n) - t.c(n - 1))],
        ),
        chain(
            "rec.P",
            1,
            sides![|t, n| int(t.P(n + 1)), |t, n| int(2 * t.P(n) + t.P(n - 1))],
        ),
        // closed forms in Z[√2]
        chain(
            "binet.B",
            1,
            sides![|t, n| int(t.B(n)), |_, n| binet(Balancing, n)],
        ),
        chain(
            "binet.b",
            1,
            sides![|t, n| int(t.b(n)), |_, n| binet(Cobalancing, n)],
        ),
        chain(
            "binet.C",
            1,
            sides![|t, n| int(t.C(n)), |_, n| binet(LucasBalancing, n)],
        ),
        chain(
            "binet.c",
            1,
            sides![|t, n| int(t.c(n)), |_, n| binet(LucasCobalancing, n)],
        ),
        chain(
            "binet.P",
            1,
            sides![|t, n| int(t.P(n)), |_, n| binet(Pell, n)],
        ),
        // Lucas-type values are the square roots of the membership radicands
        chain(
            "lucas.C",
            1,
            sides![|t, n| int(t.C(n) * t.C(n)), |t, n| int(
                8 * t.B(n) * t.B(n) + 1
            )],
        ),
        chain(
            "lucas.c",
            1,
            sides![|t, n| int(t.c(n) * t.c(n)), |t, n| int(8 * t.b(n) * t.b(n)
                + 8 * t.b(n)
                + 1)],
        ),
        chain(
            "lucas.Cstar",
            1,
            sides![|t, n| int(t.Cs(n) * t.Cs(n)), |t, n| int(8
                * t.Bs(n)
                * t.Bs(n)
                + 9)],
        ),
        chain(
            "lucas.Cstarstar",
            1,
            sides![|t, n| int(t.Css(n) * t.Css(n)), |t, n| int(8
                * t.Bss(n)
                * t.Bss(n)
                - 7)],
        ),
        chain(
            "lucas.cstar",
            1,
            sides![|t, n| int(t.cs(n) * t.cs(n)), |t, n| int(8
                * t.bs(n)
                * t.bs(n)
                + 8 * t.bs(n)
                + 9)],
        ),
        chain(
            "lucas.cstarstar",
            1,
            sides![|t, n| int(t.css(n) * t.css(n)), |t, n| int(8
                * t.bss(n)
                * t.bss(n)
                + 8 * t.bss(n)
                - 7)],
        ),
        // balancers and the defining sums
        chain(
            "balancer.R_eq_b",
            1,
            sides![
                |t, n| balancer_of(BalancerKind::Balancer, t.B(n)),
                |t, n| int(t.b(n))
            ],
        ),
        chain(
            "balancer.B_eq_r",
            1,
            sides![
                |t, n| balancer_of(BalancerKind::Cobalancer, t.b(n + 1)),
                |t, n| int(t.B(n))
            ],
        ),
        chain(
            "sums.B",
            1,
            sides![
                |t, n| sum_check(BalancerKind::Balancer, t.B(n)),
                |_, _| int(0.into())
            ],
        ),
        chain(
            "sums.b",
            1,
            sides![
                |t, n| sum_check(BalancerKind::Cobalancer, t.b(n)),
                |_, _| int(0.into())
            ],
        ),
        chain(
            "sums.Bstar",
            1,
            sides![
                |t, n| sum_check(BalancerKind::AlmostBalancerFirst, t.Bs(n)),
                |_, _| int(1.into())
            ],
        ),
        chain(
            "sums.Bstarstar",
            1,
            sides![
                |t, n| sum_check(BalancerKind::AlmostBalancerSecond, t.Bss(n)),
                |_, _| int((-1).into())
            ],
        ),
        chain(
            "sums.bstar",
            1,
            sides![
                |t, n| sum_check(BalancerKind::AlmostCobalancerFirst, t.bs(n)),
                |_, _| int(1.into())
            ],
        ),
        chain(
            "sums.bstarstar",
            1,
            sides![
                |t, n| sum_check(BalancerKind::AlmostCobalancerSecond, t.bss(n)),
                |_, _| int((-1).into())
            ],
        ),
        // converting between balancing and cobalancing numbers
        chain(
            "baa12.b",
            1,
            sides![|t, n| int(t.b(n)), |t, n| half_root_sum(
                -2 * t.B(n) - 1,
                8 * t.B(n) * t.B(n) + 1
            )],
        ),
        chain(
            "baa12.B",
            1,
            sides![|t, n| int(t.B(n)), |t, n| half_root_sum(
                2 * t.b(n) + 1,
                8 * t.b(n) * t.b(n) + 8 * t.b(n) + 1
            )],
        ),
        candidate(
            "baa12.B_printed",
            1,
            "printed as (b_n + 1 + √(8b_n² + 8b_n + 1))/2; only n = 1 survives",
            sides![|t, n| int(t.B(n)), |t, n| half_root_sum(
                t.b(n) + 1,
                8 * t.b(n) * t.b(n) + 8 * t.b(n) + 1
            )],
        ),
        // in terms of Pell numbers
        chain(
            "pellk.B",
            1,
            sides![|t, n| int(t.B(n)), |t, n| div(t.P(2 * n), 2)],
        ),
        chain(
            "pellk.b",
            1,
            sides![|t, n| int(t.b(n)), |t, n| div(t.P(2 * n - 1) - 1, 2)],
        ),
        chain(
            "pellk.C",
            1,
            sides![|t, n| int(t.C(n)), |t, n| int(t.P(2 * n) + t.P(2 * n - 1))],
        ),
        chain(
            "pellk.c",
            1,
            sides![|t, n| int(t.c(n)), |t, n| int(
                t.P(2 * n - 1) + t.P(2 * n - 2)
            )],
        ),
        // solution sets of the four equations
        solution_set("teo1.neg9", PellEquation::AlmostBalancingFirst),
        solution_set("teo1.pos7", PellEquation::AlmostBalancingSecond),
        solution_set("teo3.neg7", PellEquation::AlmostCobalancingFirst),
        solution_set("teo3.pos9", PellEquation::AlmostCobalancingSecond),
        // almost balancing numbers from balancing numbers
        chain(
            "teo2.Bstar",
            1,
            sides![|t, n| int(t.Bs(n)), |t, n| int(3 * t.B(n))],
        ),
        chain(
            "teo2.Cstar",
            1,
            sides![|t, n| int(t.Cs(n)), |t, n| int(3 * t.C(n))],
        ),
        chain(
            "teo2.Bstarstar_odd",
            1,
            sides![|t, n| int(t.Bss(2 * n - 1)), |t, n| int(
                t.B(n - 1) + t.C(n - 1)
            )],
        ),
        chain(
            "teo2.Bstarstar_even",
            1,
            sides![|t, n| int(t.Bss(2 * n)), |t, n| int(t.C(n) - t.B(n))],
        ),
        chain(
            "teo2.Cstarstar_odd",
            1,
            sides![|t, n| int(t.Css(2 * n - 1)), |t, n| int(
                8 * t.B(n - 1) + t.C(n - 1)
            )],
        ),
        chain(
            "teo2.Cstarstar_even",
            1,
            sides![|t, n| int(t.Css(2 * n)), |t, n| int(8 * t.B(n) - t.C(n))],
        ),
        // almost cobalancing numbers from cobalancing numbers
        chain(
            "teo4.bstar_odd",
            1,
            sides![|t, n| int(t.bs(2 * n - 1)), |t, n| int(4 * t.b(n)
                - t.b(n - 1)
                + 1)],
        ),
        chain(
            "teo4.bstar_even",
            1,
            sides![|t, n| int(t.bs(2 * n)), |t, n| int(2 * t.b(n + 1) - t.b(n))],
        ),
        chain(
            "teo4.cstar_odd",
            1,
            sides![|t, n| int(t.cs(2 * n - 1)), |t, n| int(
                t.c(n + 1) - 2 * t.c(n)
            )],
        ),
        chain(
            "teo4.cstar_even",
            1,
            sides![|t, n| int(t.cs(2 * n)), |t, n| int(
                t.c(n + 2) - 4 * t.c(n + 1)
            )],
        ),
        chain(
            "teo4.bstarstar",
            1,
            sides![|t, n| int(t.bss(n)), |t, n| int(3 * t.b(n) + 1)],
        ),
        chain(
            "teo4.cstarstar",
            1,
            sides![|t, n| int(t.css(n)), |t, n| int(3 * t.c(n))],
        ),
        // and back
        chain(
            "teo5.B_via_star",
            1,
            sides![|t, n| int(t.B(n)), |t, n| div(t.Bs(n), 3)],
        ),
        chain(
            "teo5.b_via_star",
            1,
            sides![|t, n| int(t.b(n)), |t, n| div(
                t.bs(2 * n - 1) - t.bs(2 * n - 2) - 1,
                2
            )],
        ),
        chain(
            "teo5.C_via_star",
            1,
            sides![|t, n| int(t.C(n)), |t, n| div(t.Cs(n), 3)],
        ),
        chain(
            "teo5.c_via_star",
            1,
            sides![|t, n| int(t.c(n)), |t, n| div(
                t.cs(2 * n - 1) - t.cs(2 * n - 2),
                2
            )],
        ),
        chain(
            "teo5.B_via_starstar",
            1,
            sides![|t, n| int(t.B(n)), |t, n| div(
                t.Bss(2 * n + 1) - t.Bss(2 * n),
                2
            )],
        ),
        chain(
            "teo5.b_via_starstar",
            1,
            sides![|t, n| int(t.b(n)), |t, n| div(t.bss(n) - 1, 3)],
        ),
        chain(
            "teo5.C_via_starstar",
            1,
            sides![|t, n| int(t.C(n)), |t, n| div(
                t.Css(2 * n + 1) - t.Css(2 * n),
                2
            )],
        ),
        chain(
            "teo5.c_via_starstar",
            1,
            sides![|t, n| int(t.c(n)), |t, n| div(t.css(n), 3)],
        ),
        // first type from second type and vice versa
        chain(
            "teo6.Bstar",
            1,
            sides![|t, n| int(t.Bs(n)), |t, n| div(
                3 * t.Bss(2 * n + 1) - 3 * t.Bss(2 * n),
                2
            )],
        ),
        chain(
            "teo6.Cstar",
            1,
            sides![|t, n| int(t.Cs(n)), |t, n| div(
                3 * t.Css(2 * n + 1) - 3 * t.Css(2 * n),
                2
            )],
        ),
        chain(
            "teo6.bstar_odd",
            1,
            sides![|t, n| int(t.bs(2 * n - 1)), |t, n| div(
                4 * t.bss(n) - t.bss(n - 1),
                3
            )],
        ),
        chain(
            "teo6.bstar_even",
            1,
            sides![|t, n| int(t.bs(2 * n)), |t, n| div(
                2 * t.bss(n + 1) - t.bss(n) - 1,
                3
            )],
        ),
        chain(
            "teo6.cstar_odd",
            1,
            sides![|t, n| int(t.cs(2 * n - 1)), |t, n| div(
                t.css(n + 1) - 2 * t.css(n),
                3
            )],
        ),
        chain(
            "teo6.cstar_even",
            1,
            sides![|t, n| int(t.cs(2 * n)), |t, n| div(
                t.css(n + 2) - 4 * t.css(n + 1),
                3
            )],
        ),
        chain(
            "teo6.Bstarstar_odd",
            1,
            sides![|t, n| int(t.Bss(2 * n - 1)), |t, n| div(
                t.Bs(n - 1) + t.Cs(n - 1),
                3
            )],
        ),
        chain(
            "teo6.Bstarstar_even",
            1,
            sides![|t, n| int(t.Bss(2 * n)), |t, n| div(t.Cs(n) - t.Bs(n), 3)],
        ),
        chain(
            "teo6.bstarstar",
            1,
            sides![|t, n| int(t.bss(n)), |t, n| div(
                3 * t.bs(2 * n - 1) - 3 * t.bs(2 * n - 2) - 1,
                2
            )],
        ),
        chain(
            "teo6.cstarstar",
            1,
            sides![|t, n| int(t.css(n)), |t, n| div(
                3 * t.cs(2 * n - 1) - 3 * t.cs(2 * n - 2),
                2
            )],
        ),
        chain(
            "teo6.Cstarstar_odd",
            1,
            sides![|t, n| int(t.Css(2 * n - 1)), |t, n| div(
                8 * t.Bs(n - 1) + t.Cs(n - 1),
                3
            )],
        ),
        chain(
            "teo6.Cstarstar_even",
            1,
            sides![|t, n| int(t.Css(2 * n)), |t, n| div(
                8 * t.Bs(n) - t.Cs(n),
                3
            )],
        ),
        // almost numbers from Pell numbers
        chain(
            "teo7.Bstar",
            1,
            sides![|t, n| int(t.Bs(n)), |t, n| div(3 * t.P(2 * n), 2)],
        ),
        chain(
            "teo7.bstar_even",
            1,
            sides![|t, n| int(t.bs(2 * n)), |t, n| div(
                4 * t.P(2 * n) + t.P(2 * n - 1) - 1,
                2
            )],
        ),
        chain(
            "teo7.Cstar",
            1,
            sides![|t, n| int(t.Cs(n)), |t, n| int(
                3 * t.P(2 * n) + 3 * t.P(2 * n - 1)
            )],
        ),
        chain(
            "teo7.cstar_odd",
            1,
            sides![|t, n| int(t.cs(2 * n - 1)), |t, n| int(
                5 * t.P(2 * n - 1) + t.P(2 * n - 2)
            )],
        ),
        chain(
            "teo7.cstar_even",
            1,
            sides![|t, n| int(t.cs(2 * n)), |t, n| int(
                3 * t.P(2 * n + 1) - t.P(2 * n)
            )],
        ),
        chain(
            "teo7.bstar_odd",
            2,
            sides![|t, n| int(t.bs(2 * n - 1)), |t, n| div(
                8 * t.P(2 * n - 2) + 3 * t.P(2 * n - 3) - 1,
                2
            )],
        ),
        chain(
            "teo7.Bstarstar_even",
            1,
            sides![|t, n| int(t.Bss(2 * n)), |t, n| div(
                t.P(2 * n) + 2 * t.P(2 * n - 1),
                2
            )],
        ),
        chain(
            "teo7.bstarstar",
            1,
            sides![|t, n| int(t.bss(n)), |t, n| div(3 * t.P(2 * n - 1) - 1, 2)],
        ),
        chain(
            "teo7.Cstarstar_even",
            1,
            sides![|t, n| int(t.Css(2 * n)), |t, n| int(
                3 * t.P(2 * n) - t.P(2 * n - 1)
            )],
        ),
        chain(
            "teo7.cstarstar",
            1,
            sides![|t, n| int(t.css(n)), |t, n| int(
                3 * t.P(2 * n - 1) + 3 * t.P(2 * n - 2)
            )],
        ),
        chain(
            "teo7.Bstarstar_odd",
            2,
            sides![|t, n| int(t.Bss(2 * n - 1)), |t, n| div(
                3 * t.P(2 * n - 2) + 2 * t.P(2 * n - 3),
                2
            )],
        ),
        chain(
            "teo7.Cstarstar_odd",
            2,
            sides![|t, n| int(t.Css(2 * n - 1)), |t, n| int(
                5 * t.P(2 * n - 2) + t.P(2 * n - 3)
            )],
        ),
        // Pell numbers from almost numbers
        chain(
            "teo8.P_even_via_star",
            1,
            sides![|t, n| int(t.P(2 * n)), |t, n| div(2 * t.Bs(n), 3)],
        ),
        chain(
            "teo8.P_odd_via_star",
            1,
            sides![|t, n| int(t.P(2 * n - 1)), |t, n| int(
                t.bs(2 * n - 1) - t.bs(2 * n - 2)
            )],
        ),
        chain(
            "teo8.P_even_via_starstar",
            1,
            sides![|t, n| int(t.P(2 * n)), |t, n| int(
                t.Bss(2 * n + 1) - t.Bss(2 * n)
            )],
        ),
        chain(
            "teo8.P_odd_via_starstar",
            1,
            sides![|t, n| int(t.P(2 * n - 1)), |t, n| div(2 * t.bss(n) + 1, 3)],
        ),
        // differences of consecutive balancing-type numbers
        chain(
            "sec4.Bstarstar_odd",
            1,
            sides![
                |t, n| int(t.B(n) - 2 * t.B(n - 1)),
                |t, n| int(t.B(n - 1) + t.C(n - 1)),
                |t, n| int(t.Bss(2 * n - 1))
            ],
        ),
        chain(
            "sec4.Cstarstar_odd",
            1,
            sides![
                |t, n| int(t.C(n) - 2 * t.C(n - 1)),
                |t, n| int(8 * t.B(n - 1) + t.C(n - 1)),
                |t, n| int(t.Css(2 * n - 1))
            ],
        ),
        chain(
            "sec4.Bstarstar_even",
            1,
            sides![
                |t, n| int(2 * t.B(n) - t.B(n - 1)),
                |t, n| int(t.C(n) - t.B(n)),
                |t, n| int(t.Bss(2 * n))
            ],
        ),
        chain(
            "sec4.Cstarstar_even",
            1,
            sides![
                |t, n| int(2 * t.C(n) - t.C(n - 1)),
                |t, n| int(8 * t.B(n) - t.C(n)),
                |t, n| int(t.Css(2 * n))
            ],
        ),
        chain(
            "sec4.Un",
            1,
            sides![
                |t, n| div(3 * t.B(n) + t.B(n - 1) - 1, 2),
                |t, n| div(6 * t.B(n) - t.C(n) - 1, 2),
                |t, n| int(t.bs(2 * n - 1)),
            ],
        ),
        chain(
            "sec4.Vn",
            1,
            sides![|t, n| div(3 * t.B(n) + t.B(n + 1) - 1, 2), |t, n| int(
                t.bs(2 * n)
            )],
        ),
    ];
    v.extend(balancer_relations());
    v
}

/// Highest index any catalog entry reads at `n = n_max`.
pub(crate) fn reach(n_max: u64) -> u64 {
    2 * n_max + 2
}
