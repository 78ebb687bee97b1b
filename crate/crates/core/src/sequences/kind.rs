use core::fmt;
use core::str::FromStr;

use crate::Error;

/// The thirteen sequence families.
///
/// Symbols follow the usual letters, with `s`/`ss` standing in for one and
/// two stars: `Bs` is B*, `css` is c**.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceKind {
    /// B: 0, 1, 6, 35, 204, ...
    Balancing,
    /// b: 0, 0, 2, 14, 84, ...
    Cobalancing,
    /// C: 1, 3, 17, 99, 577, ...
    LucasBalancing,
    /// c: -1, 1, 7, 41, 239, ...
    LucasCobalancing,
    /// P: 0, 1, 2, 5, 12, ...
    Pell,
    /// B*: 0, 3, 18, 105, ...
    AlmostBalancingFirst,
    /// B**: 1, 1, 2, 4, 11, 23, ...
    AlmostBalancingSecond,
    /// C*: 3, 9, 51, 297, ...
    AlmostLucasBalancingFirst,
    /// C**: -1, 1, 5, 11, 31, 65, ...
    AlmostLucasBalancingSecond,
    /// b*: 0, 1, 4, 9, 26, 55, ...
    AlmostCobalancingFirst,
    /// b**: 1, 1, 7, 43, 253, ...
    AlmostCobalancingSecond,
    /// c*: 3, 5, 13, 27, 75, 157, ...
    AlmostLucasCobalancingFirst,
    /// c**: 3, 3, 21, 123, 717, ...
    AlmostLucasCobalancingSecond,
}

use SequenceKind::*;

impl SequenceKind {
    pub const ALL: [SequenceKind; 13] = [
        Balancing,
        Cobalancing,
        LucasBalancing,
        LucasCobalancing,
        Pell,
        AlmostBalancingFirst,
        AlmostBalancingSecond,
        AlmostLucasBalancingFirst,
        AlmostLucasBalancingSecond,
        AlmostCobalancingFirst,
        AlmostCobalancingSecond,
        AlmostLucasCobalancingFirst,
        AlmostLucasCobalancingSecond,
    ];

    /// The six kinds characterised by a perfect-square criterion.
    pub const MEMBERSHIP: [SequenceKind; 6] = [
        Balancing,
        Cobalancing,
        AlmostBalancingFirst,
        AlmostBalancingSecond,
        AlmostCobalancingFirst,
        AlmostCobalancingSecond,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Balancing => "B",
            Cobalancing => "b",
            LucasBalancing => "C",
            LucasCobalancing => "c",
            Pell => "P",
            AlmostBalancingFirst => "Bs",
            AlmostBalancingSecond => "Bss",
            AlmostLucasBalancingFirst => "Cs",
            AlmostLucasBalancingSecond => "Css",
            AlmostCobalancingFirst => "bs",
            AlmostCobalancingSecond => "bss",
            AlmostLucasCobalancingFirst => "cs",
            AlmostLucasCobalancingSecond => "css",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.symbol() == s)
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// The Lucas-type sequence whose terms are the square roots in this
    /// kind's membership criterion.
    pub fn witness(self) -> Option<SequenceKind> {
        Some(match self {
            Balancing => LucasBalancing,
            Cobalancing => LucasCobalancing,
            AlmostBalancingFirst => AlmostLucasBalancingFirst,
            AlmostBalancingSecond => AlmostLucasBalancingSecond,
            AlmostCobalancingFirst => AlmostLucasCobalancingFirst,
            AlmostCobalancingSecond => AlmostLucasCobalancingSecond,
            _ => return None,
        })
    }

    /// Whether `term_binet` evaluates this kind.
    pub fn has_closed_form(self) -> bool {
        matches!(
            self,
            Balancing | Cobalancing | LucasBalancing | LucasCobalancing | Pell
        )
    }

    /// `(linear, constant)` in the criterion `8x² + linear·x + constant = □`.
    pub(crate) fn radicand_coefficients(self) -> Option<(i64, i64)> {
        Some(match self {
            Balancing => (0, 1),
            Cobalancing => (8, 1),
            AlmostBalancingFirst => (0, 9),
            AlmostBalancingSecond => (0, -7),
            AlmostCobalancingFirst => (8, 9),
            AlmostCobalancingSecond => (8, -7),
            _ => return None,
        })
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::from_symbol(s).ok_or(Error::UnknownSequence)
    }
}

/// Balancers and cobalancers, plain and almost, one per membership kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BalancerKind {
    /// R, the balancer of a balancing number.
    Balancer,
    /// r, the cobalancer of a cobalancing number.
    Cobalancer,
    /// R*.
    AlmostBalancerFirst,
    /// R**.
    AlmostBalancerSecond,
    /// r*.
    AlmostCobalancerFirst,
    /// r**.
    AlmostCobalancerSecond,
}

impl BalancerKind {
    pub const ALL: [BalancerKind; 6] = [
        BalancerKind::Balancer,
        BalancerKind::Cobalancer,
        BalancerKind::AlmostBalancerFirst,
        BalancerKind::AlmostBalancerSecond,
        BalancerKind::AlmostCobalancerFirst,
        BalancerKind::AlmostCobalancerSecond,
    ];

    /// The sequence whose members this balancer is defined for.
    pub fn sequence(self) -> SequenceKind {
        match self {
            BalancerKind::Balancer => Balancing,
            BalancerKind::Cobalancer => Cobalancing,
            BalancerKind::AlmostBalancerFirst => AlmostBalancingFirst,
            BalancerKind::AlmostBalancerSecond => AlmostBalancingSecond,
            BalancerKind::AlmostCobalancerFirst => AlmostCobalancingFirst,
            BalancerKind::AlmostCobalancerSecond => AlmostCobalancingSecond,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BalancerKind::Balancer => "R",
            BalancerKind::Cobalancer => "r",
            BalancerKind::AlmostBalancerFirst => "Rs",
            BalancerKind::AlmostBalancerSecond => "Rss",
            BalancerKind::AlmostCobalancerFirst => "rs",
            BalancerKind::AlmostCobalancerSecond => "rss",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.symbol() == s)
    }

    /// The family whose sum difference this balancer zeroes (or makes ±1).
    pub fn family(self) -> Family {
        match self {
            BalancerKind::Balancer => Family::Balancing,
            BalancerKind::Cobalancer => Family::Cobalancing,
            BalancerKind::AlmostBalancerFirst | BalancerKind::AlmostBalancerSecond => {
                Family::AlmostBalancing
            }
            BalancerKind::AlmostCobalancerFirst | BalancerKind::AlmostCobalancerSecond => {
                Family::AlmostCobalancing
            }
        }
    }
}

impl fmt::Display for BalancerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BalancerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::from_symbol(s).ok_or(Error::UnknownSequence)
    }
}

/// Which left-hand sum a balancer is measured against: `1 + ... + (n-1)` for
/// the balancing families, `1 + ... + n` for the cobalancing ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Balancing,
    Cobalancing,
    AlmostBalancing,
    AlmostCobalancing,
}
