//! Oracles shared by the integration tests. None of them call into the
//! library's arithmetic: they work on machine integers only.

#![allow(dead_code)]

use std::collections::BTreeSet;

use balance_forge_core::sequences::{SequenceKind, SequenceTable};
use balance_forge_core::verifier::TermSource;
use balance_forge_core::BigInt;

/// `⌊√v⌋` for `v < 2^128`, via `f64` and a correction step.
pub fn isqrt_u128(v: u128) -> u128 {
    let mut s = (v as f64).sqrt() as u128;
    while s * s > v {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= v {
        s += 1;
    }
    s
}

pub fn is_square_i128(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let s = isqrt_u128(v as u128);
    (s * s == v as u128).then_some(s as i128)
}

/// `8x² + linear·x + constant` for each of the six membership criteria.
pub fn radicand(kind: SequenceKind) -> (i128, i128) {
    use SequenceKind::*;
    match kind {
        Balancing => (0, 1),
        Cobalancing => (8, 1),
        AlmostBalancingFirst => (0, 9),
        AlmostBalancingSecond => (0, -7),
        AlmostCobalancingFirst => (8, 9),
        AlmostCobalancingSecond => (8, -7),
        _ => panic!("{kind} has no membership criterion"),
    }
}

const WHEEL: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];
const FILTER: [u64; 14] = [29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83];

fn squares_mod(p: u64) -> Vec<bool> {
    let mut sq = vec![false; p as usize];
    for r in 0..p {
        sq[(r * r % p) as usize] = true;
    }
    sq
}

/// For each residue `x mod p`, whether `8x² + lx + c` is a square mod `p`.
fn admissible_mod(p: u64, (l, c): (i128, i128)) -> Vec<bool> {
    let sq = squares_mod(p);
    (0..p)
        .map(|x| {
            let x = x as i128;
            let v = (8 * x * x + l * x + c).rem_euclid(p as i128);
            sq[v as usize]
        })
        .collect()
}

/// Every `x` in `0..=limit` whose radicand is a perfect square.
///
/// Residues modulo `3·5·…·23` that fail a quadratic-residue test are
/// discarded once; survivors are swept through the whole range, filtered by
/// the primes 29–83, and confirmed with an exact `u128` square root.
pub fn members_upto(kind: SequenceKind, limit: u64) -> Vec<u64> {
    let rad = radicand(kind);

    let mut modulus = 1u64;
    let mut residues = vec![0u64];
    for p in WHEEL {
        let ok = admissible_mod(p, rad);
        let mut next = Vec::with_capacity(residues.len() * p as usize / 2 + 1);
        for t in 0..p {
            for &r in &residues {
                let x = r + t * modulus;
                if ok[(x % p) as usize] {
                    next.push(x);
                }
            }
        }
        modulus *= p;
        residues = next;
    }
    residues.sort_unstable();

    let admissible: Vec<Vec<u8>> = FILTER
        .iter()
        .map(|&q| admissible_mod(q, rad).into_iter().map(u8::from).collect())
        .collect();
    let residues_mod: Vec<[u8; FILTER.len()]> = residues
        .iter()
        .map(|r| core::array::from_fn(|f| (r % FILTER[f]) as u8))
        .collect();

    let mut found = Vec::new();
    let mut base = 0u64;
    while base <= limit {
        // Rotate each table so it can be indexed by the residue of `r` alone.
        let shifted: [[u8; 128]; FILTER.len()] = core::array::from_fn(|f| {
            let q = FILTER[f];
            let s = base % q;
            core::array::from_fn(|j| {
                if (j as u64) < q {
                    admissible[f][((s + j as u64) % q) as usize]
                } else {
                    0
                }
            })
        });
        for (r, rm) in residues.iter().zip(&residues_mod) {
            // No early exit: a data-dependent branch per prime costs more
            // than the arithmetic it would skip.
            let pass = (0..FILTER.len()).fold(1u8, |acc, f| acc & shifted[f][rm[f] as usize]);
            if pass == 0 {
                continue;
            }
            let x = base + r;
            if x > limit {
                continue;
            }
            let xi = x as i128;
            if is_square_i128(8 * xi * xi + rad.0 * xi + rad.1).is_some() {
                found.push(x);
            }
        }
        base += modulus;
    }
    found.sort_unstable();
    found
}

/// All `(x, y)` with `|x| ≤ bound` and `ax² + bxy + cy² = m`, by solving the
/// quadratic in `y` for each `x`. Needs `c ≠ 0` or `b ≠ 0`.
pub fn pell_brute(a: i64, b: i64, c: i64, m: i64, bound: i64) -> BTreeSet<(i128, i128)> {
    let (a, b, c, m) = (a as i128, b as i128, c as i128, m as i128);
    let mut out = BTreeSet::new();
    for x in -(bound as i128)..=bound as i128 {
        let k = a * x * x - m;
        if c == 0 {
            if b * x != 0 && (-k) % (b * x) == 0 {
                out.insert((x, -k / (b * x)));
            }
            continue;
        }
        let Some(s) = is_square_i128(b * b * x * x - 4 * c * k) else {
            continue;
        };
        for root in [s, -s] {
            let top = -b * x + root;
            if top % (2 * c) == 0 {
                out.insert((x, top / (2 * c)));
            }
        }
    }
    out
}

/// A table with one term moved by `delta`.
pub struct Perturbed {
    pub table: SequenceTable,
    pub kind: SequenceKind,
    pub n: u64,
    pub delta: i64,
}

impl TermSource for Perturbed {
    fn term(&self, kind: SequenceKind, n: u64) -> BigInt {
        let x = self.table.term(kind, n);
        if kind == self.kind && n == self.n {
            x + self.delta
        } else {
            x
        }
    }
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
