//! Integer solutions of `ax² + bxy + cy² = m` for indefinite forms.
//!
//! Let `τ > 1` be the smallest norm-one unit of the order of discriminant
//! `Δ = b² - 4ac`, and `M` the integer matrix of multiplication by `τ`. Every
//! solution is `±[x₀ y₀]Mⁿ` for a representative `[x₀ y₀]` with
//! `0 ≤ y₀ ≤ U = |amτ/Δ|^{1/2}(1 ∓ 1/τ)`. The bound is computed exactly
//! from `U² = |am|(tr τ ∓ 2)/Δ`, and representatives come from scanning `y₀`
//! for `Δy₀² + 4am` square, or, when `U` is too large to scan, from the
//! continued-fraction solution of `s² - Δy² = 4am`.

mod form;
mod orbit;
mod reps;

pub use self::form::{orbit_matrix, OrbitMatrix, QuadraticForm};
pub use self::orbit::{
    brute_force_solutions, rep_bound, representatives, solutions, Limit, PellSolver, Sign,
    Solution, SolutionStream,
};
pub use self::reps::{RepBound, Row};
