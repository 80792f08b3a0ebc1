//! Residuation solvers for the one-sided equations A ⊠ x = b and A ⊠′ y = b.
//!
//! The adjoint erosion ε_A(b) is the supremum of all subsolutions
//! {x : A⊠x ≤ b}; it is the greatest exact solution when one exists and
//! otherwise the greatest subsolution, minimizing both the ℓ∞ and ℓ1
//! residual subject to A⊠x ≤ b. The achieved vector δ_A(ε_A(b)) is the
//! lattice opening of b onto the max-⋆ span of the columns of A. The dual
//! solver returns the smallest supersolution of the min-⋆′ equation.

use crate::error::Result;
use crate::linalg::{Matrix, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Greatest subsolution (primal) or smallest supersolution (dual).
    pub solution: Vector,
    /// A ⊠ solution (primal) or A ⊠′ solution (dual).
    pub achieved: Vector,
    /// Whether achieved equals b within tolerance.
    pub exact: bool,
    /// ℓ∞ residual over coordinates where b is finite.
    pub residual_linf: f64,
    /// ℓ1 residual over coordinates where b is finite.
    pub residual_l1: f64,
}

fn residuals(achieved: &Vector, b: &Vector, tol: f64) -> (bool, f64, f64) {
    let c = b.clodum();
    let mut exact = true;
    let mut linf: f64 = 0.0;
    let mut l1: f64 = 0.0;
    for (got, want) in achieved.iter().zip(b.iter()) {
        if !got.approx_eq(*want, tol) {
            exact = false;
        }
        // sentinel coordinates of b never contribute to the norms
        if want.is_finite() {
            let diff = (c.to_f64(*got) - c.to_f64(*want)).abs();
            linf = linf.max(diff);
            l1 += diff;
        }
    }
    (exact, linf, l1)
}

/// Greatest subsolution of A ⊠ x = b.
pub fn solve_max(a: &Matrix, b: &Vector, tol: f64) -> Result<SolveReport> {
    let solution = a.adjoint_erosion_vec(b)?;
    let achieved = a.max_mul_vec(&solution)?;
    let (exact, residual_linf, residual_l1) = residuals(&achieved, b, tol);
    Ok(SolveReport {
        solution,
        achieved,
        exact,
        residual_linf,
        residual_l1,
    })
}

/// Smallest supersolution of A ⊠′ y = b.
pub fn solve_min(a: &Matrix, b: &Vector, tol: f64) -> Result<SolveReport> {
    let solution = a.adjoint_dilation_vec(b)?;
    let achieved = a.min_mul_vec(&solution)?;
    let (exact, residual_linf, residual_l1) = residuals(&achieved, b, tol);
    Ok(SolveReport {
        solution,
        achieved,
        exact,
        residual_linf,
        residual_l1,
    })
}
