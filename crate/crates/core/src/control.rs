//! Reachability and observability for constant max-⋆ systems, reduced to
//! the one-sided equation solver.
//!
//! The k-step controllability matrix stacks the input propagation blocks
//! side by side, C_k = [B | A⊠B | … | A^(k−1)⊠B]; the observability matrix
//! stacks C⊠A, …, C⊠A^(k) on top of each other. Control synthesis and
//! initial-state estimation are then greatest-subsolution problems.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::solve::{solve_max, SolveReport};
use crate::system::{Mode, System};

/// k-step controllability matrix, n×(k·p). Block s (1-based, leftmost
/// first) is A^(s−1) ⊠ B and multiplies the s-th component block of the
/// control sequence.
pub fn controllability_matrix(sys: &System, k: usize) -> Result<Matrix> {
    if sys.mode() != Mode::Max {
        return Err(Error::Unsupported(
            "controllability matrix is defined for max-systems".into(),
        ));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("need k >= 1 steps".into()));
    }
    let a = sys.a_const()?;
    let b = sys.b_const()?;
    let (n, p) = (sys.state_dim(), sys.input_dim());
    let mut out = Matrix::bottoms(sys.clodum(), n, k * p);
    let mut block = b.clone();
    for s in 0..k {
        out.paste(0, s * p, &block);
        block = a.max_mul(&block)?;
    }
    Ok(out)
}

/// k-step observability matrix, (k·q)×n: rows C⊠A, …, C⊠A^(k).
pub fn observability_matrix(sys: &System, k: usize) -> Result<Matrix> {
    if sys.mode() != Mode::Max {
        return Err(Error::Unsupported(
            "observability matrix is defined for max-systems".into(),
        ));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("need k >= 1 steps".into()));
    }
    let a = sys.a_const()?;
    let c = sys.c_const()?;
    let (n, q) = (sys.state_dim(), sys.output_dim());
    let mut out = Matrix::bottoms(sys.clodum(), k * q, n);
    let mut block = c.max_mul(a)?;
    for s in 0..k {
        out.paste(s * q, 0, &block);
        if s + 1 < k {
            block = block.max_mul(a)?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ReachReport {
    /// Greatest (sub)solution of C_k ⊠ u = target and its diagnostics.
    /// `exact` means weakly reachable.
    pub solve: SolveReport,
    /// When x(0) was supplied: whether A^(k)⊠x(0) ∨ achieved equals the
    /// target, i.e. the free motion does not spoil the reached state.
    pub with_free_motion_exact: Option<bool>,
}

/// Synthesize a k-step control sequence driving the state to `target`.
pub fn reach(
    sys: &System,
    k: usize,
    target: &Vector,
    x0: Option<&Vector>,
    tol: f64,
) -> Result<ReachReport> {
    let ck = controllability_matrix(sys, k)?;
    let solve = solve_max(&ck, target, tol)?;
    let with_free_motion_exact = match x0 {
        None => None,
        Some(x0) => {
            let free = sys.a_const()?.power(k)?.max_mul_vec(x0)?;
            let total = free.join(&solve.achieved)?;
            Some(total.approx_eq(target, tol))
        }
    };
    Ok(ReachReport {
        solve,
        with_free_motion_exact,
    })
}

/// Estimate the greatest initial state consistent with the stacked output
/// observations y(1..k): the largest x̂(0) with O_k ⊠ x̂(0) ≤ y.
pub fn observe(sys: &System, k: usize, y_stacked: &Vector, tol: f64) -> Result<SolveReport> {
    let ok = observability_matrix(sys, k)?;
    solve_max(&ok, y_stacked, tol)
}
