//! Fuzzy Markov chains: state evolution x(t+1) = A ⊠ x(t) with A = Pᵀ over
//! a t-norm clodum (min or product) on [0,1].
//!
//! Max-t-norm powers of A either converge in finitely many steps,
//! A^(τ+1) = A^(τ), or eventually oscillate with a finite period. With a
//! unit diagonal the powers increase monotonically and Γ(A) = A^(n), whose
//! columns are stationary solutions (eigenvectors for λ = 1); the chain is
//! ergodic when the limit matrix has identical columns.

use crate::clodum::Clodum;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::spectral::{eigen_check, metric_matrix};

/// Default cap on the number of powers examined for repetition.
pub const DEFAULT_MAX_POWERS: usize = 512;

#[derive(Debug, Clone)]
pub struct FmcSpec {
    /// Transition matrix P (row i: out of state i), entries in [0,1].
    pub p: Matrix,
    /// A = Pᵀ drives the state evolution.
    pub a: Matrix,
}

impl FmcSpec {
    /// `tnorm` selects the multiplication: max-min or product-tnorm.
    pub fn new(p: Matrix, tnorm: Clodum) -> Result<Self> {
        if !matches!(tnorm, Clodum::MaxMin | Clodum::ProductTnorm) {
            return Err(Error::Unsupported(format!(
                "fuzzy Markov chains use the max-min or product t-norm, not {tnorm}",
            )));
        }
        if p.clodum() != tnorm {
            return Err(Error::CloudmMismatch(tnorm.name(), p.clodum().name()));
        }
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        let a = p.transpose();
        Ok(FmcSpec { p, a })
    }

    pub fn states(&self) -> usize {
        self.a.rows()
    }
}

#[derive(Debug, Clone)]
pub struct FmcReport {
    /// A^(1), A^(2), … up to the detected repetition (inclusive).
    pub powers: Vec<Matrix>,
    /// First power index whose tail is periodic; `period` = 1 means the
    /// powers converged with A^(tau+1) = A^(tau).
    pub tau: usize,
    /// 0 when no repetition was found within the power cap.
    pub period: usize,
    /// Distinct fixed points A ⊠ x = x harvested from the limit matrix.
    pub stationary: Vec<Vector>,
    /// Converged and all limit columns identical.
    pub ergodic: bool,
    /// Metric matrix Γ(A) = A^(n) when the diagonal is all ones.
    pub gamma: Option<Matrix>,
    pub unit_diagonal: bool,
}

/// Iterate max-⋆ powers of A until a repetition is detected (within
/// `max_powers`) and harvest stationary solutions.
pub fn fmc_analyze(spec: &FmcSpec, max_powers: usize, tol: f64) -> Result<FmcReport> {
    let a = &spec.a;
    let c = a.clodum();
    let n = spec.states();

    let mut powers: Vec<Matrix> = vec![a.clone()];
    let mut tau = max_powers;
    let mut period = 0usize;
    'outer: while powers.len() < max_powers {
        let next = a.max_mul(powers.last().expect("nonempty"))?;
        for (idx, earlier) in powers.iter().enumerate() {
            if next.approx_eq(earlier, tol) {
                tau = idx + 1;
                period = powers.len() + 1 - tau;
                powers.push(next);
                break 'outer;
            }
        }
        powers.push(next);
    }

    let unit_diagonal = (0..n).all(|i| a.get(i, i).is_top());
    let gamma = if unit_diagonal {
        let (g, converged) = metric_matrix(a, tol)?;
        debug_assert!(converged);
        // with a unit diagonal the join of powers collapses onto A^(n)
        debug_assert!(a.power(n)?.approx_eq(&g, tol));
        Some(g)
    } else {
        None
    };

    let converged = period == 1;
    let limit = if converged {
        Some(&powers[tau - 1])
    } else {
        None
    };

    let mut stationary: Vec<Vector> = Vec::new();
    let source = gamma.as_ref().or(limit);
    if let Some(m) = source {
        for j in 0..n {
            let col = m.column(j);
            if eigen_check(a, &col, c.unit(), tol)?
                && !stationary.iter().any(|s| s.approx_eq(&col, tol))
            {
                stationary.push(col);
            }
        }
    }

    let ergodic = match limit {
        Some(m) => {
            let first = m.column(0);
            (1..n).all(|j| m.column(j).approx_eq(&first, tol))
        }
        None => false,
    };

    Ok(FmcReport {
        powers,
        tau,
        period,
        stationary,
        ergodic,
        gamma,
        unit_diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clodum::DEFAULT_TOLERANCE as TOL;

    fn mm(rows: &[Vec<f64>]) -> Matrix {
        Matrix::from_rows(Clodum::MaxMin, rows).unwrap()
    }

    #[test]
    fn worked_three_state_chain() {
        // P = Aᵀ so that A matches the worked max-min instance
        let a_target = mm(&[
            vec![1.0, 0.4, 0.0],
            vec![0.3, 1.0, 0.5],
            vec![0.7, 0.2, 1.0],
        ]);
        let spec = FmcSpec::new(a_target.transpose(), Clodum::MaxMin).unwrap();
        assert!(spec.a.approx_eq(&a_target, TOL));
        let rep = fmc_analyze(&spec, 64, TOL).unwrap();
        assert_eq!(rep.tau, 2);
        assert_eq!(rep.period, 1);
        assert!(rep.unit_diagonal);
        let gamma = rep.gamma.as_ref().unwrap();
        let expect = mm(&[
            vec![1.0, 0.4, 0.4],
            vec![0.5, 1.0, 0.5],
            vec![0.7, 0.4, 1.0],
        ]);
        assert!(gamma.approx_eq(&expect, TOL));
        // the first metric column is the known fixed point
        let v = Vector::from_f64s(Clodum::MaxMin, &[1.0, 0.5, 0.7]).unwrap();
        assert!(rep.stationary.iter().any(|s| s.approx_eq(&v, TOL)));
        // columns of Γ(A) differ, so not ergodic
        assert!(!rep.ergodic);
    }

    #[test]
    fn identity_chain() {
        let spec = FmcSpec::new(Matrix::identity(Clodum::MaxMin, 3), Clodum::MaxMin).unwrap();
        let rep = fmc_analyze(&spec, 16, TOL).unwrap();
        assert_eq!(rep.tau, 1);
        assert_eq!(rep.period, 1);
        // all unit vectors are stationary
        assert_eq!(rep.stationary.len(), 3);
        for (j, s) in rep.stationary.iter().enumerate() {
            assert!(s.get(j).is_top());
        }
        assert!(!rep.ergodic);
    }

    #[test]
    fn unit_diagonal_monotone_powers() {
        let a = mm(&[
            vec![1.0, 0.2, 0.6, 0.1],
            vec![0.5, 1.0, 0.3, 0.4],
            vec![0.1, 0.8, 1.0, 0.2],
            vec![0.3, 0.1, 0.9, 1.0],
        ]);
        let spec = FmcSpec::new(a.transpose(), Clodum::MaxMin).unwrap();
        let rep = fmc_analyze(&spec, 32, TOL).unwrap();
        assert!(rep.unit_diagonal);
        for w in rep.powers.windows(2) {
            assert!(w[0].le(&w[1]) || w[0].approx_eq(&w[1], TOL));
        }
        // convergence no later than step n
        assert!(rep.tau <= 4);
        let n4 = spec.a.power(4).unwrap();
        let n5 = spec.a.power(5).unwrap();
        assert!(n4.approx_eq(&n5, TOL));
    }

    #[test]
    fn periodic_chain_detected() {
        // a permutation matrix cycles with period 2 and never converges
        let p = mm(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let spec = FmcSpec::new(p, Clodum::MaxMin).unwrap();
        let rep = fmc_analyze(&spec, 16, TOL).unwrap();
        assert_eq!(rep.period, 2);
        assert_eq!(rep.tau, 1);
        assert!(!rep.ergodic);
        assert!(rep.stationary.is_empty());
    }

    #[test]
    fn product_tnorm_chain() {
        let c = Clodum::ProductTnorm;
        let p = Matrix::from_rows(
            c,
            &[vec![1.0, 0.5], vec![0.25, 1.0]],
        )
        .unwrap();
        let spec = FmcSpec::new(p, c).unwrap();
        let rep = fmc_analyze(&spec, 64, TOL).unwrap();
        assert_eq!(rep.period, 1);
        assert!(rep.unit_diagonal);
        assert!(!rep.stationary.is_empty());
    }

    #[test]
    fn ergodic_chain_has_identical_columns() {
        // strongly mixing chain without unit diagonal
        let p = mm(&[vec![0.5, 0.5], vec![0.5, 0.5]]);
        let spec = FmcSpec::new(p, Clodum::MaxMin).unwrap();
        let rep = fmc_analyze(&spec, 16, TOL).unwrap();
        assert_eq!(rep.period, 1);
        assert!(rep.ergodic);
    }

    /// Chains beyond the cycle-enumeration limit still analyze fine: the
    /// unit-top algebra guarantees λ ≤ e without enumeration.
    #[test]
    fn large_chain_analyzes() {
        let c = Clodum::MaxMin;
        let n = 20usize;
        let mut p = Matrix::identity(c, n);
        for i in 0..n {
            let v = 0.3 + 0.6 * ((i * 7 % 10) as f64) / 10.0;
            p.set(i, (i + 3) % n, c.scalar(v).unwrap());
        }
        let spec = FmcSpec::new(p, c).unwrap();
        let rep = fmc_analyze(&spec, 64, TOL).unwrap();
        assert!(rep.unit_diagonal);
        assert_eq!(rep.period, 1);
        assert!(rep.tau <= n);
        assert!(!rep.stationary.is_empty());
    }

    #[test]
    fn rejects_wrong_clodum() {
        let p = Matrix::from_rows(Clodum::MaxPlus, &[vec![0.5]]).unwrap();
        assert!(FmcSpec::new(p, Clodum::MaxPlus).is_err());
    }
}
