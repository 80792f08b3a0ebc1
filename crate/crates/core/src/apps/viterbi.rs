//! Max-product decoding of hidden Markov models, with optional control
//! inputs driving saliency-style state evolution.
//!
//! The decoder evolves x_i(t) = (⋁_j a_ji ⋆ x_j(t−1)) ⋆ p_i(t) from
//! x_i(0) = π_i ⋆ p_i(0) and reads the score off y(T) = ⋁_i x_i(T); the
//! best state sequence is recovered by backtracking stored argmaxes
//! (smallest state index wins ties). The same recursion runs over any
//! clodum whose ⋆ distributes over ∨, which covers the max-plus log domain
//! as well as probabilities under product or min.
//!
//! The controlled variant adds an input term:
//! x_i(t) = (⋁_j a_ji ⋆ x_j(t−1)) ⋆ p_i(t) ∨ ⋁_j b_ij ⋆ u_j(t), and fuses
//! outputs as y(t) = ⋁_i c_i ⋆ x_i(t) ∨ ⋁_j d_j ⋆ u_j(t).

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::system::{Mode, System, Trajectory};
use std::sync::Arc;

/// Hidden Markov model with likelihoods tabulated per time step.
#[derive(Debug, Clone)]
pub struct HmmSpec {
    clodum: Clodum,
    /// a_ij = Pr(state j | state i), n×n.
    transition: Matrix,
    /// Initial weights π_i.
    initial: Vector,
    /// Row t holds p_i(t) for i = 1..n; rows 0..=T.
    likelihoods: Matrix,
}

impl HmmSpec {
    pub fn new(transition: Matrix, initial: Vector, likelihoods: Matrix) -> Result<Self> {
        let clodum = transition.clodum();
        let n = transition.rows();
        if !transition.is_square() {
            return Err(Error::NotSquare {
                rows: transition.rows(),
                cols: transition.cols(),
            });
        }
        if initial.len() != n || likelihoods.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "transition is {n}x{n}, initial has {}, likelihood rows have {}",
                initial.len(),
                likelihoods.cols()
            )));
        }
        if initial.clodum() != clodum || likelihoods.clodum() != clodum {
            return Err(Error::CloudmMismatch(
                clodum.name(),
                initial.clodum().name(),
            ));
        }
        if likelihoods.rows() == 0 {
            return Err(Error::InvalidArgument(
                "need likelihoods for at least t = 0".into(),
            ));
        }
        Ok(HmmSpec {
            clodum,
            transition,
            initial,
            likelihoods,
        })
    }

    pub fn states(&self) -> usize {
        self.transition.rows()
    }

    pub fn clodum(&self) -> Clodum {
        self.clodum
    }

    pub fn max_time(&self) -> usize {
        self.likelihoods.rows() - 1
    }

    fn likelihood(&self, t: usize, i: usize) -> Scalar {
        self.likelihoods.get(t, i)
    }
}

#[derive(Debug, Clone)]
pub struct ViterbiResult {
    pub score: Scalar,
    /// Best state sequence s(0..=T), 0-based states.
    pub path: Vec<usize>,
    /// State vectors x(0..=T) and running outputs y(t) = ⋁_i x_i(t).
    pub trajectory: Trajectory,
}

/// Decode the best state sequence over t = 0..=t_end.
pub fn viterbi(hmm: &HmmSpec, t_end: usize) -> Result<ViterbiResult> {
    if t_end > hmm.max_time() {
        return Err(Error::InvalidArgument(format!(
            "horizon {t_end} exceeds likelihood table (rows 0..={})",
            hmm.max_time()
        )));
    }
    let c = hmm.clodum;
    let n = hmm.states();
    let mut states = Vec::with_capacity(t_end + 1);
    let mut outputs = Vec::with_capacity(t_end + 1);
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(t_end);

    let x0 = Vector::new(
        c,
        (0..n)
            .map(|i| c.mul(hmm.initial.get(i), hmm.likelihood(0, i)))
            .collect(),
    );
    outputs.push(Vector::new(c, vec![x0.sup()]));
    states.push(x0);

    for t in 1..=t_end {
        let prev = &states[t - 1];
        let mut x = Vec::with_capacity(n);
        let mut arg = Vec::with_capacity(n);
        for i in 0..n {
            let mut best = Scalar::Bottom;
            let mut best_j = 0usize;
            for j in 0..n {
                let cand = c.mul(hmm.transition.get(j, i), prev.get(j));
                if cand.total_cmp(&best) == std::cmp::Ordering::Greater {
                    best = cand;
                    best_j = j;
                }
            }
            x.push(c.mul(best, hmm.likelihood(t, i)));
            arg.push(best_j);
        }
        let xv = Vector::new(c, x);
        outputs.push(Vector::new(c, vec![xv.sup()]));
        states.push(xv);
        back.push(arg);
    }

    // final state: argmax of x(T), smallest index on ties
    let last = &states[t_end];
    let mut s = 0usize;
    for i in 1..n {
        if last.get(i).total_cmp(&last.get(s)) == std::cmp::Ordering::Greater {
            s = i;
        }
    }
    let score = last.get(s);
    let mut path = vec![s; t_end + 1];
    for t in (1..=t_end).rev() {
        path[t - 1] = back[t - 1][path[t]];
    }

    Ok(ViterbiResult {
        score,
        path,
        trajectory: Trajectory { states, outputs },
    })
}

/// Saliency-style controlled decoder: the Viterbi recursion plus an input
/// dilation, with configurable output fusion weights.
#[derive(Debug, Clone)]
pub struct SaliencySystem {
    pub hmm: HmmSpec,
    /// Input gains b_ij, n×m.
    pub input_gains: Matrix,
    /// u_j(t) per row t = 0..=T, columns j = 1..m.
    pub inputs: Matrix,
    /// Output fusion weights for states (length n) and inputs (length m).
    pub output_state_weights: Vector,
    pub output_input_weights: Vector,
}

impl SaliencySystem {
    pub fn new(
        hmm: HmmSpec,
        input_gains: Matrix,
        inputs: Matrix,
        output_state_weights: Vector,
        output_input_weights: Vector,
    ) -> Result<Self> {
        let n = hmm.states();
        let m = input_gains.cols();
        if input_gains.rows() != n
            || inputs.cols() != m
            || output_state_weights.len() != n
            || output_input_weights.len() != m
        {
            return Err(Error::DimensionMismatch(
                "saliency system blocks disagree on n or m".into(),
            ));
        }
        Ok(SaliencySystem {
            hmm,
            input_gains,
            inputs,
            output_state_weights,
            output_input_weights,
        })
    }

    fn input_at(&self, t: usize) -> Vector {
        Vector::new(
            self.hmm.clodum,
            (0..self.inputs.cols())
                .map(|j| self.inputs.get(t, j))
                .collect(),
        )
    }

    /// One recursion step from x(t−1) to x(t).
    pub fn step(&self, x_prev: &Vector, t: usize) -> Result<Vector> {
        let c = self.hmm.clodum;
        let n = self.hmm.states();
        if x_prev.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "state has length {}, expected {n}",
                x_prev.len()
            )));
        }
        let u = self.input_at(t);
        let mut x = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Scalar::Bottom;
            for j in 0..n {
                acc = acc.join(c.mul(self.hmm.transition.get(j, i), x_prev.get(j)));
            }
            acc = c.mul(acc, self.hmm.likelihood(t, i));
            for j in 0..u.len() {
                acc = acc.join(c.mul(self.input_gains.get(i, j), u.get(j)));
            }
            x.push(acc);
        }
        Ok(Vector::new(c, x))
    }

    /// Weighted max-⋆ fusion y(t) = ⋁_i c_i ⋆ x_i(t) ∨ ⋁_j d_j ⋆ u_j(t).
    pub fn output(&self, x: &Vector, t: usize) -> Scalar {
        let c = self.hmm.clodum;
        let u = self.input_at(t);
        let mut acc = Scalar::Bottom;
        for i in 0..x.len() {
            acc = acc.join(c.mul(self.output_state_weights.get(i), x.get(i)));
        }
        for j in 0..u.len() {
            acc = acc.join(c.mul(self.output_input_weights.get(j), u.get(j)));
        }
        acc
    }

    /// Iterate the step from x(0) = π ⋆ p(0) out to t_end.
    pub fn run(&self, t_end: usize) -> Result<(Vec<Vector>, Vec<Scalar>)> {
        let c = self.hmm.clodum;
        let n = self.hmm.states();
        let mut x = Vector::new(
            c,
            (0..n)
                .map(|i| c.mul(self.hmm.initial.get(i), self.hmm.likelihood(0, i)))
                .collect(),
        );
        let mut states = vec![x.clone()];
        let mut outputs = vec![self.output(&x, 0)];
        for t in 1..=t_end {
            x = self.step(&x, t)?;
            states.push(x.clone());
            outputs.push(self.output(&x, t));
        }
        Ok((states, outputs))
    }

    /// The same evolution as a time-varying state-space system with
    /// A(t) = [a_ji ⋆ p_i(t)] and B = input gains.
    pub fn to_system(&self) -> System {
        let c = self.hmm.clodum;
        let n = self.hmm.states();
        let m = self.input_gains.cols();
        let transition = self.hmm.transition.clone();
        let likelihoods = self.hmm.likelihoods.clone();
        let max_t = self.hmm.max_time() as i64;
        let a = Arc::new(move |t: i64| {
            let t = t.clamp(0, max_t) as usize;
            let mut out = Matrix::bottoms(c, n, n);
            for i in 0..n {
                for j in 0..n {
                    out.set(i, j, c.mul(transition.get(j, i), likelihoods.get(t, i)));
                }
            }
            out
        });
        let gains = self.input_gains.clone();
        let b = Arc::new(move |_t: i64| gains.clone());
        let cw = self.output_state_weights.clone();
        let c_mat = Arc::new(move |_t: i64| {
            let mut out = Matrix::bottoms(c, 1, n);
            for i in 0..n {
                out.set(0, i, cw.get(i));
            }
            out
        });
        let dw = self.output_input_weights.clone();
        let d_mat = Arc::new(move |_t: i64| {
            let mut out = Matrix::bottoms(c, 1, m);
            for j in 0..m {
                out.set(0, j, dw.get(j));
            }
            out
        });
        System::time_varying(c, Mode::Max, n, m, 1, a, b, c_mat, d_mat)
    }
}
