//! Recursive max-sum and min-sum filters.
//!
//! A max-sum filter obeys y(t) = (⋁_i a_i + y(t−i)) ∨ (⋁_j b_j + u(t−j));
//! the min-sum dual swaps ∨ for ∧ with +′. For b-taps limited to b0 the
//! recursion has a state-space form with a companion A matrix whose
//! principal eigenvalue is ⋁_k a_k/k, which decides stability: the filter
//! is upper-stable iff every a_k is non-positive and absolutely stable if
//! additionally some a_k is zero.

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::system::{Mode, System};

#[derive(Debug, Clone)]
pub struct FilterSpec {
    /// Feedback coefficients a_1..a_n (max-plus scalars).
    pub feedback: Vec<Scalar>,
    /// Feedforward coefficients b_0..b_m.
    pub feedforward: Vec<Scalar>,
    pub mode: Mode,
}

impl FilterSpec {
    pub fn new(feedback: Vec<Scalar>, feedforward: Vec<Scalar>, mode: Mode) -> Result<Self> {
        let null = mode.null();
        if feedback.iter().chain(&feedforward).all(|&s| s == null) {
            return Err(Error::InvalidArgument(
                "filter needs at least one non-null coefficient".into(),
            ));
        }
        if feedforward.is_empty() {
            return Err(Error::InvalidArgument(
                "filter needs at least b0".into(),
            ));
        }
        Ok(FilterSpec {
            feedback,
            feedforward,
            mode,
        })
    }

    pub fn order(&self) -> usize {
        self.feedback.len()
    }

    /// Companion state-space form (only for m = 0). The state carries the
    /// last n outputs with x_n(t) = y(t), so the simulated output equals
    /// the direct recursion sample for sample.
    pub fn to_state_space(&self) -> Result<System> {
        if self.feedforward.len() != 1 {
            return Err(Error::Unsupported(
                "state-space form requires m = 0 (single b0 tap); use direct recursion".into(),
            ));
        }
        let n = self.order();
        if n == 0 {
            return Err(Error::InvalidArgument("state-space form needs n >= 1".into()));
        }
        let c = Clodum::MaxPlus;
        let null = self.mode.null();
        let unit = c.unit();
        let b0 = self.feedforward[0];

        let mut a = Matrix::filled(c, n, n, null);
        for i in 0..n - 1 {
            a.set(i, i + 1, unit);
        }
        for j in 0..n {
            // last row: [a_n, a_{n-1}, …, a_1]
            a.set(n - 1, j, self.feedback[n - 1 - j]);
        }
        let mut b = Matrix::filled(c, n, 1, null);
        b.set(n - 1, 0, b0);
        let mut c_row = Matrix::filled(c, 1, n, null);
        c_row.set(0, n - 1, unit);
        let mut d = Matrix::filled(c, 1, 1, null);
        d.set(0, 0, b0);

        System::constant(c, self.mode, a, b, c_row, d)
    }

    /// Direct evaluation of the difference equation on u(0..), initially at
    /// rest (y(t) = null for t < 0).
    pub fn direct_recursion(&self, input: &[Scalar]) -> Vec<Scalar> {
        let c = Clodum::MaxPlus;
        let null = self.mode.null();
        let (fold, op): (fn(Scalar, Scalar) -> Scalar, fn(Clodum, Scalar, Scalar) -> Scalar) =
            match self.mode {
                Mode::Max => (Scalar::join, Clodum::mul),
                Mode::Min => (Scalar::meet, Clodum::dual_mul),
            };
        let mut y = vec![null; input.len()];
        for t in 0..input.len() {
            let mut acc = null;
            for (i, &ai) in self.feedback.iter().enumerate() {
                let lag = i + 1;
                let prev = if t >= lag { y[t - lag] } else { null };
                acc = fold(acc, op(c, ai, prev));
            }
            for (j, &bj) in self.feedforward.iter().enumerate() {
                let u = if t >= j { input[t - j] } else { null };
                acc = fold(acc, op(c, bj, u));
            }
            y[t] = acc;
        }
        y
    }

    /// Impulse response h(0..=t_end) by direct recursion.
    pub fn impulse_response(&self, t_end: usize) -> Vec<Scalar> {
        let c = Clodum::MaxPlus;
        let null = self.mode.null();
        let mut input = vec![null; t_end + 1];
        input[0] = match self.mode {
            Mode::Max => c.unit(),
            Mode::Min => c.dual_unit(),
        };
        self.direct_recursion(&input)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterStability {
    /// Max-sum: every a_k ≤ 0 (min-sum: every a_k ≥ 0).
    pub stable: bool,
    /// Stable and some a_k equals 0.
    pub absolutely_stable: bool,
}

/// Coefficient-level stability trichotomy for max/min-sum filters.
pub fn filter_stability(spec: &FilterSpec) -> FilterStability {
    let zero = Scalar::Finite(0.0);
    let stable = match spec.mode {
        Mode::Max => spec.feedback.iter().all(|a| a.le(zero)),
        Mode::Min => spec
            .feedback
            .iter()
            .all(|a| zero.le(*a)),
    };
    let has_zero = spec.feedback.contains(&zero);
    FilterStability {
        stable,
        absolutely_stable: stable && has_zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clodum::DEFAULT_TOLERANCE as TOL;
    use crate::linalg::Vector;
    use crate::spectral::cycle_mean_eigenvalue;

    fn scalars(vals: &[f64]) -> Vec<Scalar> {
        vals.iter()
            .map(|&v| Clodum::MaxPlus.scalar(v).unwrap())
            .collect()
    }

    #[test]
    fn companion_eigenvalue_is_max_ratio() {
        let spec = FilterSpec::new(
            scalars(&[-0.5, 0.4, -0.9]),
            scalars(&[0.0]),
            Mode::Max,
        )
        .unwrap();
        let sys = spec.to_state_space().unwrap();
        let (lambda, _) = cycle_mean_eigenvalue(sys.a_const().unwrap()).unwrap();
        let expect = (-0.5f64).max(0.4 / 2.0).max(-0.9 / 3.0);
        assert!(lambda.approx_eq(Scalar::Finite(expect), TOL));
    }

    #[test]
    fn state_space_matches_direct_recursion() {
        let spec = FilterSpec::new(
            scalars(&[-0.1, 0.2, -0.4, 0.05]),
            scalars(&[0.3]),
            Mode::Max,
        )
        .unwrap();
        let sys = spec.to_state_space().unwrap();
        let c = Clodum::MaxPlus;
        let t_end = 40;
        let input: Vec<Scalar> = (0..=t_end)
            .map(|t| {
                if t % 7 == 3 {
                    Scalar::Bottom
                } else {
                    Scalar::Finite(((t * 13) % 11) as f64 / 3.0 - 1.5)
                }
            })
            .collect();
        let direct = spec.direct_recursion(&input);
        // u(0) is null in the state-space convention; feed u(1..)
        let inputs: Vec<Vector> = input[1..]
            .iter()
            .map(|&s| Vector::new(c, vec![s]))
            .collect();
        let x0 = Vector::bottoms(c, spec.order());
        let traj = sys.simulate(&x0, &inputs, t_end).unwrap();
        // direct recursion with u(0) nulled to match
        let mut input0 = input.clone();
        input0[0] = Scalar::Bottom;
        let direct0 = spec.direct_recursion(&input0);
        for t in 0..=t_end {
            assert!(
                traj.outputs[t].get(0).approx_eq(direct0[t], TOL),
                "t={t}: {:?} vs {:?}",
                traj.outputs[t].get(0),
                direct0[t]
            );
        }
        let _ = direct;
    }

    #[test]
    fn min_sum_state_space_matches_direct() {
        let spec = FilterSpec::new(
            vec![Scalar::Finite(1.0), Scalar::Top, Scalar::Finite(0.5)],
            vec![Scalar::Finite(0.0)],
            Mode::Min,
        )
        .unwrap();
        let sys = spec.to_state_space().unwrap();
        let c = Clodum::MaxPlus;
        let t_end = 25;
        let input: Vec<Scalar> = (0..=t_end)
            .map(|t| Scalar::Finite(((t * 5) % 9) as f64 * 0.4))
            .collect();
        let mut input0 = input.clone();
        input0[0] = Scalar::Top;
        let direct = spec.direct_recursion(&input0);
        let inputs: Vec<Vector> = input[1..]
            .iter()
            .map(|&s| Vector::new(c, vec![s]))
            .collect();
        let x0 = Vector::tops(c, spec.order());
        let traj = sys.simulate(&x0, &inputs, t_end).unwrap();
        for t in 0..=t_end {
            assert!(traj.outputs[t].get(0).approx_eq(direct[t], TOL), "t={t}");
        }
    }

    #[test]
    fn envelope_detector_tracks_decaying_peak() {
        // y(t) = max(y(t−1) − 0.008, u(t))
        let spec = FilterSpec::new(scalars(&[-0.008]), scalars(&[0.0]), Mode::Max).unwrap();
        let mut input = vec![Scalar::Bottom; 50];
        input[0] = Scalar::Finite(1.0);
        let y = spec.direct_recursion(&input);
        for (t, &s) in y.iter().enumerate() {
            assert!(s.approx_eq(Scalar::Finite(1.0 - 0.008 * t as f64), TOL));
        }
        let st = filter_stability(&spec);
        assert!(st.stable);
        assert!(!st.absolutely_stable);
    }

    #[test]
    fn stability_trichotomy() {
        let stable = FilterSpec::new(scalars(&[-0.2, 0.0]), scalars(&[0.0]), Mode::Max).unwrap();
        let st = filter_stability(&stable);
        assert!(st.stable && st.absolutely_stable);
        let unstable =
            FilterSpec::new(scalars(&[-0.2, 0.3]), scalars(&[0.0]), Mode::Max).unwrap();
        assert!(!filter_stability(&unstable).stable);
    }

    #[test]
    fn feedforward_taps_need_direct_recursion() {
        let spec = FilterSpec::new(
            scalars(&[-0.5]),
            scalars(&[0.0, -1.0]),
            Mode::Max,
        )
        .unwrap();
        assert!(spec.to_state_space().is_err());
        // the direct path still works
        let y = spec.impulse_response(4);
        assert!(y[0].approx_eq(Scalar::Finite(0.0), TOL));
        assert!(y[1].approx_eq(Scalar::Finite(-0.5), TOL)); // max(a1+h(0), b1) = -0.5
    }
}
