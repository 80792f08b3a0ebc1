//! State-space dynamical systems of the max-⋆ and min-⋆′ type.
//!
//! A max-system evolves as
//!   x(t) = A(t) ⊠ x(t−1) ∨ B(t) ⊠ u(t)
//!   y(t) = C(t) ⊠ x(t) ∨ D(t) ⊠ u(t)
//! and a min-system dually with ⊠′ and ∧. Matrices may be constant or
//! supplied per time step. The input is active from t ≥ 1; u(0) is null
//! and x(0) is the effective initial condition.
//!
//! The transition matrix Φ(t2,t1) = A(t2)⊠…⊠A(t1+1) gives the homogeneous
//! solution and a closed form for the full response, which decomposes into
//! the null-input and null-state parts. Constant systems additionally have
//! an impulse response h(0) = (C⊠B) ∨ D, h(t) = C⊠A^(t)⊠B whose sup-⋆
//! convolution with the input reproduces the null-state response.

use std::fmt;
use std::sync::Arc;

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::signal::Signal;
use crate::spectral;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Max,
    Min,
}

impl Mode {
    /// The null scalar for this mode's superposition.
    pub fn null(self) -> Scalar {
        match self {
            Mode::Max => Scalar::Bottom,
            Mode::Min => Scalar::Top,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Max => "max",
            Mode::Min => "min",
        })
    }
}

/// A system matrix: constant, or a time-indexed provider.
#[derive(Clone)]
pub enum MatrixSource {
    Constant(Matrix),
    TimeVarying(Arc<dyn Fn(i64) -> Matrix + Send + Sync>),
}

impl MatrixSource {
    fn at(&self, t: i64) -> Matrix {
        match self {
            MatrixSource::Constant(m) => m.clone(),
            MatrixSource::TimeVarying(f) => f(t),
        }
    }

    fn constant(&self) -> Option<&Matrix> {
        match self {
            MatrixSource::Constant(m) => Some(m),
            MatrixSource::TimeVarying(_) => None,
        }
    }
}

impl fmt::Debug for MatrixSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixSource::Constant(m) => write!(f, "Constant({}x{})", m.rows(), m.cols()),
            MatrixSource::TimeVarying(_) => f.write_str("TimeVarying(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct System {
    clodum: Clodum,
    mode: Mode,
    a: MatrixSource,
    b: MatrixSource,
    c: MatrixSource,
    d: MatrixSource,
    n: usize,
    p: usize,
    q: usize,
}

impl System {
    pub fn constant(
        clodum: Clodum,
        mode: Mode,
        a: Matrix,
        b: Matrix,
        c: Matrix,
        d: Matrix,
    ) -> Result<Self> {
        let n = a.rows();
        let p = b.cols();
        let q = c.rows();
        let dims_ok = a.is_square()
            && b.rows() == n
            && c.cols() == n
            && d.rows() == q
            && d.cols() == p;
        if !dims_ok {
            return Err(Error::DimensionMismatch(format!(
                "system blocks A:{}x{} B:{}x{} C:{}x{} D:{}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                c.rows(),
                c.cols(),
                d.rows(),
                d.cols()
            )));
        }
        for m in [&a, &b, &c, &d] {
            if m.clodum() != clodum {
                return Err(Error::CloudmMismatch(clodum.name(), m.clodum().name()));
            }
        }
        Ok(System {
            clodum,
            mode,
            a: MatrixSource::Constant(a),
            b: MatrixSource::Constant(b),
            c: MatrixSource::Constant(c),
            d: MatrixSource::Constant(d),
            n,
            p,
            q,
        })
    }

    /// Time-varying system; providers must return matrices of the declared
    /// shapes for every queried t.
    pub fn time_varying(
        clodum: Clodum,
        mode: Mode,
        n: usize,
        p: usize,
        q: usize,
        a: Arc<dyn Fn(i64) -> Matrix + Send + Sync>,
        b: Arc<dyn Fn(i64) -> Matrix + Send + Sync>,
        c: Arc<dyn Fn(i64) -> Matrix + Send + Sync>,
        d: Arc<dyn Fn(i64) -> Matrix + Send + Sync>,
    ) -> Self {
        System {
            clodum,
            mode,
            a: MatrixSource::TimeVarying(a),
            b: MatrixSource::TimeVarying(b),
            c: MatrixSource::TimeVarying(c),
            d: MatrixSource::TimeVarying(d),
            n,
            p,
            q,
        }
    }

    pub fn clodum(&self) -> Clodum {
        self.clodum
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn state_dim(&self) -> usize {
        self.n
    }

    pub fn input_dim(&self) -> usize {
        self.p
    }

    pub fn output_dim(&self) -> usize {
        self.q
    }

    pub fn is_constant(&self) -> bool {
        self.a.constant().is_some()
            && self.b.constant().is_some()
            && self.c.constant().is_some()
            && self.d.constant().is_some()
    }

    pub fn a_const(&self) -> Result<&Matrix> {
        self.a
            .constant()
            .ok_or_else(|| Error::Unsupported("time-varying system".into()))
    }

    pub fn b_const(&self) -> Result<&Matrix> {
        self.b
            .constant()
            .ok_or_else(|| Error::Unsupported("time-varying system".into()))
    }

    pub fn c_const(&self) -> Result<&Matrix> {
        self.c
            .constant()
            .ok_or_else(|| Error::Unsupported("time-varying system".into()))
    }

    pub fn d_const(&self) -> Result<&Matrix> {
        self.d
            .constant()
            .ok_or_else(|| Error::Unsupported("time-varying system".into()))
    }

    pub fn a_at(&self, t: i64) -> Matrix {
        self.a.at(t)
    }

    /// Null input vector (⊥ for max-systems, ⊤ for min-systems).
    pub fn null_input(&self) -> Vector {
        Vector::filled(self.clodum, self.p, self.mode.null())
    }

    /// T null input vectors, for homogeneous simulation.
    pub fn null_inputs(&self, t_end: usize) -> Vec<Vector> {
        vec![self.null_input(); t_end]
    }

    fn mat_vec(&self, m: &Matrix, x: &Vector) -> Result<Vector> {
        match self.mode {
            Mode::Max => m.max_mul_vec(x),
            Mode::Min => m.min_mul_vec(x),
        }
    }

    fn mat_mat(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        match self.mode {
            Mode::Max => a.max_mul(b),
            Mode::Min => a.min_mul(b),
        }
    }

    fn vec_combine(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        match self.mode {
            Mode::Max => a.join(b),
            Mode::Min => a.meet(b),
        }
    }

    fn identity(&self) -> Matrix {
        match self.mode {
            Mode::Max => Matrix::identity(self.clodum, self.n),
            Mode::Min => Matrix::dual_identity(self.clodum, self.n),
        }
    }

    /// Transition matrix Φ(t2,t1) = A(t2) ⊠ … ⊠ A(t1+1); Φ(t,t) = I.
    /// Satisfies the semigroup property Φ(t2,t1) ⊠ Φ(t1,t0) = Φ(t2,t0).
    pub fn transition_matrix(&self, t2: i64, t1: i64) -> Result<Matrix> {
        if t2 < t1 {
            return Err(Error::InvalidArgument(format!(
                "transition matrix needs t2 >= t1, got ({t2}, {t1})"
            )));
        }
        let mut phi = self.identity();
        for t in (t1 + 1)..=t2 {
            phi = self.mat_mat(&self.a.at(t), &phi)?;
        }
        Ok(phi)
    }

    /// Run the state/output recursion for t = 0..=t_end. `inputs` holds
    /// u(1), …, u(t_end); u(0) is null by convention.
    pub fn simulate(&self, x0: &Vector, inputs: &[Vector], t_end: usize) -> Result<Trajectory> {
        if x0.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "initial state has length {}, state dimension is {}",
                x0.len(),
                self.n
            )));
        }
        if inputs.len() != t_end {
            return Err(Error::DimensionMismatch(format!(
                "expected {t_end} input vectors u(1..=T), got {}",
                inputs.len()
            )));
        }
        for u in inputs {
            if u.len() != self.p {
                return Err(Error::DimensionMismatch(format!(
                    "input vector has length {}, input dimension is {}",
                    u.len(),
                    self.p
                )));
            }
        }
        let mut states = Vec::with_capacity(t_end + 1);
        let mut outputs = Vec::with_capacity(t_end + 1);
        let u0 = self.null_input();
        let y0 = self.vec_combine(
            &self.mat_vec(&self.c.at(0), x0)?,
            &self.mat_vec(&self.d.at(0), &u0)?,
        )?;
        states.push(x0.clone());
        outputs.push(y0);
        for t in 1..=t_end {
            let u = &inputs[t - 1];
            let ti = t as i64;
            let x = self.vec_combine(
                &self.mat_vec(&self.a.at(ti), &states[t - 1])?,
                &self.mat_vec(&self.b.at(ti), u)?,
            )?;
            let y = self.vec_combine(
                &self.mat_vec(&self.c.at(ti), &x)?,
                &self.mat_vec(&self.d.at(ti), u)?,
            )?;
            states.push(x);
            outputs.push(y);
        }
        Ok(Trajectory { states, outputs })
    }

    /// Closed-form state/output response via the transition matrix:
    ///   x(t) = Φ(t,0)⊠x(0) ∨ ⋁_{k=1..t} Φ(t,k)⊠B(k)⊠u(k)
    /// evaluated independently of the recursion.
    pub fn closed_form_response(
        &self,
        x0: &Vector,
        inputs: &[Vector],
        t_end: usize,
    ) -> Result<Trajectory> {
        let mut states = Vec::with_capacity(t_end + 1);
        let mut outputs = Vec::with_capacity(t_end + 1);
        for t in 0..=t_end {
            let ti = t as i64;
            let mut x = self.transition_matrix(ti, 0)?.max_or_min_vec(self, x0)?;
            for k in 1..=t {
                let phi = self.transition_matrix(ti, k as i64)?;
                let term = self.mat_vec(
                    &self.mat_mat(&phi, &self.b.at(k as i64))?,
                    &inputs[k - 1],
                )?;
                x = self.vec_combine(&x, &term)?;
            }
            let u_t = if t == 0 {
                self.null_input()
            } else {
                inputs[t - 1].clone()
            };
            let y = self.vec_combine(
                &self.mat_vec(&self.c.at(ti), &x)?,
                &self.mat_vec(&self.d.at(ti), &u_t)?,
            )?;
            states.push(x);
            outputs.push(y);
        }
        Ok(Trajectory { states, outputs })
    }

    /// Output split into the null-input response (due to x(0) alone) and
    /// the null-state response (due to the input alone). Their ∨ (or ∧ for
    /// min-systems) is the full output.
    pub fn output_decomposition(
        &self,
        x0: &Vector,
        inputs: &[Vector],
        t_end: usize,
    ) -> Result<(Vec<Vector>, Vec<Vector>)> {
        let ni = self.simulate(x0, &self.null_inputs(t_end), t_end)?;
        let null_state = Vector::filled(self.clodum, self.n, self.mode.null());
        let ns = self.simulate(&null_state, inputs, t_end)?;
        Ok((ni.outputs, ns.outputs))
    }

    /// Impulse response of a constant system as a sequence of q×p matrices
    /// for t = 0..=t_end; h(t) is null for t < 0 by construction.
    pub fn impulse_response(&self, t_end: usize) -> Result<MatrixSignal> {
        let (a, b, c, d) = (
            self.a_const()?.clone(),
            self.b_const()?.clone(),
            self.c_const()?.clone(),
            self.d_const()?.clone(),
        );
        let mut mats = Vec::with_capacity(t_end + 1);
        let h0 = match self.mode {
            Mode::Max => c.max_mul(&b)?.join(&d)?,
            Mode::Min => c.min_mul(&b)?.meet(&d)?,
        };
        mats.push(h0);
        let mut power = self.identity();
        for _ in 1..=t_end {
            power = self.mat_mat(&a, &power)?;
            mats.push(self.mat_mat(&self.mat_mat(&c, &power)?, &b)?);
        }
        Ok(MatrixSignal {
            clodum: self.clodum,
            mats,
        })
    }
}

// small helper so closed_form_response reads naturally
trait MatVecExt {
    fn max_or_min_vec(&self, sys: &System, x: &Vector) -> Result<Vector>;
}

impl MatVecExt for Matrix {
    fn max_or_min_vec(&self, sys: &System, x: &Vector) -> Result<Vector> {
        match sys.mode {
            Mode::Max => self.max_mul_vec(x),
            Mode::Min => self.min_mul_vec(x),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    /// x(0), …, x(T)
    pub states: Vec<Vector>,
    /// y(0), …, y(T)
    pub outputs: Vec<Vector>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn approx_eq(&self, other: &Trajectory, tol: f64) -> bool {
        self.states.len() == other.states.len()
            && self
                .states
                .iter()
                .zip(&other.states)
                .all(|(a, b)| a.approx_eq(b, tol))
            && self
                .outputs
                .iter()
                .zip(&other.outputs)
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// Matrix-valued impulse response h(0..=T); SISO systems reduce to 1×1.
#[derive(Debug, Clone)]
pub struct MatrixSignal {
    clodum: Clodum,
    mats: Vec<Matrix>,
}

impl MatrixSignal {
    pub fn clodum(&self) -> Clodum {
        self.clodum
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, t: usize) -> &Matrix {
        &self.mats[t]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// Scalar signal view of a SISO response (1×1 matrices), starting at 0.
    pub fn to_signal(&self) -> Result<Signal> {
        for m in &self.mats {
            if m.rows() != 1 || m.cols() != 1 {
                return Err(Error::DimensionMismatch(
                    "impulse response is not SISO".into(),
                ));
            }
        }
        Ok(Signal::new(
            self.clodum,
            0,
            self.mats.iter().map(|m| m.get(0, 0)).collect(),
        ))
    }

    /// Largest seminorm μ over all entries at time t.
    fn seminorm_at(&self, t: usize) -> Scalar {
        self.mats[t]
            .entries()
            .fold(Scalar::Bottom, |acc, &s| acc.join(self.clodum.seminorm(s)))
    }

    /// Whether h(k+d) = λ^{⋆d} ⋆ h(k) holds for all k in k0..len−d.
    /// Returns the smallest such k0 when one exists.
    pub fn verify_period(&self, d: usize, lambda: Scalar, tol: f64) -> Option<usize> {
        if d == 0 || self.mats.len() < 2 * d {
            return None;
        }
        let c = self.clodum;
        let mut factor = c.unit();
        for _ in 0..d {
            factor = c.mul(factor, lambda);
        }
        let holds_from = |k0: usize| {
            (k0..self.mats.len() - d)
                .all(|k| self.mats[k + d].approx_eq(&self.mats[k].scale(factor), tol))
        };
        // largest k where the relation fails, plus one
        let mut k0 = 0;
        for k in (0..self.mats.len() - d).rev() {
            if !self.mats[k + d].approx_eq(&self.mats[k].scale(factor), tol) {
                k0 = k + 1;
                break;
            }
        }
        if k0 + d < self.mats.len() && holds_from(k0) {
            Some(k0)
        } else {
            None
        }
    }

    /// Smallest (d, k0) with d ≤ d_max and k0 ≤ k0_max such that the
    /// λ-scaled period-d relation holds out to the horizon.
    pub fn detect_period(
        &self,
        d_max: usize,
        k0_max: usize,
        lambda: Scalar,
        tol: f64,
    ) -> Option<(usize, usize)> {
        for d in 1..=d_max {
            if let Some(k0) = self.verify_period(d, lambda, tol) {
                if k0 <= k0_max {
                    return Some((d, k0));
                }
            }
        }
        None
    }
}

/// Period detected in an impulse response tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodInfo {
    pub k0: usize,
    pub d: usize,
}

/// Causality/stability analysis of a constant system.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub causal: bool,
    /// λ(A) for max-systems; λ′(A) for min-systems.
    pub lambda: Scalar,
    /// Sufficient-condition check: λ ≤ e with ⊤-free matrices (max mode).
    pub bibo_upper: Option<bool>,
    /// Dual check for min-systems: λ′ ≥ e′ with ⊥-free matrices.
    pub bibo_lower: Option<bool>,
    /// Only when the eigenvalue periodicity theorem applies (irreducible,
    /// some a_ii > ⊥, unique critical cycle over a clog): λ = e.
    pub absolutely_stable: Option<bool>,
    /// Supremal seminorm ⋁_t μ(h(t)) over the analysis horizon.
    pub m_h: Scalar,
    /// Heuristic divergence witness: μ(h(k)) grows monotonically through
    /// the end of the horizon.
    pub divergence_detected: bool,
    /// Smallest λ-scaled period of the response tail, if one was found.
    pub periodic: Option<PeriodInfo>,
    pub horizon: usize,
}

/// Analyze causality and stability of a constant-matrix system over a
/// horizon of max(4n², 200) steps.
pub fn check_causal_stable(sys: &System, tol: f64) -> Result<StabilityReport> {
    let n = sys.state_dim();
    let horizon = (4 * n * n).max(200);
    let a = sys.a_const()?;
    let c = sys.clodum();

    let (lambda, critical) = match sys.mode() {
        Mode::Max => spectral::cycle_mean_eigenvalue(a)?,
        Mode::Min => spectral::dual_cycle_mean(a)?,
    };

    let h = sys.impulse_response(horizon)?;

    let top_free = [sys.a_const()?, sys.b_const()?, sys.c_const()?, sys.d_const()?]
        .iter()
        .all(|m| m.entries().all(|s| !s.is_top()));
    let bottom_free = [sys.a_const()?, sys.b_const()?, sys.c_const()?, sys.d_const()?]
        .iter()
        .all(|m| m.entries().all(|s| !s.is_bottom()));

    let (bibo_upper, bibo_lower) = match sys.mode() {
        Mode::Max => (Some(lambda.le_tol(c.unit(), tol) && top_free), None),
        Mode::Min => (
            None,
            Some(c.dual_unit().le_tol(lambda, tol) && bottom_free),
        ),
    };

    // Theorem hypotheses for the absolute-stability criterion; the
    // unique-critical-cycle check needs full enumeration, so it only runs
    // at enumerable sizes
    let absolutely_stable = if sys.mode() == Mode::Max
        && c.is_clog()
        && top_free
        && n <= spectral::ENUMERATION_LIMIT
    {
        let g = spectral::PrecedenceGraph::from_matrix(a)?;
        let has_self_loop = (0..n).any(|i| !a.get(i, i).is_bottom());
        let unique_critical = critical.is_some() && {
            let mut count = 0usize;
            g.for_each_elementary_cycle(|_, weights| {
                if spectral::cycle_mean(c, weights).approx_eq(lambda, tol) {
                    count += 1;
                }
            });
            count == 1
        };
        if g.is_strongly_connected() && has_self_loop && unique_critical {
            Some(lambda.approx_eq(c.unit(), tol))
        } else {
            None
        }
    } else {
        None
    };

    let m_h = (0..h.len())
        .map(|t| h.seminorm_at(t))
        .fold(Scalar::Bottom, Scalar::join);

    // monotone-growth witness: the seminorm series is non-decreasing over
    // the back half of the horizon and strictly grows across it
    let series: Vec<Scalar> = (0..h.len()).map(|t| h.seminorm_at(t)).collect();
    let start = series.len() / 2;
    let last = *series.last().expect("non-empty series");
    let divergence_detected = series.len() >= 4
        && (start + 1..series.len()).all(|k| series[k - 1].le_tol(series[k], tol))
        && series[start].lt(last)
        && !series[start].approx_eq(last, tol);

    let periodic = h
        .detect_period(n.max(1), (n * n).max(1), lambda, tol)
        .map(|(d, k0)| PeriodInfo { k0, d });

    Ok(StabilityReport {
        causal: true,
        lambda,
        bibo_upper,
        bibo_lower,
        absolutely_stable,
        m_h,
        divergence_detected,
        periodic,
        horizon,
    })
}

/// Causality of an explicitly given impulse response signal: null before
/// its support starts, i.e. no samples other than the mode null at t < 0.
pub fn signal_causal(h: &Signal, mode: Mode) -> bool {
    let null = mode.null();
    (h.start()..0.min(h.end())).all(|t| h.value_at(t, null) == null)
}

/// Stability facts readable off an explicit impulse response over its
/// declared window (no eigenvalue is available without the matrices).
#[derive(Debug, Clone)]
pub struct ImpulseStabilityReport {
    pub causal: bool,
    /// ⋁_t h(t) over the window.
    pub sup: Scalar,
    /// ⋀_t h(t) over the window.
    pub inf: Scalar,
    /// Max mode: ⋁ h(t) < ⊤. Min mode: ⋀ h(t) > ⊥.
    pub bibo: bool,
    /// ⋁ μ(h(t)) over the support.
    pub m_h: Scalar,
}

/// Analyze an explicitly given (dual) impulse response signal.
pub fn check_impulse_response(h: &Signal, mode: Mode) -> ImpulseStabilityReport {
    let c = h.clodum();
    let null = mode.null();
    let trimmed = h.trimmed(null);
    let sup = trimmed
        .samples()
        .iter()
        .copied()
        .fold(Scalar::Bottom, Scalar::join);
    let inf = trimmed
        .samples()
        .iter()
        .copied()
        .fold(Scalar::Top, Scalar::meet);
    let bibo = match mode {
        Mode::Max => !sup.is_top(),
        Mode::Min => !inf.is_bottom(),
    };
    let m_h = trimmed
        .samples()
        .iter()
        .filter(|s| **s != null)
        .fold(Scalar::Bottom, |acc, &s| acc.join(c.seminorm(s)));
    ImpulseStabilityReport {
        causal: signal_causal(h, mode),
        sup,
        inf,
        bibo,
        m_h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clodum::DEFAULT_TOLERANCE as TOL;
    use crate::signal::sup_convolve;

    const NEG: f64 = f64::NEG_INFINITY;

    fn mp(rows: &[Vec<f64>]) -> Matrix {
        Matrix::from_rows(Clodum::MaxPlus, rows).unwrap()
    }

    fn first_order_filter(a1: f64) -> System {
        // y(t) = max(y(t−1) + a1, u(t))
        let c = Clodum::MaxPlus;
        System::constant(
            c,
            Mode::Max,
            mp(&[vec![a1]]),
            mp(&[vec![0.0]]),
            mp(&[vec![0.0]]),
            mp(&[vec![0.0]]),
        )
        .unwrap()
    }

    #[test]
    fn homogeneous_solution_is_matrix_power() {
        let c = Clodum::MaxPlus;
        let a = mp(&[vec![0.1, -0.4], vec![0.3, NEG]]);
        let sys = System::constant(
            c,
            Mode::Max,
            a.clone(),
            Matrix::bottoms(c, 2, 1),
            Matrix::identity(c, 2),
            Matrix::bottoms(c, 2, 1),
        )
        .unwrap();
        let x0 = Vector::from_f64s(c, &[1.0, 0.0]).unwrap();
        let traj = sys.simulate(&x0, &sys.null_inputs(5), 5).unwrap();
        for t in 0..=5 {
            let expect = a.power(t).unwrap().max_mul_vec(&x0).unwrap();
            assert!(traj.states[t].approx_eq(&expect, TOL));
        }
    }

    #[test]
    fn all_bottom_system_stays_bottom() {
        let c = Clodum::MaxPlus;
        let sys = System::constant(
            c,
            Mode::Max,
            Matrix::bottoms(c, 2, 2),
            Matrix::bottoms(c, 2, 1),
            Matrix::bottoms(c, 1, 2),
            Matrix::bottoms(c, 1, 1),
        )
        .unwrap();
        let x0 = Vector::bottoms(c, 2);
        let u = vec![Vector::from_f64s(c, &[5.0]).unwrap(); 4];
        let traj = sys.simulate(&x0, &u, 4).unwrap();
        for t in 0..=4 {
            assert!(traj.states[t].iter().all(|s| s.is_bottom()));
            assert!(traj.outputs[t].iter().all(|s| s.is_bottom()));
        }
    }

    #[test]
    fn recursion_matches_closed_form() {
        let c = Clodum::MaxPlus;
        let sys = System::constant(
            c,
            Mode::Max,
            mp(&[vec![0.0, -1.0, 2.0], vec![1.0, NEG, 0.5], vec![NEG, 0.3, -0.2]]),
            mp(&[vec![0.0], vec![NEG], vec![1.0]]),
            mp(&[vec![0.5, 0.0, NEG]]),
            mp(&[vec![-1.0]]),
        )
        .unwrap();
        let x0 = Vector::from_f64s(c, &[0.0, -2.0, 1.0]).unwrap();
        let inputs: Vec<Vector> = (0..6)
            .map(|k| Vector::from_f64s(c, &[(k as f64) * 0.7 - 2.0]).unwrap())
            .collect();
        let rec = sys.simulate(&x0, &inputs, 6).unwrap();
        let closed = sys.closed_form_response(&x0, &inputs, 6).unwrap();
        assert!(rec.approx_eq(&closed, TOL));
        // output = null-input part ∨ null-state part
        let (ni, ns) = sys.output_decomposition(&x0, &inputs, 6).unwrap();
        for t in 0..=6 {
            let joined = ni[t].join(&ns[t]).unwrap();
            assert!(joined.approx_eq(&rec.outputs[t], TOL));
        }
    }

    #[test]
    fn transition_matrix_identity_and_products() {
        let c = Clodum::MaxPlus;
        let mats = vec![
            mp(&[vec![0.0, 1.0], vec![NEG, -1.0]]),
            mp(&[vec![-2.0, 0.0], vec![1.0, 0.5]]),
            mp(&[vec![0.3, NEG], vec![0.0, 2.0]]),
        ];
        let mats_for_closure = mats.clone();
        let provider: Arc<dyn Fn(i64) -> Matrix + Send + Sync> =
            Arc::new(move |t| mats_for_closure[(t as usize - 1) % 3].clone());
        let zero = Matrix::bottoms(c, 2, 1);
        let sys = System::time_varying(
            c,
            Mode::Max,
            2,
            1,
            2,
            provider,
            Arc::new({
                let z = zero.clone();
                move |_| z.clone()
            }),
            Arc::new(move |_| Matrix::identity(c, 2)),
            Arc::new(move |_| Matrix::bottoms(c, 2, 1)),
        );
        assert_eq!(
            sys.transition_matrix(3, 3).unwrap(),
            Matrix::identity(c, 2)
        );
        // Φ(2,0) = A(2) ⊠ A(1)
        let expect = mats[1].max_mul(&mats[0]).unwrap();
        assert!(sys.transition_matrix(2, 0).unwrap().approx_eq(&expect, TOL));
        assert!(sys.transition_matrix(0, 1).is_err());
    }

    #[test]
    fn first_order_impulse_response() {
        // h(t) = t·a1 for t ≥ 0
        let a1 = -0.3;
        let sys = first_order_filter(a1);
        let h = sys.impulse_response(10).unwrap().to_signal().unwrap();
        for t in 0..=10 {
            let expect = Scalar::Finite(a1 * t as f64);
            assert!(
                h.value_at(t, Scalar::Bottom).approx_eq(expect, TOL),
                "t={t}"
            );
        }
    }

    #[test]
    fn d_only_system_impulse() {
        let c = Clodum::MaxPlus;
        let sys = System::constant(
            c,
            Mode::Max,
            Matrix::bottoms(c, 1, 1),
            Matrix::bottoms(c, 1, 1),
            Matrix::bottoms(c, 1, 1),
            mp(&[vec![2.5]]),
        )
        .unwrap();
        let h = sys.impulse_response(5).unwrap().to_signal().unwrap();
        assert!(h.value_at(0, Scalar::Bottom).approx_eq(Scalar::Finite(2.5), TOL));
        for t in 1..=5 {
            assert!(h.value_at(t, Scalar::Bottom).is_bottom());
        }
    }

    #[test]
    fn null_state_response_is_convolution() {
        let sys = first_order_filter(-0.5);
        let c = Clodum::MaxPlus;
        let t_end = 12;
        let inputs: Vec<Vector> = (0..t_end)
            .map(|k| Vector::from_f64s(c, &[((k * 7) % 5) as f64 - 2.0]).unwrap())
            .collect();
        let x0 = Vector::bottoms(c, 1);
        let traj = sys.simulate(&x0, &inputs, t_end).unwrap();
        let y = Signal::new(
            c,
            0,
            traj.outputs.iter().map(|v| v.get(0)).collect(),
        );
        let u = Signal::new(c, 1, inputs.iter().map(|v| v.get(0)).collect());
        let h = sys.impulse_response(t_end).unwrap().to_signal().unwrap();
        let conv = sup_convolve(&u, &h).unwrap();
        for t in 0..=t_end as i64 {
            assert!(
                y.value_at(t, Scalar::Bottom)
                    .approx_eq(conv.value_at(t, Scalar::Bottom), TOL),
                "t={t}"
            );
        }
    }

    #[test]
    fn min_system_duality_with_conjugated_max_system() {
        let c = Clodum::MaxPlus;
        let a = mp(&[vec![0.2, -1.0], vec![1.5, NEG]]);
        let b = mp(&[vec![0.0], vec![-0.5]]);
        let cc = mp(&[vec![0.0, 0.3]]);
        let d = mp(&[vec![NEG]]);
        let max_sys = System::constant(c, Mode::Max, a.clone(), b.clone(), cc.clone(), d.clone())
            .unwrap();
        let min_sys = System::constant(
            c,
            Mode::Min,
            conj_mat(&a),
            conj_mat(&b),
            conj_mat(&cc),
            conj_mat(&d),
        )
        .unwrap();
        let x0 = Vector::from_f64s(c, &[1.0, 0.0]).unwrap();
        let inputs: Vec<Vector> = (0..5)
            .map(|k| Vector::from_f64s(c, &[k as f64 * 0.4]).unwrap())
            .collect();
        let conj_inputs: Vec<Vector> = inputs.iter().map(Vector::conjugate).collect();
        let max_traj = max_sys.simulate(&x0, &inputs, 5).unwrap();
        let min_traj = min_sys.simulate(&x0.conjugate(), &conj_inputs, 5).unwrap();
        for t in 0..=5 {
            assert!(min_traj.states[t].approx_eq(&max_traj.states[t].conjugate(), TOL));
            assert!(min_traj.outputs[t].approx_eq(&max_traj.outputs[t].conjugate(), TOL));
        }
    }

    fn conj_mat(m: &Matrix) -> Matrix {
        // entrywise conjugation (not the adjoint: no transpose)
        let mut out = m.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, m.clodum().conjugate(m.get(i, j)));
            }
        }
        out
    }

    #[test]
    fn stability_of_stable_filter() {
        let sys = first_order_filter(-0.008);
        let rep = check_causal_stable(&sys, TOL).unwrap();
        assert!(rep.causal);
        assert!(rep.lambda.approx_eq(Scalar::Finite(-0.008), TOL));
        assert_eq!(rep.bibo_upper, Some(true));
        assert_eq!(rep.absolutely_stable, Some(false)); // λ < e
        // h(t) = −0.008t is upper-bounded but its seminorm grows
        assert!(rep.divergence_detected);
        // with a1 = 0 the loop is critical and unique: absolutely stable
        let sys0 = first_order_filter(0.0);
        let rep0 = check_causal_stable(&sys0, TOL).unwrap();
        assert_eq!(rep0.absolutely_stable, Some(true));
        assert_eq!(rep0.periodic, Some(PeriodInfo { k0: 0, d: 1 }));
        assert!(!rep0.divergence_detected);
    }

    #[test]
    fn stability_of_unstable_filter() {
        let sys = first_order_filter(0.05);
        let rep = check_causal_stable(&sys, TOL).unwrap();
        assert_eq!(rep.bibo_upper, Some(false));
        assert!(rep.divergence_detected);
        assert_eq!(rep.absolutely_stable, Some(false));
    }

    #[test]
    fn all_bottom_a_is_stable() {
        let c = Clodum::MaxPlus;
        let sys = System::constant(
            c,
            Mode::Max,
            Matrix::bottoms(c, 2, 2),
            mp(&[vec![0.0], vec![0.0]]),
            mp(&[vec![0.0, 0.0]]),
            Matrix::bottoms(c, 1, 1),
        )
        .unwrap();
        let rep = check_causal_stable(&sys, TOL).unwrap();
        assert!(rep.lambda.is_bottom());
        assert_eq!(rep.bibo_upper, Some(true));
        assert!(!rep.divergence_detected);
    }

    #[test]
    fn explicit_impulse_response_report() {
        let c = Clodum::MaxPlus;
        // causal, bounded response
        let h = Signal::from_f64s(c, 0, &[0.0, -0.5, -1.0]).unwrap();
        let rep = check_impulse_response(&h, Mode::Max);
        assert!(rep.causal);
        assert!(rep.bibo);
        assert!(rep.sup.approx_eq(Scalar::Finite(0.0), TOL));
        assert!(rep.m_h.approx_eq(Scalar::Finite(1.0), TOL));
        // a sample before t = 0 breaks causality
        let h2 = Signal::from_f64s(c, -1, &[1.0, 0.0]).unwrap();
        assert!(!check_impulse_response(&h2, Mode::Max).causal);
        // a ⊤ sample breaks upper boundedness
        let h3 = Signal::new(c, 0, vec![Scalar::Finite(0.0), Scalar::Top]);
        assert!(!check_impulse_response(&h3, Mode::Max).bibo);
    }

    #[test]
    fn min_system_null_state_is_inf_convolution() {
        // dual of the sup-convolution identity, on a min-sum system
        let c = Clodum::MaxPlus;
        let sys = System::constant(
            c,
            Mode::Min,
            mp(&[vec![0.4]]),
            mp(&[vec![0.0]]),
            mp(&[vec![0.0]]),
            mp(&[vec![0.0]]),
        )
        .unwrap();
        let t_end = 10;
        let inputs: Vec<Vector> = (0..t_end)
            .map(|k| Vector::from_f64s(c, &[((k * 3) % 7) as f64]).unwrap())
            .collect();
        let x0 = Vector::tops(c, 1);
        let traj = sys.simulate(&x0, &inputs, t_end).unwrap();
        let y = Signal::new(c, 0, traj.outputs.iter().map(|v| v.get(0)).collect());
        let u = Signal::new(c, 1, inputs.iter().map(|v| v.get(0)).collect());
        let h = sys.impulse_response(t_end).unwrap().to_signal().unwrap();
        let conv = crate::signal::inf_convolve(&u, &h).unwrap();
        for t in 1..=t_end as i64 {
            assert!(
                y.value_at(t, Scalar::Top)
                    .approx_eq(conv.value_at(t, Scalar::Top), TOL),
                "t={t}: {:?} vs {:?}",
                y.value_at(t, Scalar::Top),
                conv.value_at(t, Scalar::Top)
            );
        }
        // closed form agrees with the recursion in min mode too
        let closed = sys.closed_form_response(&x0, &inputs, t_end).unwrap();
        assert!(closed.approx_eq(&traj, TOL));
    }

    #[test]
    fn impulse_response_needs_constant_system() {
        let c = Clodum::MaxPlus;
        let sys = System::time_varying(
            c,
            Mode::Max,
            1,
            1,
            1,
            Arc::new(move |_| Matrix::identity(c, 1)),
            Arc::new(move |_| Matrix::identity(c, 1)),
            Arc::new(move |_| Matrix::identity(c, 1)),
            Arc::new(move |_| Matrix::identity(c, 1)),
        );
        assert!(sys.impulse_response(3).is_err());
    }
}
