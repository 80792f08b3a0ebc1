//! Finite-support discrete-time signals and the sup-⋆ / inf-⋆′ convolutions.
//!
//! A signal stores an explicit support window [start, start+len); values
//! outside the window are ⊥ for max-type use and ⊤ for min-type use, chosen
//! by the operation. The impulse δ (e at 0, ⊥ elsewhere) is the unit of
//! sup-⋆ convolution; the dual impulse (e′ at 0, ⊤ elsewhere) is the unit
//! of inf-⋆′ convolution.

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    clodum: Clodum,
    start: i64,
    samples: Vec<Scalar>,
}

impl Signal {
    pub fn new(clodum: Clodum, start: i64, samples: Vec<Scalar>) -> Self {
        Signal {
            clodum,
            start,
            samples,
        }
    }

    pub fn from_f64s(clodum: Clodum, start: i64, values: &[f64]) -> Result<Self> {
        let samples = values
            .iter()
            .map(|&v| clodum.scalar(v))
            .collect::<Result<_>>()?;
        Ok(Signal {
            clodum,
            start,
            samples,
        })
    }

    /// The impulse δ: e at t = 0, ⊥ elsewhere.
    pub fn impulse(clodum: Clodum) -> Self {
        Signal {
            clodum,
            start: 0,
            samples: vec![clodum.unit()],
        }
    }

    /// The dual impulse: e′ at t = 0, ⊤ elsewhere.
    pub fn dual_impulse(clodum: Clodum) -> Self {
        Signal {
            clodum,
            start: 0,
            samples: vec![clodum.dual_unit()],
        }
    }

    pub fn clodum(&self) -> Clodum {
        self.clodum
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn end(&self) -> i64 {
        self.start + self.samples.len() as i64
    }

    pub fn samples(&self) -> &[Scalar] {
        &self.samples
    }

    /// Value at time t, with the given out-of-window default.
    pub fn value_at(&self, t: i64, default: Scalar) -> Scalar {
        if t < self.start || t >= self.end() {
            default
        } else {
            self.samples[(t - self.start) as usize]
        }
    }

    /// Drop leading/trailing samples equal to `null`.
    pub fn trimmed(&self, null: Scalar) -> Signal {
        let first = self.samples.iter().position(|&s| s != null);
        match first {
            None => Signal {
                clodum: self.clodum,
                start: 0,
                samples: Vec::new(),
            },
            Some(lo) => {
                let hi = self.samples.iter().rposition(|&s| s != null).unwrap();
                Signal {
                    clodum: self.clodum,
                    start: self.start + lo as i64,
                    samples: self.samples[lo..=hi].to_vec(),
                }
            }
        }
    }

    /// Compare over the union of supports, padding with `null`.
    pub fn approx_eq(&self, other: &Signal, null: Scalar, tol: f64) -> bool {
        if self.clodum != other.clodum {
            return false;
        }
        let lo = self.start.min(other.start);
        let hi = self.end().max(other.end());
        (lo..hi).all(|t| {
            self.value_at(t, null)
                .approx_eq(other.value_at(t, null), tol)
        })
    }
}

fn check(f: &Signal, g: &Signal) -> Result<()> {
    if f.clodum != g.clodum {
        return Err(Error::CloudmMismatch(f.clodum.name(), g.clodum.name()));
    }
    Ok(())
}

/// Sup-⋆ convolution: (f ⊕⋆ g)(t) = ⋁_k f(k) ⋆ g(t−k). The support of the
/// result is contained in the Minkowski sum of the supports.
pub fn sup_convolve(f: &Signal, g: &Signal) -> Result<Signal> {
    check(f, g)?;
    let c = f.clodum;
    if f.is_empty() || g.is_empty() {
        return Ok(Signal::new(c, 0, Vec::new()));
    }
    let start = f.start + g.start;
    let len = f.len() + g.len() - 1;
    let mut samples = vec![Scalar::Bottom; len];
    for (i, &fv) in f.samples.iter().enumerate() {
        for (j, &gv) in g.samples.iter().enumerate() {
            let s = &mut samples[i + j];
            *s = s.join(c.mul(fv, gv));
        }
    }
    Ok(Signal::new(c, start, samples))
}

/// Inf-⋆′ convolution: (f ⊕′⋆′ g)(t) = ⋀_k f(k) ⋆′ g(t−k).
pub fn inf_convolve(f: &Signal, g: &Signal) -> Result<Signal> {
    check(f, g)?;
    let c = f.clodum;
    if f.is_empty() || g.is_empty() {
        return Ok(Signal::new(c, 0, Vec::new()));
    }
    let start = f.start + g.start;
    let len = f.len() + g.len() - 1;
    let mut samples = vec![Scalar::Top; len];
    for (i, &fv) in f.samples.iter().enumerate() {
        for (j, &gv) in g.samples.iter().enumerate() {
            let s = &mut samples[i + j];
            *s = s.meet(c.dual_mul(fv, gv));
        }
    }
    Ok(Signal::new(c, start, samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clodum::DEFAULT_TOLERANCE as TOL;

    #[test]
    fn impulse_is_convolution_unit() {
        let c = Clodum::MaxPlus;
        let f = Signal::from_f64s(c, -2, &[1.0, f64::NEG_INFINITY, 3.0, 0.5]).unwrap();
        let d = Signal::impulse(c);
        let out = sup_convolve(&f, &d).unwrap();
        assert!(out.approx_eq(&f, Scalar::Bottom, TOL));
        let out2 = sup_convolve(&d, &f).unwrap();
        assert!(out2.approx_eq(&f, Scalar::Bottom, TOL));
    }

    #[test]
    fn small_max_plus_convolution() {
        // f = [0,1] at 0..1, g = [0,2] at 0..1 → [0,2,3] at 0..2
        let c = Clodum::MaxPlus;
        let f = Signal::from_f64s(c, 0, &[0.0, 1.0]).unwrap();
        let g = Signal::from_f64s(c, 0, &[0.0, 2.0]).unwrap();
        let out = sup_convolve(&f, &g).unwrap();
        let expect = Signal::from_f64s(c, 0, &[0.0, 2.0, 3.0]).unwrap();
        assert!(out.approx_eq(&expect, Scalar::Bottom, TOL));
    }

    #[test]
    fn convolution_commutes_and_associates() {
        let c = Clodum::MaxTimes;
        let f = Signal::from_f64s(c, 1, &[0.5, 2.0]).unwrap();
        let g = Signal::from_f64s(c, -1, &[3.0, 0.0, 1.0]).unwrap();
        let h = Signal::from_f64s(c, 0, &[1.5]).unwrap();
        let fg = sup_convolve(&f, &g).unwrap();
        let gf = sup_convolve(&g, &f).unwrap();
        assert!(fg.approx_eq(&gf, Scalar::Bottom, TOL));
        let left = sup_convolve(&fg, &h).unwrap();
        let right = sup_convolve(&f, &sup_convolve(&g, &h).unwrap()).unwrap();
        assert!(left.approx_eq(&right, Scalar::Bottom, TOL));
    }

    #[test]
    fn dual_impulse_is_inf_convolution_unit() {
        let c = Clodum::MaxPlus;
        let f = Signal::from_f64s(c, 0, &[2.0, f64::INFINITY, -1.0]).unwrap();
        let d = Signal::dual_impulse(c);
        let out = inf_convolve(&f, &d).unwrap();
        assert!(out.approx_eq(&f, Scalar::Top, TOL));
    }

    #[test]
    fn support_is_minkowski_sum() {
        let c = Clodum::MaxPlus;
        let f = Signal::from_f64s(c, 2, &[1.0, 2.0]).unwrap();
        let g = Signal::from_f64s(c, -5, &[0.0, 0.0, 0.0]).unwrap();
        let out = sup_convolve(&f, &g).unwrap();
        assert_eq!(out.start(), -3);
        assert_eq!(out.end(), 1);
    }
}
