//! JSON rendering of reports. Finite scalars become JSON numbers; the
//! unbounded sentinels become the strings "-inf"/"+inf" (JSON has no
//! infinities).

use maxstar::solve::SolveReport;
use maxstar::spectral::SpectralReport;
use maxstar::system::StabilityReport;
use maxstar::{Clodum, Matrix, Scalar, Vector};
use serde_json::{json, Value};

pub fn scalar_json(c: Clodum, s: Scalar) -> Value {
    let v = c.to_f64(s);
    if v == f64::NEG_INFINITY {
        json!("-inf")
    } else if v == f64::INFINITY {
        json!("+inf")
    } else {
        json!(v)
    }
}

pub fn vector_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(|&s| scalar_json(v.clodum(), s)).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|&s| scalar_json(m.clodum(), s))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn residual_json(r: f64) -> Value {
    if r.is_finite() {
        json!(r)
    } else {
        json!("+inf")
    }
}

pub fn solve_json(rep: &SolveReport) -> Value {
    json!({
        "solution": vector_json(&rep.solution),
        "achieved": vector_json(&rep.achieved),
        "exact": rep.exact,
        "residual_linf": residual_json(rep.residual_linf),
        "residual_l1": residual_json(rep.residual_l1),
    })
}

pub fn spectral_json(c: Clodum, rep: &SpectralReport) -> Value {
    json!({
        "lambda": scalar_json(c, rep.lambda),
        "critical_cycle": rep.critical_cycle,
        "irreducible": rep.is_irreducible,
        "metric_converged": rep.metric_converged,
        "metric_matrix": rep.metric_matrix.as_ref().map(matrix_json),
        "dual_lambda": scalar_json(c, rep.dual_lambda),
    })
}

pub fn stability_json(c: Clodum, rep: &StabilityReport) -> Value {
    json!({
        "causal": rep.causal,
        "lambda": scalar_json(c, rep.lambda),
        "bibo_upper": rep.bibo_upper,
        "bibo_lower": rep.bibo_lower,
        "absolutely_stable": rep.absolutely_stable,
        "m_h": scalar_json(c, rep.m_h),
        "divergence_detected": rep.divergence_detected,
        "periodic": rep.periodic.map(|p| json!({"k0": p.k0, "d": p.d})),
        "horizon": rep.horizon,
    })
}
