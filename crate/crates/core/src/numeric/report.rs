use serde::Serialize;

use crate::error::{Error, Result};

/// Outcome of an iteration: the per-step error, the fitted convergence order
/// and the limit value.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConvergenceReport {
    pub iterations: usize,
    pub error_trace: Vec<f64>,
    pub estimated_order: Option<f64>,
    pub final_value: f64,
    pub converged: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ConvergenceReport {
    pub(crate) fn new(error_trace: Vec<f64>, final_value: f64, iterations: usize) -> Self {
        let estimated_order = estimate_order(&decreasing_prefix(&error_trace)).ok();
        ConvergenceReport {
            iterations,
            error_trace,
            estimated_order,
            final_value,
            converged: true,
            warnings: Vec::new(),
        }
    }
}

/// Longest leading run of strictly positive, strictly decreasing values.
fn decreasing_prefix(trace: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &e in trace {
        if e.is_nan() || e <= 0.0 || out.last().is_some_and(|&prev| e >= prev) {
            break;
        }
        out.push(e);
    }
    out
}

/// Least-squares slope of `log e_(n+1)` against `log e_n`.
pub fn estimate_order(errors: &[f64]) -> Result<f64> {
    if errors.len() < 4 {
        return Err(Error::domain(format!(
            "order estimate needs at least 4 errors, got {}",
            errors.len()
        )));
    }
    if errors.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
        return Err(Error::domain("errors must be positive and finite"));
    }
    if errors.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::domain("errors must be strictly decreasing"));
    }
    let logs: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let (xs, ys) = (&logs[..logs.len() - 1], &logs[1..]);
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    Ok(sxy / sxx)
}
