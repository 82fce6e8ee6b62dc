use std::f64::consts::PI;

use serde::Serialize;

use super::report::ConvergenceReport;
use super::MAX_ITERATIONS;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Domain, IntegrandSpec};

/// Coefficients of `ax² + bx + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LandenState2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl LandenState2 {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        LandenState2 { a, b, c }
    }

    pub fn discriminant(&self) -> f64 {
        4.0 * self.a * self.c - self.b * self.b
    }
}

/// One step of the map that preserves `∫_ℝ dx/(ax² + bx + c)`.
pub fn landen_step2(s: &LandenState2) -> Result<LandenState2> {
    let LandenState2 { a, b, c } = *s;
    let b2 = b * b;
    let delta = (3.0 * a + c) * (a + 3.0 * c) - b2;
    if delta == 0.0 || !delta.is_finite() {
        return Err(Error::SingularStep(format!(
            "(3a+c)(a+3c) − b² = {delta} at (a, b, c) = ({a}, {b}, {c})"
        )));
    }
    Ok(LandenState2 {
        a: a * ((a + 3.0 * c).powi(2) - 3.0 * b2) / delta,
        b: b * (3.0 * (a - c).powi(2) - b2) / delta,
        c: c * ((3.0 * a + c).powi(2) - 3.0 * b2) / delta,
    })
}

/// Iterates to the fixed point `(r, 0, r)`, `r = ½√(4ac − b²)`, and returns
/// `π / a_∞`. The trace holds the Euclidean norm of `(a_n − r, b_n, c_n − r)`.
pub fn landen_iterate2(a: f64, b: f64, c: f64, tol: f64) -> Result<(f64, ConvergenceReport)> {
    let mut s = LandenState2::new(a, b, c);
    let disc = s.discriminant();
    if !(disc > 0.0 && a > 0.0 && disc.is_finite()) {
        return Err(Error::domain(format!(
            "need a > 0 and 4ac − b² > 0, got (a, b, c) = ({a}, {b}, {c})"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let r = 0.5 * disc.sqrt();
    let error = |s: &LandenState2| ((s.a - r).powi(2) + s.b.powi(2) + (s.c - r).powi(2)).sqrt();
    let mut trace = vec![error(&s)];
    for n in 0..=MAX_ITERATIONS {
        let e = *trace.last().expect("nonempty");
        if e < tol {
            let value = PI / s.a;
            return Ok((value, ConvergenceReport::new(trace, value, n)));
        }
        if n == MAX_ITERATIONS || !e.is_finite() {
            break;
        }
        s = match landen_step2(&s) {
            Ok(next) => next,
            Err(_) => break,
        };
        trace.push(error(&s));
    }
    Err(Error::Divergence {
        iterations: trace.len() - 1,
        last_error: *trace.last().expect("nonempty"),
        trace,
    })
}

/// `∫_ℝ dx/(ax² + bx + c)` by adaptive quadrature.
pub fn quad2_by_quadrature(s: &LandenState2, rel_tol: f64) -> Result<f64> {
    let LandenState2 { a, b, c } = *s;
    let spec = IntegrandSpec::new(move |x: f64| 1.0 / ((a * x + b) * x + c), Domain::WholeLine)
        .rel_tol(rel_tol);
    Ok(integrate(&spec)?.value)
}
