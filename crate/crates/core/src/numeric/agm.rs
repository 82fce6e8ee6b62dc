use std::f64::consts::PI;

use super::report::ConvergenceReport;
use super::MAX_ITERATIONS;
use crate::error::{Error, Result};

fn check_inputs(a: f64, b: f64, tol: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::domain(format!("AGM needs a, b > 0, got ({a}, {b})")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Arithmetic-geometric mean, with the per-step gap `|a_n − b_n|` as the trace.
///
/// Iteration stops once the gap is below `tol` or below four ulps of `a_n`,
/// whichever is larger; the iterates cannot get closer than that in binary64.
pub fn agm_with_report(a: f64, b: f64, tol: f64) -> Result<ConvergenceReport> {
    check_inputs(a, b, tol)?;
    let (mut a, mut b) = (a, b);
    let mut trace = vec![(a - b).abs()];
    for n in 0..=MAX_ITERATIONS {
        let gap = (a - b).abs();
        if gap <= tol.max(4.0 * f64::EPSILON * a.max(b)) {
            return Ok(ConvergenceReport::new(trace, 0.5 * (a + b), n));
        }
        if n == MAX_ITERATIONS {
            break;
        }
        (a, b) = (0.5 * (a + b), (a * b).sqrt());
        trace.push((a - b).abs());
    }
    Err(Error::Divergence {
        iterations: MAX_ITERATIONS,
        last_error: *trace.last().expect("nonempty"),
        trace,
    })
}

pub fn agm(a: f64, b: f64, tol: f64) -> Result<f64> {
    Ok(agm_with_report(a, b, tol)?.final_value)
}

/// `G(a, b) = ∫₀^(π/2) dφ / √(a² cos²φ + b² sin²φ) = π / (2 AGM(a, b))`.
pub fn elliptic_g(a: f64, b: f64) -> Result<f64> {
    Ok(PI / (2.0 * agm(a, b, 1e-15)?))
}
