use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::report::ConvergenceReport;
use super::MAX_ITERATIONS;
use crate::error::{Error, Result};
use crate::exact::scalar::{from_f64, int};
use crate::exact::Poly;
use crate::quadrature::integrate_half_line;

/// Parameters of `U₆(a, b; c, d, e) = ∫₀^∞ (cx⁴ + dx² + e)/(x⁶ + ax⁴ + bx² + 1) dx`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LandenState6 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
}

impl LandenState6 {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64) -> Self {
        LandenState6 { a, b, c, d, e }
    }

    /// `(c + d + e)/4`, the common scale once `(c, d, e) = L(1, 2, 1)`.
    pub fn l_estimate(&self) -> f64 {
        0.25 * (self.c + self.d + self.e)
    }
}

/// Which update to use for `d`.
///
/// `Corrected` is `(c(b+3) + 2d + e(a+3))/(a+b+2)`, which fixes `L(1, 2, 1)` at
/// `a = b = 3` and preserves `U₆`. `Printed` has `b+2` in place of `b+3`; it is
/// kept only to demonstrate that it breaks both properties.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum DMap {
    #[default]
    Corrected,
    Printed,
}

pub fn landen_step6(s: &LandenState6, d_map: DMap) -> Result<LandenState6> {
    let LandenState6 { a, b, c, d, e } = *s;
    let sum = a + b + 2.0;
    if !(sum > 0.0 && sum.is_finite()) {
        return Err(Error::domain(format!("need a + b + 2 > 0, got {sum}")));
    }
    let s13 = sum.cbrt();
    let s23 = s13 * s13;
    let s43 = s23 * s23;
    let c_shift = match d_map {
        DMap::Corrected => 3.0,
        DMap::Printed => 2.0,
    };
    Ok(LandenState6 {
        a: (a * b + 5.0 * a + 5.0 * b + 9.0) / s43,
        b: (a + b + 6.0) / s23,
        c: (c + d + e) / s23,
        d: (c * (b + c_shift) + 2.0 * d + e * (a + 3.0)) / sum,
        e: (c + e) / s13,
    })
}

/// Exact test that `x⁶ + ax⁴ + bx² + 1` has no zero on `[0, ∞)`, i.e. that
/// `t³ + at² + bt + 1` has no root with `t > 0`.
fn denominator_positive(a: f64, b: f64) -> Result<bool> {
    let p = Poly::new(vec![int(1), from_f64(b)?, from_f64(a)?, int(1)]);
    Ok(p.count_real_roots(Some(&int(0)), None) == 0)
}

/// Iterates until `max(|a_n − 3|, |b_n − 3|) < tol` and returns `(π/2)·L`.
///
/// The trace holds `max(|a_n − 3|, |b_n − 3|)`. Once it is below `tol`,
/// `(c, d, e)` may still trail by one step, so further steps are taken while
/// `|e_n − L_n|` exceeds `tol·max(1, |L_n|)`; if they still disagree when the
/// budget runs out, a warning is attached to the report.
pub fn landen_iterate6(
    start: &LandenState6,
    tol: f64,
    d_map: DMap,
) -> Result<(f64, ConvergenceReport)> {
    let LandenState6 { a, b, .. } = *start;
    if ![a, b, start.c, start.d, start.e]
        .iter()
        .all(|v| v.is_finite())
    {
        return Err(Error::domain("non-finite parameter"));
    }
    if !denominator_positive(a, b)? {
        return Err(Error::domain(format!(
            "x⁶ + {a}x⁴ + {b}x² + 1 vanishes on [0, ∞)"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    const SETTLING_STEPS: usize = 4;
    let ab_error = |s: &LandenState6| (s.a - 3.0).abs().max((s.b - 3.0).abs());
    let lagging = |s: &LandenState6| {
        let l = s.l_estimate();
        (s.e - l).abs() > tol * l.abs().max(1.0)
    };

    let mut s = *start;
    let mut trace = vec![ab_error(&s)];
    let mut settled_at = None;
    for n in 0..=MAX_ITERATIONS {
        let err = *trace.last().expect("nonempty");
        if err < tol {
            let since = *settled_at.get_or_insert(n);
            if !lagging(&s) || n - since >= SETTLING_STEPS || n == MAX_ITERATIONS {
                let value = FRAC_PI_2 * s.l_estimate();
                let mut report = ConvergenceReport::new(trace, value, n);
                if lagging(&s) {
                    report.warnings.push(format!(
                        "e_n = {} and (c+d+e)/4 = {} still differ by more than tol",
                        s.e,
                        s.l_estimate()
                    ));
                }
                return Ok((value, report));
            }
        }
        if n == MAX_ITERATIONS || !err.is_finite() {
            break;
        }
        s = match landen_step6(&s, d_map) {
            Ok(next) => next,
            Err(_) => break,
        };
        trace.push(ab_error(&s));
    }
    Err(Error::Divergence {
        iterations: trace.len() - 1,
        last_error: *trace.last().expect("nonempty"),
        trace,
    })
}

/// `U₆` by adaptive quadrature.
pub fn u6_by_quadrature(s: &LandenState6, rel_tol: f64) -> Result<f64> {
    let LandenState6 { a, b, c, d, e } = *s;
    let q = integrate_half_line(
        move |x: f64| {
            let x2 = x * x;
            ((c * x2 + d) * x2 + e) / (((x2 + a) * x2 + b) * x2 + 1.0)
        },
        rel_tol,
    )?;
    Ok(q.value)
}
