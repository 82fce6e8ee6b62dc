use std::f64::consts::{PI, SQRT_2};

use super::{integrate, integrate_finite, integrate_half_line, Domain, IntegrandSpec};
use crate::error::{Error, Result};
use crate::exact::quartic::quartic_value;
use crate::exact::scalar::{binomial, to_f64, ExactScalar};

/// Relative tolerance used for the quadrature side of every check here.
const CHECK_REL_TOL: f64 = 1e-12;

fn check_a(a: f64) -> Result<()> {
    if a.is_finite() && a > -1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("need a > -1, got {a}")))
    }
}

/// `∫₀^∞ dx / (x⁴ + 2a·x² + 1)^(m+1)` by adaptive quadrature.
pub fn quartic_by_quadrature(a: f64, m: u32, rel_tol: f64) -> Result<f64> {
    check_a(a)?;
    let q = integrate_half_line(
        |x| {
            let x2 = x * x;
            (x2 * x2 + 2.0 * a * x2 + 1.0).powi(-(m as i32 + 1))
        },
        rel_tol,
    )?;
    Ok(q.value)
}

/// `∫₀^π [(1+a) + (1−a)cos²u]^(−(m+1)) cos^j u du` for odd `j ≤ 2m+1`.
///
/// The integral vanishes, so the accuracy target is absolute.
pub fn check_vanishing_odd(a: f64, m: u32, j: u32) -> Result<f64> {
    check_a(a)?;
    if j.is_multiple_of(2) || j > 2 * m + 1 {
        return Err(Error::domain(format!(
            "j = {j} must be odd and at most 2m+1 = {}",
            2 * m + 1
        )));
    }
    let spec = IntegrandSpec::new(
        |u: f64| {
            let c = u.cos();
            ((1.0 + a) + (1.0 - a) * c * c).powi(-(m as i32 + 1)) * c.powi(j as i32)
        },
        Domain::Finite(0.0, PI),
    )
    .rel_tol(CHECK_REL_TOL)
    .abs_tol(1e-13);
    Ok(integrate(&spec)?.value)
}

/// Both sides of
///
/// ```text
/// ∫₀^∞ x^(m−1) dx / (a + √(1+x))^(2m+1/2) = (1/π) 2^(6m+3/2) [m C(4m,2m) C(2m,m)]^(−1) N(a; m)
/// ```
///
/// The left side decays like `x^(−5/4)`, too slowly for the `t/(1−t)` map, so
/// it is split at `x = 1` and the tail is taken in `s` with `x = s^(−4)`, where
/// it becomes `4 (a s² + √(1 + s⁴))^(−(2m+1/2))` on `(0, 1]`.
pub fn check_ramanujan(a: f64, m: u32) -> Result<(f64, f64)> {
    check_a(a)?;
    if m == 0 {
        return Err(Error::domain("the identity needs m ≥ 1"));
    }
    let p = 2.0 * m as f64 + 0.5;
    let head = integrate_finite(
        |x: f64| x.powi(m as i32 - 1) * (a + (1.0 + x).sqrt()).powf(-p),
        0.0,
        1.0,
        CHECK_REL_TOL,
    )?;
    let tail = integrate_finite(
        |s: f64| {
            let s2 = s * s;
            4.0 * (a * s2 + (1.0 + s2 * s2).sqrt()).powf(-p)
        },
        0.0,
        1.0,
        CHECK_REL_TOL,
    )?;
    let lhs = head.value + tail.value;

    let mu = m as u64;
    let denom = ExactScalar::from_integer(
        binomial(4 * mu, 2 * mu as i64) * binomial(2 * mu, mu as i64) * mu,
    );
    let rhs = 2f64.powf(6.0 * m as f64 + 1.5) / to_f64(&denom) / PI * quartic_value(a, m)?;
    Ok((lhs, rhs))
}

/// Both sides of `g(c) = π√2 h′(c)` with `g(c) = ∫₀^∞ dx/(x⁴ + 2a·x² + 1 + c)`
/// and `h(c) = √(a + √(1+c))`.
pub fn check_gh_derivative(a: f64, c: f64) -> Result<(f64, f64)> {
    check_a(a)?;
    if !(c.is_finite() && c > -1.0) {
        return Err(Error::domain(format!("need c > -1, got {c}")));
    }
    let r = (1.0 + c).sqrt();
    // x⁴ + 2a·x² + 1 + c > 0 for all x ⇔ a > −√(1+c)
    if a + r <= 0.0 {
        return Err(Error::domain(format!(
            "x⁴ + 2a·x² + 1 + c has real roots for a = {a}, c = {c}"
        )));
    }
    let lhs = integrate_half_line(
        |x| {
            let x2 = x * x;
            1.0 / (x2 * x2 + 2.0 * a * x2 + 1.0 + c)
        },
        CHECK_REL_TOL,
    )?
    .value;
    let h_prime = 1.0 / (4.0 * r * (a + r).sqrt());
    Ok((lhs, PI * SQRT_2 * h_prime))
}
