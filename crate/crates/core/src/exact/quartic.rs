//! Closed forms for `N(a; m) = ∫₀^∞ dx / (x⁴ + 2a·x² + 1)^(m+1)`.
//!
//! The closed form is `N(a; m) = (π/2)·P_m(a) / [2(a+1)]^(m+1/2)` where
//! `P_m(a) = Σ_l d_l(m) a^l` has strictly positive rational coefficients
//!
//! ```text
//! d_l(m) = 2^(−2m) Σ_{k=l}^{m} 2^k C(2m−2k, m−k) C(m+k, m) C(k, l).
//! ```

use std::f64::consts::{FRAC_PI_2, PI};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hypergeom::hypergeom_2f1_terminating;
use super::pi_rational::{beta_half_integer, PiRational};
use super::poly::Poly;
use super::scalar::{
    binomial, binomial_i, from_f64, int, pow2, powi, rat, sqrt_exact, to_f64, ExactScalar,
};
use crate::error::{Error, Result};

fn check_l(m: u32, l: u32) -> Result<()> {
    if l > m {
        Err(Error::domain(format!(
            "coefficient index l = {l} exceeds m = {m}"
        )))
    } else {
        Ok(())
    }
}

fn check_a(a: f64) -> Result<()> {
    if a.is_finite() && a > -1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "a = {a}: the quartic integral converges only for a > -1"
        )))
    }
}

fn big(x: BigInt) -> ExactScalar {
    ExactScalar::from_integer(x)
}

/// The coefficient `d_l(m)` of `a^l` in `P_m(a)`.
pub fn d_coeff(m: u32, l: u32) -> Result<ExactScalar> {
    check_l(m, l)?;
    let (m, l) = (m as u64, l as u64);
    let sum: BigInt = (l..=m)
        .map(|k| {
            (BigInt::one() << k)
                * binomial(2 * m - 2 * k, (m - k) as i64)
                * binomial(m + k, m as i64)
                * binomial(k, l as i64)
        })
        .sum();
    Ok(big(sum) * pow2(-2 * m as i64))
}

/// The original triple alternating sum for `d_l(m)`:
///
/// ```text
/// Σ_{j=0}^{l} Σ_{s=0}^{m−l} Σ_{k=s+l}^{m} (−1)^(k−l−s) 8^(−k)
///     C(2k,k) C(2m+1, 2s+2j) C(m−s−j, m−k) C(s+j, j) C(k−s−j, l−j)
/// ```
///
/// It shares no code path with [`d_coeff`] beyond [`binomial`], so the two
/// serve as mutual checks.
pub fn d_coeff_oracle(m: u32, l: u32) -> Result<ExactScalar> {
    check_l(m, l)?;
    let (m, l) = (m as i64, l as i64);
    let mut sum = ExactScalar::zero();
    for j in 0..=l {
        for s in 0..=(m - l) {
            for k in (s + l)..=m {
                let term = binomial_i(2 * k, k)
                    * binomial_i(2 * m + 1, 2 * s + 2 * j)
                    * binomial_i(m - s - j, m - k)
                    * binomial_i(s + j, j)
                    * binomial_i(k - s - j, l - j);
                if term.is_zero() {
                    continue;
                }
                let signed = if (k - l - s) % 2 == 0 { term } else { -term };
                sum += big(signed) * pow2(-3 * k);
            }
        }
    }
    Ok(sum)
}

/// `P_m(a) = Σ_{l=0}^{m} d_l(m) a^l`.
pub fn poly_p(m: u32) -> Poly {
    Poly::new(
        (0..=m)
            .map(|l| d_coeff(m, l).expect("l ranges over 0..=m"))
            .collect(),
    )
}

/// `P_m` from its expansion in powers of `(1 + a)`:
/// `2^(−2m) Σ_k 2^k C(2m−2k, m−k) C(m+k, m) (1+a)^k`.
pub fn poly_p_shifted(m: u32) -> Poly {
    let m = m as u64;
    let one_plus_a = Poly::from_ints(&[1, 1]);
    let mut acc = Poly::zero();
    for k in 0..=m {
        let c = (BigInt::one() << k)
            * binomial(2 * m - 2 * k, (m - k) as i64)
            * binomial(m + k, m as i64);
        acc = &acc + &one_plus_a.pow(k as u32).scale(&big(c));
    }
    acc.scale(&pow2(-2 * m as i64))
}

/// `P_m` together with the evaluation rule of the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticClosedForm {
    m: u32,
    p: Poly,
}

impl QuarticClosedForm {
    pub fn new(m: u32) -> Self {
        QuarticClosedForm { m, p: poly_p(m) }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn polynomial(&self) -> &Poly {
        &self.p
    }

    /// `(π/2)·P_m(a) / [2(a+1)]^(m+1/2)`, with `P_m(a)` evaluated exactly at the
    /// binary value of `a` before rounding.
    pub fn value(&self, a: f64) -> Result<f64> {
        check_a(a)?;
        let pa = to_f64(&self.p.eval(&from_f64(a)?));
        let base = 2.0 * (a + 1.0);
        Ok(FRAC_PI_2 * pa / (base.powi(self.m as i32) * base.sqrt()))
    }

    /// Exact value `q·π` at rational `a`, available when `2(a+1)` is the
    /// square of a rational; `None` otherwise.
    pub fn exact_value(&self, a: &ExactScalar) -> Result<Option<PiRational>> {
        if *a <= int(-1) {
            return Err(Error::domain(format!("need a > -1, got {a}")));
        }
        let base = int(2) * (a + int(1));
        let Some(root) = sqrt_exact(&base) else {
            return Ok(None);
        };
        let denom = powi(&base, self.m as i64)? * root * int(2);
        Ok(Some(PiRational::pi_times(self.p.eval(a) / denom)))
    }
}

/// `N(a; m)` from the closed form.
pub fn quartic_value(a: f64, m: u32) -> Result<f64> {
    QuarticClosedForm::new(m).value(a)
}

/// `∫₀^∞ dx / (b·x⁴ + 2a·x² + 1) = π / (2√2 · √(a + √b))`.
pub fn sqrt_quartic(a: f64, b: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && b > 0.0 && a + b.sqrt() > 0.0) {
        return Err(Error::domain(format!(
            "b·x⁴ + 2a·x² + 1 must stay positive (need b > 0, a + √b > 0); got a = {a}, b = {b}"
        )));
    }
    Ok(PI / (2.0 * std::f64::consts::SQRT_2) / (a + b.sqrt()).sqrt())
}

/// `N(a; m) = 2^(m−1/2) (a+1)^(−(m+1/2)) B(2m+3/2, 1/2) ₂F₁(−m, m+1; m+3/2; (1−a)/2)`.
///
/// Beta and ₂F₁ are evaluated exactly; only the algebraic prefactor is rounded.
pub fn quartic_via_2f1(a: f64, m: u32) -> Result<f64> {
    check_a(a)?;
    let mi = m as i64;
    let z = (int(1) - from_f64(a)?) / int(2);
    let f = hypergeom_2f1_terminating(-mi, &int(mi + 1), &rat(2 * mi + 3, 2), &z)?;
    let beta = beta_half_integer(&rat(4 * mi + 3, 2), &rat(1, 2))?;
    let exact = beta.scale(&f);
    // 2^(m−1/2) (a+1)^(−(m+1/2)) = (2/(a+1))^m / √(2(a+1))
    let prefactor = (2.0 / (a + 1.0)).powi(m as i32) / (2.0 * (a + 1.0)).sqrt();
    Ok(prefactor * exact.to_f64())
}

/// `∫₀^∞ t^(2k) dt / (1+t²)^(m+1) = π/2^(2m+1) · C(2k,k) C(2m−2k, m−k) / C(m,k)`.
pub fn even_moment(k: u32, m: u32) -> Result<PiRational> {
    if k > m {
        return Err(Error::domain(format!(
            "moment t^{} against (1+t²)^-{} diverges (need k ≤ m)",
            2 * k,
            m + 1
        )));
    }
    let (k, m) = (k as u64, m as u64);
    let q = big(binomial(2 * k, k as i64) * binomial(2 * m - 2 * k, (m - k) as i64))
        / big(binomial(m, k as i64))
        * pow2(-(2 * m as i64 + 1));
    Ok(PiRational::pi_times(q))
}
