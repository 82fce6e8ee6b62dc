//! The rational Landen transformation attached to `y = (x² − 1)/(2x)`.
//!
//! For an integrable rational `f`,
//!
//! ```text
//! ∫_ℝ f(x) dx = ∫_ℝ g(y) dy,
//! g(y) = [f(x₊) + f(x₋)] + (y/√(y²+1)) [f(x₊) − f(x₋)],   x± = y ± √(y²+1),
//! ```
//!
//! and for even `f` the same holds on `[0, ∞)`. With `φ = x₊` we have
//! `x₋ = −1/φ`, `2y = φ − φ⁻¹` and `φ + φ⁻¹ = 2√(y²+1)`, so
//!
//! ```text
//! g = 2/(φ² + 1) · [φ² f(φ) + f(−1/φ)],
//! ```
//!
//! a quotient of Laurent polynomials. Multiplying through by `w = φ + φ⁻¹`
//! makes numerator and denominator both invariant under `φ ↦ −1/φ`; they are
//! then polynomials in `u = φ − φ⁻¹ = 2y`, and no square root ever appears.

use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::rational::RationalFunction;
use crate::error::{Error, Result};
use crate::exact::identities::t_poly_of_2y;
use crate::exact::scalar::{binomial, from_f64, int, to_f64};
use crate::exact::{even_moment, ExactScalar, Poly};

/// Symmetric sample points for the sign-change sweep on the denominator.
const SWEEP: [f64; 13] = [
    0.0, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0, 10.0, 100.0, 1e4,
];

/// Rejects integrands whose integral over ℝ is not obviously finite: the
/// denominator must exceed the numerator by two degrees and have no real root.
pub fn check_integrable(f: &RationalFunction) -> Result<()> {
    if f.is_zero() {
        return Ok(());
    }
    let dn = f.num().degree().expect("nonzero numerator");
    let dd = f.den().degree().expect("nonzero denominator");
    if dd < dn + 2 {
        return Err(Error::domain(format!(
            "denominator degree {dd} must exceed numerator degree {dn} by at least 2"
        )));
    }
    let den = f.den();
    let signs: Vec<f64> = SWEEP
        .iter()
        .flat_map(|&x| [x, -x])
        .map(|x| den.eval_f64(x))
        .collect();
    let first = signs[0];
    if signs
        .iter()
        .any(|&v| v == 0.0 || v.signum() != first.signum())
    {
        return Err(Error::domain("denominator changes sign on the real line"));
    }
    let roots = den.count_real_roots(None, None);
    if roots > 0 {
        return Err(Error::domain(format!(
            "denominator has {roots} real root(s)"
        )));
    }
    Ok(())
}

/// Numerator and denominator of `w·φ⁻¹·2[φ² f(φ) + f(−1/φ)] / (w²·D(φ)D(−1/φ))`.
fn phi_form(f: &RationalFunction) -> (LaurentPoly, LaurentPoly) {
    let (n, d) = (f.num(), f.den());
    let n_phi = LaurentPoly::from_poly(n);
    let d_phi = LaurentPoly::from_poly(d);
    let n_inv = LaurentPoly::from_poly_at_neg_inv(n);
    let d_inv = LaurentPoly::from_poly_at_neg_inv(d);
    let w = &LaurentPoly::monomial(int(1), 1) + &LaurentPoly::monomial(int(1), -1);

    let mixed = &(&n_phi * &d_inv).shift(2) + &(&n_inv * &d_phi);
    let num = (&w * &mixed).shift(-1).scale(&int(2));
    let den = &(&w * &w) * &(&d_phi * &d_inv);
    (num, den)
}

/// Rewrites an invariant Laurent polynomial as a polynomial in `y`.
fn invariant_to_y(l: &LaurentPoly, what: &str) -> Result<Poly> {
    if !l.is_invariant() {
        return Err(Error::logic(format!(
            "{what} of the φ-form is not invariant under φ ↦ −1/φ"
        )));
    }
    let (a, b) = l.symmetric_decompose();
    if !b.is_zero() {
        return Err(Error::logic(format!(
            "{what} of the φ-form has a surviving (φ + 1/φ) component"
        )));
    }
    // u = 2y
    Ok(a.scale_var(&int(2)))
}

fn transform_unchecked(f: &RationalFunction) -> Result<RationalFunction> {
    if f.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let (num, den) = phi_form(f);
    RationalFunction::new(
        invariant_to_y(&num, "numerator")?,
        invariant_to_y(&den, "denominator")?,
    )
}

/// Landen transform of an even integrable rational function; the result `g`
/// is even and `∫₀^∞ f = ∫₀^∞ g`.
pub fn landen_transform(f: &RationalFunction) -> Result<RationalFunction> {
    if !f.is_even() {
        return Err(Error::domain(
            "landen_transform takes even functions; use landen_transform_whole_line",
        ));
    }
    check_integrable(f)?;
    transform_unchecked(f)
}

/// Landen transform for an arbitrary integrable rational function, preserving
/// the integral over the whole line.
pub fn landen_transform_whole_line(f: &RationalFunction) -> Result<RationalFunction> {
    check_integrable(f)?;
    transform_unchecked(f)
}

/// `Q(x) = 1/(x⁴ + 2a·x² + 1)^(m+1)`.
pub fn quartic_integrand(a: &ExactScalar, m: u32) -> RationalFunction {
    let base = Poly::new(vec![int(1), int(0), a * int(2), int(0), int(1)]);
    RationalFunction::new(Poly::one(), base.pow(m + 1)).expect("nonzero denominator")
}

/// `Q₁(y) = T_m(2y) / (2^m (1 + a + 2y²)^(m+1))`, the Landen image of `Q`.
pub fn quartic_q1(a: &ExactScalar, m: u32) -> RationalFunction {
    let base = Poly::new(vec![int(1) + a, int(0), int(2)]);
    let den = base.pow(m + 1).scale(&crate::exact::scalar::pow2(m as i64));
    RationalFunction::new(t_poly_of_2y(m), den).expect("nonzero denominator")
}

/// `N(a; m)` by integrating `Q₁` term by term:
///
/// ```text
/// ∫₀^∞ Q₁ = [2(1+a)]^(−(m+1/2)) Σ_k C(m+k, m−k) 2^k (1+a)^k ∫₀^∞ t^(2k)/(1+t²)^(m+1) dt
/// ```
///
/// The sum is formed exactly at the binary value of `a`; every term is positive.
pub fn quartic_via_landen(a: f64, m: u32) -> Result<f64> {
    if !(a.is_finite() && a > -1.0) {
        return Err(Error::domain(format!("need a > -1, got {a}")));
    }
    let one_plus_a = int(1) + from_f64(a)?;
    let mu = m as u64;
    let mut sum = ExactScalar::zero();
    let mut power = int(1);
    for k in 0..=m {
        let moment = even_moment(k, m)?;
        let c = ExactScalar::from_integer(binomial(mu + k as u64, (m - k) as i64));
        sum += c * &power * moment.q();
        power *= int(2) * &one_plus_a;
    }
    let base = 2.0 * (a + 1.0);
    Ok(std::f64::consts::PI * to_f64(&sum) / (base.powi(m as i32) * base.sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{quartic_value, rat};
    use crate::quadrature::{integrate, integrate_half_line, Domain, IntegrandSpec};

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    fn half_line(f: &RationalFunction) -> f64 {
        integrate_half_line(|x| f.eval_f64(x), 1e-13).unwrap().value
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn arctangent_kernel_is_fixed() {
        let f = rf(&[1], &[1, 0, 1]);
        let g = landen_transform(&f).unwrap();
        assert_eq!(g, f);
        assert!(rel(half_line(&g), std::f64::consts::FRAC_PI_2) < 1e-12);
    }

    #[test]
    fn quartic_m0_a1() {
        let q = quartic_integrand(&int(1), 0);
        let g = landen_transform(&q).unwrap();
        assert_eq!(g, quartic_q1(&int(1), 0));
        assert_eq!(g, rf(&[1], &[2, 0, 2]));
    }

    #[test]
    fn quartic_q1_examples() {
        for a in [rat(1, 2), int(3)] {
            assert_eq!(
                quartic_q1(&a, 0),
                RationalFunction::new(Poly::one(), Poly::new(vec![int(1) + &a, int(0), int(2)]))
                    .unwrap()
            );
        }
        // (1 + 4y²)/(2(2 + 2y²)²)
        let expected = RationalFunction::new(
            Poly::from_ints(&[1, 0, 4]),
            Poly::from_ints(&[2, 0, 2]).pow(2).scale(&int(2)),
        )
        .unwrap();
        assert_eq!(quartic_q1(&int(1), 1), expected);
        assert_eq!(
            landen_transform(&quartic_integrand(&rat(7, 5), 3)).unwrap(),
            quartic_q1(&rat(7, 5), 3)
        );
    }

    #[test]
    fn image_of_q_is_q1() {
        for a in [rat(1, 2), int(1), int(3), int(10)] {
            for m in 0..=8 {
                let g = landen_transform(&quartic_integrand(&a, m)).unwrap();
                assert_eq!(g, quartic_q1(&a, m), "a = {a}, m = {m}");
            }
        }
    }

    #[test]
    fn even_corpus_preserves_half_line_integral() {
        let corpus = [
            rf(&[1], &[1, 0, 1]),
            rf(&[1, 0, 3], &[2, 0, 1, 0, 5]),
            rf(&[0, 0, 1], &[1, 0, 1]).pow_den(2),
            rf(&[3, 0, 0, 0, 1], &[1, 0, 1, 0, 2, 0, 1]),
            quartic_integrand(&rat(-1, 2), 2),
        ];
        for f in &corpus {
            let g = landen_transform(f).unwrap();
            assert!(g.is_even());
            let (a, b) = (half_line(f), half_line(&g));
            assert!(rel(a, b) < 1e-9, "{f}: {a} vs {b}");
        }
    }

    #[test]
    fn whole_line_general_case() {
        // 1/(x² + x + 1) integrates to 2π/√3 over ℝ
        let f = rf(&[1], &[1, 1, 1]);
        assert!(landen_transform(&f).is_err());
        let g = landen_transform_whole_line(&f).unwrap();
        let whole = |h: &RationalFunction| {
            integrate(&IntegrandSpec::new(|x| h.eval_f64(x), Domain::WholeLine).rel_tol(1e-13))
                .unwrap()
                .value
        };
        let expected = 2.0 * std::f64::consts::PI / 3f64.sqrt();
        assert!(rel(whole(&f), expected) < 1e-11);
        assert!(rel(whole(&g), expected) < 1e-11);
    }

    #[test]
    fn rejects_non_integrable_inputs() {
        assert!(matches!(
            landen_transform(&rf(&[1], &[-1, 0, 1])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            landen_transform(&rf(&[0, 0, 1], &[1, 0, 1])),
            Err(Error::Domain(_))
        ));
        // double real root at ±1 with no sign change: caught by the Sturm count
        assert!(matches!(
            landen_transform(&rf(&[1], &[1, 0, -2, 0, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn landen_route_matches_closed_form() {
        for a in [0.1, 0.5, 1.0, 2.0, 10.0] {
            for m in 0..=8 {
                let v = quartic_via_landen(a, m).unwrap();
                assert!(rel(v, quartic_value(a, m).unwrap()) < 1e-13);
            }
        }
        assert!(quartic_via_landen(-1.0, 2).is_err());
    }

    trait PowDen {
        fn pow_den(self, k: u32) -> RationalFunction;
    }

    impl PowDen for RationalFunction {
        fn pow_den(self, k: u32) -> RationalFunction {
            RationalFunction::new(self.num().clone(), self.den().pow(k)).unwrap()
        }
    }
}
