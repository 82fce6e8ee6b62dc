//! The polynomial `T_m` and the exactly checkable identities around it.

use num_traits::Zero;

use super::poly::Poly;
use super::scalar::{binomial, int, powi, sqrt_exact, to_f64, ExactScalar};
use crate::error::{Error, Result};

/// Relative tolerance for the floating-point branch of [`fib_sum_identity_check`].
pub const FIB_SUM_FLOAT_TOL: f64 = 1e-13;

/// `T_m(y) = Σ_{k=0}^{m} C(m+k, m−k) y^(2k)`.
pub fn t_poly(m: u32) -> Poly {
    let m = m as u64;
    let mut coeffs = vec![ExactScalar::zero(); 2 * m as usize + 1];
    for k in 0..=m {
        coeffs[2 * k as usize] = ExactScalar::from_integer(binomial(m + k, (m - k) as i64));
    }
    Poly::new(coeffs)
}

fn nonzero_phi(phi: &ExactScalar) -> Result<()> {
    if phi.is_zero() {
        Err(Error::domain("φ must be nonzero"))
    } else {
        Ok(())
    }
}

/// `(φ^(2m+1) + φ^(−(2m+1))) / (φ + φ^(−1))`.
fn phi_quotient(m: u32, phi: &ExactScalar) -> ExactScalar {
    let e = 2 * m as i64 + 1;
    let inv = phi.recip();
    (powi(phi, e).expect("φ ≠ 0") + powi(&inv, e).expect("φ ≠ 0")) / (phi + &inv)
}

fn t_at_phi(m: u32, phi: &ExactScalar) -> ExactScalar {
    t_poly(m).eval(&(phi - phi.recip()))
}

/// Exact check of `(φ^(2m+1) + φ^(−(2m+1)))/(φ + φ^(−1)) = T_m(φ − φ^(−1))`.
pub fn check_phi_identity(m: u32, phi: &ExactScalar) -> Result<bool> {
    nonzero_phi(phi)?;
    Ok(phi_quotient(m, phi) == t_at_phi(m, phi))
}

/// Exact check that both sides of the φ-identity satisfy
/// `c_(m+2) − (φ² + φ^(−2)) c_(m+1) + c_m = 0` at index `m`.
pub fn check_recurrence(m: u32, phi: &ExactScalar) -> Result<bool> {
    nonzero_phi(phi)?;
    let sq = phi * phi;
    let coupling = &sq + sq.recip();
    let holds = |c: &dyn Fn(u32) -> ExactScalar| (c(m + 2) - &coupling * c(m + 1) + c(m)).is_zero();
    Ok(holds(&|k| phi_quotient(k, phi)) && holds(&|k| t_at_phi(k, phi)))
}

/// `C(m+k, m−k)·C(2k, k) = C(m+k, m)·C(m, k)`.
pub fn binom_identity_check(m: u32, k: u32) -> bool {
    let (m, k) = (m as u64, k as i64);
    let lhs = binomial(m + k as u64, m as i64 - k) * binomial(2 * k as u64, k);
    let rhs = binomial(m + k as u64, m as i64) * binomial(m, k);
    lhs == rhs
}

/// Checks
///
/// ```text
/// (1/√(1+4z)) (B₋₁(z)^(n+1) − (−z)^(n+1) B₂(−z)^(n+1)) = Σ_{k=0}^{n} C(n−k, k) z^k
/// ```
///
/// with `B₋₁(z) = (1 + √(1+4z))/2` and `B₂(z) = (1 − √(1−4z))/(2z)`, `B₂(0) = 1`.
/// The check is exact when `1 + 4z` is the square of a rational and otherwise
/// runs in double precision with relative tolerance [`FIB_SUM_FLOAT_TOL`].
pub fn fib_sum_identity_check(n: u32, z: &ExactScalar) -> Result<bool> {
    let disc = int(1) + int(4) * z;
    if disc < ExactScalar::zero() {
        return Err(Error::domain(format!("1 + 4z = {disc} is negative")));
    }
    if disc.is_zero() {
        return Err(Error::domain(
            "1 + 4z = 0: the prefactor 1/√(1+4z) is undefined",
        ));
    }
    let rhs: ExactScalar = (0..=n as u64)
        .map(|k| {
            ExactScalar::from_integer(binomial(n as u64 - k, k as i64))
                * powi(z, k as i64).expect("nonnegative exponent")
        })
        .sum();
    let e = n as i64 + 1;

    if let Some(s) = sqrt_exact(&disc) {
        let b_minus_one = (int(1) + &s) / int(2);
        let second = if z.is_zero() {
            ExactScalar::zero()
        } else {
            let b_two = (int(1) - &s) / (int(-2) * z);
            powi(&(-z * b_two), e).expect("nonnegative exponent")
        };
        let lhs = (powi(&b_minus_one, e).expect("nonnegative exponent") - second) / s;
        return Ok(lhs == rhs);
    }

    let zf = to_f64(z);
    let s = to_f64(&disc).sqrt();
    let b_minus_one = (1.0 + s) / 2.0;
    let second = if zf == 0.0 {
        0.0
    } else {
        let b_two = (1.0 - s) / (-2.0 * zf);
        (-zf * b_two).powi(e as i32)
    };
    let lhs = (b_minus_one.powi(e as i32) - second) / s;
    let rhs = to_f64(&rhs);
    Ok((lhs - rhs).abs() <= FIB_SUM_FLOAT_TOL * rhs.abs().max(1.0))
}

/// Value of `T_m` at `2y`, used by the Landen route.
pub(crate) fn t_poly_of_2y(m: u32) -> Poly {
    t_poly(m).scale_var(&int(2))
}

/// `φ`-grid used by the identity sweeps: twenty distinct nonzero rationals,
/// including `1`, negatives, and values on both sides of `|φ| = 1`.
pub fn phi_grid() -> Vec<ExactScalar> {
    use super::scalar::rat;
    vec![
        rat(1, 1),
        rat(2, 1),
        rat(3, 1),
        rat(1, 2),
        rat(1, 3),
        rat(3, 5),
        rat(5, 3),
        rat(7, 3),
        rat(-1, 1),
        rat(-2, 1),
        rat(-3, 7),
        rat(-11, 4),
        rat(13, 8),
        rat(1, 10),
        rat(10, 1),
        rat(22, 7),
        rat(-5, 9),
        rat(17, 16),
        rat(99, 100),
        rat(-101, 50),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn t_poly_examples() {
        assert_eq!(t_poly(0), Poly::one());
        assert_eq!(t_poly(1), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(t_poly(2), Poly::from_ints(&[1, 0, 3, 0, 1]));
        for m in 0..10 {
            let t = t_poly(m);
            assert!(t.is_even());
            assert_eq!(t.degree(), Some(2 * m as usize));
        }
    }

    #[test]
    fn phi_identity_examples() {
        assert!(check_phi_identity(0, &rat(5, 7)).unwrap());
        assert_eq!(phi_quotient(1, &int(2)), rat(13, 4));
        assert_eq!(t_at_phi(1, &int(2)), rat(13, 4));
        assert!(check_phi_identity(1, &int(2)).unwrap());
        assert!(check_phi_identity(7, &rat(3, 5)).unwrap());
        assert!(check_phi_identity(3, &int(0)).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert!(check_recurrence(0, &int(2)).unwrap());
        assert!(check_recurrence(0, &int(1)).unwrap());
        assert!(check_recurrence(10, &rat(7, 3)).unwrap());
        assert!(check_recurrence(1, &int(0)).is_err());
    }

    #[test]
    fn recurrence_rejects_a_perturbed_sequence() {
        // c_m = T_m(φ − 1/φ) + 1 breaks the homogeneous recurrence.
        let phi = rat(3, 2);
        let sq = &phi * &phi;
        let coupling = &sq + sq.recip();
        let c = |k: u32| t_at_phi(k, &phi) + int(1);
        assert!(!(c(2) - &coupling * c(1) + c(0)).is_zero());
    }

    #[test]
    fn binom_identity_sweep() {
        assert!(binom_identity_check(0, 0));
        assert!(binom_identity_check(5, 3));
        for m in 0..=50 {
            for k in 0..=m {
                assert!(binom_identity_check(m, k), "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn fib_sum_examples() {
        assert!(fib_sum_identity_check(0, &rat(3, 11)).unwrap());
        assert!(fib_sum_identity_check(0, &int(0)).unwrap());
        // 1 + 4·2 = 9
        assert!(fib_sum_identity_check(2, &int(2)).unwrap());
        assert!(fib_sum_identity_check(6, &rat(37, 100)).unwrap());
        assert!(fib_sum_identity_check(3, &int(-1)).is_err());
        assert!(fib_sum_identity_check(3, &rat(-1, 4)).is_err());
    }

    proptest! {
        #[test]
        fn phi_identity_holds_on_random_rationals(m in 0u32..12, p in -40i64..40, q in 1i64..40) {
            prop_assume!(p != 0);
            let phi = rat(p, q);
            prop_assert!(check_phi_identity(m, &phi).unwrap());
            prop_assert!(check_recurrence(m, &phi).unwrap());
        }

        #[test]
        fn fib_sum_exact_on_square_discriminants(n in 0u32..20, p in 1i64..30, q in 1i64..30) {
            // 1 + 4z = (p/q)²
            let z = (rat(p * p, q * q) - int(1)) / int(4);
            prop_assume!(!(int(1) + int(4) * &z).is_zero());
            prop_assert!(fib_sum_identity_check(n, &z).unwrap());
        }
    }
}
