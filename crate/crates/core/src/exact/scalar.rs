//! Exact rational scalars and the integer combinatorics every sum is built from.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type ExactScalar = BigRational;

pub fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(n))
}

/// `n/d` reduced. Panics on `d == 0` like any division by zero.
pub fn rat(n: i64, d: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(n), BigInt::from(d))
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> ExactScalar {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        ExactScalar::from_integer(p)
    } else {
        ExactScalar::new(BigInt::one(), p)
    }
}

/// Integer power with a signed exponent. Zero to a negative power is a domain error.
pub fn powi(x: &ExactScalar, e: i64) -> Result<ExactScalar> {
    if e < 0 && x.is_zero() {
        return Err(Error::domain("zero raised to a negative power"));
    }
    let mut acc = ExactScalar::one();
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    Ok(acc)
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Result<ExactScalar> {
    ExactScalar::from_float(x).ok_or_else(|| Error::domain(format!("non-finite value {x}")))
}

/// Nearest double. Values beyond the double range map to ±inf.
pub fn to_f64(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &ExactScalar) -> Option<ExactScalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(ExactScalar::new(n, d))
    } else {
        None
    }
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for a possibly negative top index in the sums where it can be
/// negative; zero when `n < 0`, matching the combinatorial convention used there.
pub(crate) fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Rising factorial `(a)_k = a(a+1)···(a+k−1)`; `(a)_0 = 1`.
pub fn pochhammer(a: &ExactScalar, k: u32) -> ExactScalar {
    let mut acc = ExactScalar::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += ExactScalar::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 3), pascal_row(10)[3]);
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..40usize {
            let row = pascal_row(n);
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&rat(-7, 3), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        // (-m)_k vanishes past k = m
        assert_eq!(pochhammer(&int(-3), 4), int(0));
    }

    #[test]
    fn pow_helpers() {
        assert_eq!(pow2(-3), rat(1, 8));
        assert_eq!(pow2(5), int(32));
        assert_eq!(powi(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert!(powi(&int(0), -1).is_err());
    }

    #[test]
    fn float_round_trip_is_exact() {
        let q = from_f64(0.1).unwrap();
        assert_ne!(q, rat(1, 10));
        assert_eq!(to_f64(&q), 0.1);
        assert!(from_f64(f64::NAN).is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
    }
}
