//! Terminating Gauss hypergeometric series.

use num_traits::{One, Zero};

use super::scalar::{int, ExactScalar};
use crate::error::{Error, Result};

/// `₂F₁(−m, b; c; z) = Σ_{k=0}^{m} (−m)_k (b)_k / ((c)_k k!) · z^k`, exactly.
///
/// `neg_m` is the first upper parameter and must be a nonpositive integer.
/// `c` may not be a nonpositive integer `−j` with `j < m`, since then `(c)_k`
/// vanishes inside the summation range.
pub fn hypergeom_2f1_terminating(
    neg_m: i64,
    b: &ExactScalar,
    c: &ExactScalar,
    z: &ExactScalar,
) -> Result<ExactScalar> {
    if neg_m > 0 {
        return Err(Error::domain(format!(
            "first parameter {neg_m} must be a nonpositive integer for termination"
        )));
    }
    let m = neg_m.unsigned_abs();
    if c.is_integer() && c <= &ExactScalar::zero() && c > &-int(m as i64) {
        return Err(Error::domain(format!(
            "lower parameter {c} makes (c)_k vanish inside the series"
        )));
    }
    let mut term = ExactScalar::one();
    let mut sum = ExactScalar::one();
    for k in 0..m as i64 {
        let kk = int(k);
        term = term * (int(neg_m) + &kk) * (b + &kk) / ((c + &kk) * int(k + 1)) * z;
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{factorial, pochhammer, rat};

    /// Term-by-term oracle straight from the Pochhammer definition.
    fn oracle(m: u32, b: &ExactScalar, c: &ExactScalar, z: &ExactScalar) -> ExactScalar {
        let neg_m = -int(m as i64);
        (0..=m)
            .map(|k| {
                pochhammer(&neg_m, k) * pochhammer(b, k)
                    / (pochhammer(c, k) * ExactScalar::from_integer(factorial(k as u64)))
                    * super::super::scalar::powi(z, k as i64).unwrap()
            })
            .sum()
    }

    #[test]
    fn binomial_special_case() {
        // (1+z)^n = ₂F₁(−n, b; b; −z)
        let z = rat(3, 7);
        for b in [rat(1, 2), int(5), rat(-7, 3)] {
            assert_eq!(
                hypergeom_2f1_terminating(-1, &b, &b, &-&z).unwrap(),
                int(1) + &z
            );
            let n = 6;
            let lhs = hypergeom_2f1_terminating(-n, &b, &b, &-&z).unwrap();
            let rhs = super::super::scalar::powi(&(int(1) + &z), n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            hypergeom_2f1_terminating(0, &rat(3, 2), &int(7), &int(100)).unwrap(),
            int(1)
        );
        // 1 − 3/5 + 1/10
        let v = hypergeom_2f1_terminating(-2, &int(3), &int(5), &rat(1, 2)).unwrap();
        assert_eq!(v, rat(1, 2));
        assert_eq!(v, oracle(2, &int(3), &int(5), &rat(1, 2)));
    }

    #[test]
    fn agrees_with_oracle() {
        for m in 0..10u32 {
            for (b, c, z) in [
                (int(m as i64 + 1), rat(2 * m as i64 + 3, 2), rat(-9, 2)),
                (rat(1, 3), rat(5, 7), rat(2, 3)),
                (int(-2), rat(-1, 2), int(3)),
            ] {
                assert_eq!(
                    hypergeom_2f1_terminating(-(m as i64), &b, &c, &z).unwrap(),
                    oracle(m, &b, &c, &z)
                );
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(hypergeom_2f1_terminating(1, &int(1), &int(1), &int(1)).is_err());
        assert!(hypergeom_2f1_terminating(-3, &int(1), &int(-1), &int(1)).is_err());
        assert!(hypergeom_2f1_terminating(-3, &int(1), &int(0), &int(1)).is_err());
        // (c)_k with c = −3 stays nonzero for k ≤ 3
        assert!(hypergeom_2f1_terminating(-3, &int(1), &int(-3), &int(1)).is_ok());
    }
}
