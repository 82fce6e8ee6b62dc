use super::rational::RationalFunction;
use crate::error::{Error, Result};
use crate::exact::Poly;

/// `R_m` with `cot(mθ) = R_m(cot θ)`, from `R_(k+1) = (x·R_k − 1)/(x + R_k)`.
pub fn cot_multiple(m: u32) -> Result<RationalFunction> {
    if m == 0 {
        return Err(Error::domain("cot_multiple needs m ≥ 1"));
    }
    let x = RationalFunction::from_poly(Poly::x());
    let one = RationalFunction::from_poly(Poly::one());
    let mut r = x.clone();
    for _ in 1..m {
        r = (&(&(&x * &r) - &one) / &(&x + &r))?;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(cot_multiple(1).unwrap(), rf(&[0, 1], &[1]));
        assert_eq!(cot_multiple(2).unwrap(), rf(&[-1, 0, 1], &[0, 2]));
        assert_eq!(cot_multiple(3).unwrap(), rf(&[0, -3, 0, 1], &[-1, 0, 3]));
        assert!(cot_multiple(0).is_err());
    }

    #[test]
    fn agrees_with_cotangent() {
        for m in 1..=7u32 {
            let r = cot_multiple(m).unwrap();
            for theta in [0.1f64, 0.37, 1.1, 2.0] {
                let expected = 1.0 / (m as f64 * theta).tan();
                let got = r.eval_f64(1.0 / theta.tan());
                assert!(
                    (got - expected).abs() <= 1e-9 * (1.0 + expected.abs()),
                    "m = {m}"
                );
            }
        }
    }

    #[test]
    fn composition_multiplies_index() {
        for m in 1..=4 {
            for n in 1..=4 {
                let rm = cot_multiple(m).unwrap();
                let rn = cot_multiple(n).unwrap();
                assert_eq!(
                    rm.compose(&rn).unwrap(),
                    cot_multiple(m * n).unwrap(),
                    "m = {m}, n = {n}"
                );
            }
        }
    }
}
