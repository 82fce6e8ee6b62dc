use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::scalar::to_f64;
use crate::exact::{ExactScalar, Poly};

/// Quotient of polynomials in canonical form: `gcd(num, den) = 1` and `den`
/// monic. Structural equality is therefore equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g)?;
        let (mut den, _) = den.div_rem(&g)?;
        let lc = den.leading().expect("nonzero").clone();
        if lc != ExactScalar::from_integer(1.into()) {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `f(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(self.num.reflect(), self.den.reflect()).expect("reflection keeps den nonzero")
    }

    pub fn is_even(&self) -> bool {
        self.reflect() == *self
    }

    pub fn eval(&self, x: &ExactScalar) -> Result<ExactScalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::domain(format!("pole at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Double-precision value. For `|x| > 1` both polynomials are evaluated in
    /// `1/x` so high degrees do not overflow.
    pub fn eval_f64(&self, x: f64) -> f64 {
        if x.abs() <= 1.0 {
            return self.num.eval_f64(x) / self.den.eval_f64(x);
        }
        let (dn, dd) = match (self.num.degree(), self.den.degree()) {
            (Some(dn), Some(dd)) => (dn, dd),
            _ => return 0.0,
        };
        let inv = 1.0 / x;
        let reversed = |p: &Poly| p.coeffs().iter().fold(0.0, |acc, c| acc * inv + to_f64(c));
        let ratio = reversed(&self.num) / reversed(&self.den);
        ratio * x.powi(dn as i32 - dd as i32)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<Self> {
        // Homogenize: p(N/D)·D^k for k = max degree.
        let k = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let homogenize = |p: &Poly| {
            let mut acc = Poly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &inner.num.pow(i as u32) * &inner.den.pow((k - i) as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        Self::new(homogenize(&self.num), homogenize(&self.den))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        format!(
            "({}) / ({})",
            self.num.to_string_in(var),
            self.den.to_string_in(var)
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (2x² − 2)/(4x − 4) = (x + 1)/2 → num (1/2)x + 1/2, den 1
        let f = rf(&[-2, 0, 2], &[-4, 4]);
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(rf(&[1], &[2, 2]), rf(&[2], &[4, 4]));
        assert!(RationalFunction::new(Poly::one(), Poly::zero()).is_err());
        assert_eq!(rf(&[0], &[1, 1]), RationalFunction::zero());
    }

    #[test]
    fn evenness() {
        assert!(rf(&[1], &[1, 0, 1]).is_even());
        assert!(!rf(&[0, 1], &[1, 0, 1]).is_even());
        // x/(x³ + x) reduces to 1/(x² + 1)
        assert!(rf(&[0, 1], &[0, 1, 0, 1]).is_even());
    }

    #[test]
    fn large_argument_evaluation_is_stable() {
        let den = Poly::from_ints(&[1, 0, 1]).pow(20);
        let f = RationalFunction::new(Poly::from_ints(&[0, 0, 1]).pow(10), den).unwrap();
        let x = 1e12f64;
        let expected = 1.0 / (x * x).powi(10) / (1.0 + 1.0 / (x * x)).powi(20);
        assert!(((f.eval_f64(x) - expected) / expected).abs() < 1e-14);
    }

    #[test]
    fn display() {
        assert_eq!(
            rf(&[-1, 0, 1], &[0, 2]).to_string(),
            "(1/2*x^2 - 1/2) / (x)"
        );
    }

    proptest! {
        #[test]
        fn field_operations_agree_with_evaluation(
            n1 in prop::collection::vec(-5i64..5, 1..4), d1 in prop::collection::vec(-5i64..5, 1..4),
            n2 in prop::collection::vec(-5i64..5, 1..4), d2 in prop::collection::vec(-5i64..5, 1..4),
            x in -7i64..7,
        ) {
            let (pd1, pd2) = (Poly::from_ints(&d1), Poly::from_ints(&d2));
            prop_assume!(!pd1.is_zero() && !pd2.is_zero());
            let x = rat(2 * x + 1, 3);
            prop_assume!(!pd1.eval(&x).is_zero() && !pd2.eval(&x).is_zero());
            let f = RationalFunction::new(Poly::from_ints(&n1), pd1).unwrap();
            let g = RationalFunction::new(Poly::from_ints(&n2), pd2).unwrap();
            let (fx, gx) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
            prop_assert_eq!((&f + &g).eval(&x).unwrap(), &fx + &gx);
            prop_assert_eq!((&f * &g).eval(&x).unwrap(), &fx * &gx);
            prop_assert_eq!((&f - &g).eval(&x).unwrap(), &fx - &gx);
            if let (Ok(fg), Ok(expected)) = (f.compose(&g), f.eval(&gx)) {
                prop_assert_eq!(fg.eval(&x).unwrap(), expected);
            }
        }
    }
}
