//! Exact values `q·π^p` with `p ∈ {0, 1}`, and the half-integer gamma/beta
//! values that produce them.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::scalar::{factorial, pow2, to_f64, ExactScalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    q: ExactScalar,
    pi_power: u8,
}

impl PiRational {
    pub fn new(q: ExactScalar, pi_power: u8) -> Result<Self> {
        if pi_power > 1 {
            return Err(Error::domain(format!(
                "π power {pi_power} not representable"
            )));
        }
        Ok(PiRational { q, pi_power })
    }

    pub fn rational(q: ExactScalar) -> Self {
        PiRational { q, pi_power: 0 }
    }

    /// `q·π`.
    pub fn pi_times(q: ExactScalar) -> Self {
        PiRational { q, pi_power: 1 }
    }

    pub fn q(&self) -> &ExactScalar {
        &self.q
    }

    pub fn pi_power(&self) -> u8 {
        self.pi_power
    }

    pub fn to_f64(&self) -> f64 {
        let q = to_f64(&self.q);
        if self.pi_power == 1 {
            q * std::f64::consts::PI
        } else {
            q
        }
    }

    /// Sum of two values with the same π power; `None` otherwise.
    pub fn checked_add(&self, other: &PiRational) -> Option<PiRational> {
        if self.q.is_zero() {
            return Some(other.clone());
        }
        if other.q.is_zero() {
            return Some(self.clone());
        }
        (self.pi_power == other.pi_power).then(|| PiRational {
            q: &self.q + &other.q,
            pi_power: self.pi_power,
        })
    }

    pub fn scale(&self, c: &ExactScalar) -> PiRational {
        PiRational {
            q: &self.q * c,
            pi_power: self.pi_power,
        }
    }

    /// Multiplication; errors when the π powers would sum past one.
    pub fn checked_mul(&self, other: &PiRational) -> Result<PiRational> {
        PiRational::new(&self.q * &other.q, self.pi_power + other.pi_power)
    }
}

impl Mul<&ExactScalar> for &PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &ExactScalar) -> PiRational {
        self.scale(rhs)
    }
}

/// `5/32·π`, `3/4`, `1·π`.
impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_power == 1 {
            write!(f, "{}·π", self.q)
        } else {
            write!(f, "{}", self.q)
        }
    }
}

/// `Γ(x)` for a positive integer or half-integer `x`, as `(q, k)` meaning `q·√π^k`.
fn gamma_half_integer(x: &ExactScalar) -> Result<(ExactScalar, u8)> {
    let twice = x * ExactScalar::from_integer(2.into());
    if !twice.is_integer() || !x.is_positive() {
        return Err(Error::domain(format!(
            "gamma argument {x} is not a positive integer or half-integer"
        )));
    }
    let t: BigInt = twice.to_integer();
    let t = u64::try_from(t).map_err(|_| Error::domain("gamma argument too large"))?;
    if t % 2 == 0 {
        // Γ(n) = (n−1)!
        Ok((ExactScalar::from_integer(factorial(t / 2 - 1)), 0))
    } else {
        // Γ(n + 1/2) = (2n)! / (4^n n!) · √π
        let n = (t - 1) / 2;
        let q = ExactScalar::from_integer(factorial(2 * n)) * pow2(-2 * n as i64)
            / ExactScalar::from_integer(factorial(n));
        Ok((q, 1))
    }
}

/// `B(x, y) = Γ(x)Γ(y)/Γ(x+y)` for positive integers and half-integers.
pub fn beta_half_integer(x: &ExactScalar, y: &ExactScalar) -> Result<PiRational> {
    let (gx, px) = gamma_half_integer(x)?;
    let (gy, py) = gamma_half_integer(y)?;
    let (gxy, pxy) = gamma_half_integer(&(x + y))?;
    // √π powers: px + py − pxy ∈ {0, 2}.
    let sqrt_pi = px + py - pxy;
    PiRational::new(gx * gy / gxy, sqrt_pi / 2)
}
