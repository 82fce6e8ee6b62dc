//! Laurent polynomials in `φ` and their reduction under `φ ↦ −1/φ`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exact::{ExactScalar, Poly};

/// Finite sum `Σ c_e φ^e` over integer exponents. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, ExactScalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExactScalar::from_integer(1.into()), 0)
    }

    pub fn monomial(c: ExactScalar, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { terms }
    }

    /// `p(φ)`.
    pub fn from_poly(p: &Poly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as i64, c.clone());
        }
        out
    }

    /// `p(−1/φ)`.
    pub fn from_poly_at_neg_inv(p: &Poly) -> Self {
        Self::from_poly(p).substitute_neg_inv()
    }

    fn add_term(&mut self, exponent: i64, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> ExactScalar {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactScalar)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (&e, a) in &self.terms {
            out.add_term(e, a * c);
        }
        out
    }

    /// Multiplies by `φ^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// `L(−1/φ)`: `c φ^e ↦ (−1)^e c φ^(−e)`.
    pub fn substitute_neg_inv(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (-e, if e % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// `L(−1/φ) = L(φ)`.
    pub fn is_invariant(&self) -> bool {
        self.substitute_neg_inv() == *self
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Writes `L = A(u) + w·B(u)` with `u = φ − φ⁻¹` and `w = φ + φ⁻¹`.
    ///
    /// Both `u^j` and `w·u^(j−1)` have leading term `φ^j`; their trailing terms
    /// `(−1)^j φ^(−j)` and `(−1)^(j−1) φ^(−j)` differ in sign, so the two extreme
    /// coefficients of the residual fix one `A` and one `B` coefficient per step.
    pub fn symmetric_decompose(&self) -> (Poly, Poly) {
        let span = self
            .terms
            .keys()
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let u = LaurentPoly::from_poly(&Poly::from_ints(&[-1, 0, 1])).shift(-1);
        let w = LaurentPoly::from_poly(&Poly::from_ints(&[1, 0, 1])).shift(-1);
        let mut u_pows = Vec::with_capacity(span + 1);
        u_pows.push(Self::one());
        for j in 1..=span {
            let next = &u_pows[j - 1] * &u;
            u_pows.push(next);
        }

        let half = ExactScalar::new(1.into(), 2.into());
        let mut a = vec![ExactScalar::zero(); span + 1];
        let mut b = vec![ExactScalar::zero(); span.max(1)];
        let mut residual = self.clone();
        for j in (1..=span).rev() {
            let p = residual.coeff(j as i64);
            let q = residual.coeff(-(j as i64));
            let q_signed = if j % 2 == 0 { q } else { -q };
            let alpha = (&p + &q_signed) * &half;
            let beta = (&p - &q_signed) * &half;
            if !alpha.is_zero() {
                residual = &residual - &u_pows[j].scale(&alpha);
            }
            if !beta.is_zero() {
                residual = &residual - &(&w * &u_pows[j - 1]).scale(&beta);
            }
            a[j] = alpha;
            b[j - 1] = beta;
        }
        a[0] = residual.coeff(0);
        debug_assert!(residual.terms.keys().all(|&e| e == 0));
        (Poly::new(a), Poly::new(b))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-ExactScalar::from_integer(1.into()))
    }
}
