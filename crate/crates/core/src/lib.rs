//! Evaluation of the quartic integral
//!
//! ```text
//! N(a; m) = ∫₀^∞ dx / (x⁴ + 2a·x² + 1)^(m+1)
//! ```
//!
//! by several independent routes, plus the rational Landen machinery that
//! produces one of them:
//!
//! - [`exact`]: arbitrary-precision combinatorics. The coefficients `d_l(m)`,
//!   the polynomials `P_m` and `T_m`, closed-form moments, terminating ₂F₁
//!   series and the exactly checkable binomial identities.
//! - [`symbolic`]: the Landen change of variables `y = (x² − 1)/(2x)` carried
//!   out exactly with Laurent polynomials in `φ = y + √(y² + 1)`.
//! - [`numeric`]: iterative parameter schemes (AGM, the cubically convergent
//!   quadratic scheme, the degree-6 scheme) with convergence reports.
//! - [`quadrature`]: adaptive Gauss–Kronrod oracle on finite, half-line and
//!   whole-line domains, and the numerically checkable identities built on it.
//!
//! Every function is pure; all value types are `Send + Sync`.

pub mod error;
pub mod exact;
pub mod numeric;
pub mod quadrature;
pub mod symbolic;

pub use error::{Error, Result};
