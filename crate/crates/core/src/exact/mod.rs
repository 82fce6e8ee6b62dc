//! Exact arithmetic: rational scalars, polynomials, closed forms and identities.

pub mod hypergeom;
pub mod identities;
pub mod pi_rational;
pub mod poly;
pub mod quartic;
pub mod scalar;

pub use hypergeom::hypergeom_2f1_terminating;
pub use identities::{
    binom_identity_check, check_phi_identity, check_recurrence, fib_sum_identity_check, phi_grid,
    t_poly,
};
pub use pi_rational::{beta_half_integer, PiRational};
pub use poly::Poly;
pub use quartic::{
    d_coeff, d_coeff_oracle, even_moment, poly_p, poly_p_shifted, quartic_value, quartic_via_2f1,
    sqrt_quartic, QuarticClosedForm,
};
pub use scalar::{binomial, int, pochhammer, rat, ExactScalar};
