//! Exact rational-function algebra for the Landen change of variables.

mod cot;
mod landen;
pub mod laurent;
pub mod rational;

pub use cot::cot_multiple;
pub use landen::{
    check_integrable, landen_transform, landen_transform_whole_line, quartic_integrand, quartic_q1,
    quartic_via_landen,
};
pub use laurent::LaurentPoly;
pub use rational::RationalFunction;
