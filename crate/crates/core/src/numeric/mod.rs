//! Iterative parameter schemes whose limits evaluate integrals: the AGM, the
//! cubically convergent scheme for `∫_ℝ dx/(ax² + bx + c)`, and the degree-6
//! rational Landen scheme for `U₆`.

mod agm;
mod deg6;
mod quad2;
mod report;

pub use agm::{agm, agm_with_report, elliptic_g};
pub use deg6::{landen_iterate6, landen_step6, u6_by_quadrature, DMap, LandenState6};
pub use quad2::{landen_iterate2, landen_step2, quad2_by_quadrature, LandenState2};
pub use report::{estimate_order, ConvergenceReport};

/// Step budget shared by every scheme.
pub const MAX_ITERATIONS: usize = 64;
