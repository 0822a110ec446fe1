//! Exact SU(2) coupling and the arithmetic inverse Schur transform for qubits.

mod amplitude;
mod cg;
mod sqrt_rational;

pub use amplitude::AmplitudeMap;
pub use cg::{
    apply_ucg_inv, clebsch_series, decompose_su2, jplus_half_coeffs, ladder_coeff, rotate_bit,
    ucg_inv_angle, ucg_inv_angle_primed, Direction, Su2Error, Su2Term,
};
pub use sqrt_rational::{exact_sqrt, SqrtRational, SurdSum};

pub use num_rational::BigRational;
