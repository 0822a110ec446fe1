//! SU(3) ladder operators, isoscalar factors and the inverse Schur transform
//! for qutrits.
//!
//! Quark codes: `u = 2`, `d = 1`, `s = 0`.

mod cascade;
mod isoscalar;
mod ladder;
mod rotation;

use thiserror::Error;

pub use cascade::{apply_ucg_inv_su3, decompose_su3, quark_code, Su3Term};
pub use isoscalar::{
    a_coeff, b_coeff, c_coeff, child_irrep, d_coeff, hws_isoscalars, isoscalar, IsoscalarQuery,
    QuarkType,
};
pub use ladder::{ladder_apply, LadderCoeffs, LadderOp};
pub use rotation::{
    isoscalar_matrix, isospin_angle, isospin_matrix, rotation_matrices, unshift, Channel, Flavor,
    RotationMatrix3, StepRotation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Su3Error {
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("malformed term: {0}")]
    Malformed(String),
    #[error("label is not an su3 label")]
    WrongGroup,
}
