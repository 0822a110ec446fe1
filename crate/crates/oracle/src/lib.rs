//! Independent reference states built from dense generator matrices.
//!
//! Nothing here uses coupling coefficients: intermediate irreps are carved
//! out of the tensor product by Casimir eigenprojection and the weight vector
//! by diagonal generators. States agree with the engines up to a global sign.

mod generators;
mod schur;

use thiserror::Error;

pub use generators::{build_generators, GeneratorSet, OperatorMatrix, C64, HERMITIAN};
pub use schur::{casimir_f, casimir_h, dense, fidelity, oracle_state, sparse, EIGEN_TOL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("dimension: {0}")]
    Dimension(String),
    #[error("empty projection: {0}")]
    EmptyProjection(String),
    #[error("label: {0}")]
    Label(String),
}
