//! Circuits for the inverse Schur transform: one inverse Clebsch-Gordan block
//! per added particle, cascaded over the path register.

mod blocks;
mod plan;
mod predict;

use gate_model::GateModelError;
use thiserror::Error;

pub use blocks::{
    build_ucg_inv_su2, build_ucg_inv_su3, build_usch_inv, build_usch_inv_su2, build_usch_inv_su3,
};
pub use plan::{binary_width, ternary_width, SynthesisPlan};
pub use predict::{
    derived_resources, predicted_resources, register_width, DerivedCounts, GateFormula,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("a cascade needs at least 2 particles, got {0}")]
    TooFewParticles(usize),
    #[error("step {step} out of range (cascade has {steps} steps)")]
    StepOutOfRange { step: usize, steps: usize },
    #[error("plan and label are for different groups")]
    WrongGroup,
    #[error("label: {0}")]
    Label(String),
    #[error("output: {0}")]
    Output(String),
    #[error(transparent)]
    Gate(#[from] GateModelError),
}
