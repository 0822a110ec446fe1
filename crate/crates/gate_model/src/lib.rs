//! Reversible gate set, circuit container and ripple-carry arithmetic over
//! qubit and padded-qutrit registers.

pub mod arith;
mod circuit;
mod gate;
mod resources;

use thiserror::Error;

pub use arith::{
    binary_add_qubit, binary_sub_qubit, ternary_add_qubit, ternary_register_add,
    ternary_register_add_qubit, ternary_register_sub, ternary_register_sub_qubit,
    ternary_sub_qubit, Qutrit, Scratch,
};
pub use circuit::{
    read_binary, read_ternary, write_binary, write_ternary, Circuit, CircuitGroup, Register,
    RegisterKind, RegisterRole,
};
pub use gate::{run_classical, Control, FormulaId, Gate, GateKind};
pub use resources::{count_gates, count_resources, GateTally, ResourceCounts};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateModelError {
    #[error("bit {0} used twice in one constructor")]
    Overlap(usize),
    #[error("layout: {0}")]
    Layout(String),
    #[error("register: {0}")]
    Register(String),
    #[error("gate {index}: {why}")]
    Gate { index: usize, why: String },
    #[error("assignment width: expected {expected} bits, got {got}")]
    Width { expected: usize, got: usize },
    #[error("invalid qutrit encoding 11 in {register} digit {digit}")]
    Encoding { register: String, digit: usize },
    #[error("circuit json: {0}")]
    Json(String),
}
