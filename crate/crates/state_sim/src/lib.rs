//! Sparse state-vector simulation over the bit registers of a [`Circuit`].
//!
//! Amplitudes are either exact sums of surds or `f64`. Data-dependent
//! rotations read their operand registers in each branch and evaluate the
//! same closed forms as the decomposition engines.
//!
//! [`Circuit`]: gate_model::Circuit

mod amp;
mod report;
mod sim;

use gate_model::GateModelError;
use thiserror::Error;

pub use amp::{exact_norm_squared, Amp};
pub use report::{report, FloatEntry, ReportEntry};
pub use sim::{
    apply_gate, extract, extract_with, init_state, run, to_amplitude_map, ExactState, Extracted,
    FloatState, SimState,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error(transparent)]
    Circuit(#[from] GateModelError),
    #[error("input sets non-data register {0}")]
    DirtyInput(String),
    #[error("unknown register {0}")]
    UnknownRegister(String),
    #[error("invalid qutrit encoding in {0}")]
    Encoding(String),
    #[error("gate {gate} on branch {branch}: {why}")]
    Fault { gate: usize, branch: String, why: String },
    #[error("register {0} is entangled with the kept registers")]
    Entangled(String),
    #[error("output key: {0}")]
    Key(String),
}
