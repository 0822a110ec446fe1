use gate_model::CircuitGroup;
use serde::Serialize;

use crate::plan::{binary_width, ternary_width};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateFormula {
    #[serde(rename = "NOT")]
    pub not: u64,
    #[serde(rename = "CNOT")]
    pub cnot: u64,
    #[serde(rename = "CCNOT")]
    pub ccnot: u64,
    #[serde(rename = "DATA_ROT")]
    pub data_rot: u64,
}

/// Register width used for a cascade of `n` particles.
pub fn register_width(group: CircuitGroup, n: usize) -> usize {
    match group {
        CircuitGroup::Su2 => binary_width(n),
        CircuitGroup::Su3 => ternary_width(n),
    }
}

/// Closed-form gate counts, with `log n` read as `W - 1` so that the
/// `log n + 1` register width equals the width actually allocated.
///
/// Per block, SU(2): `4L+6` CNOT, `4L` CCNOT. SU(3): `56+36L` CNOT,
/// `50+36L` CCNOT, `34+24L` NOT. One controlled rotation per block.
pub fn predicted_resources(group: CircuitGroup, n: usize) -> GateFormula {
    let steps = n.saturating_sub(1) as u64;
    let l = register_width(group, n) as u64 - 1;
    let per = match group {
        CircuitGroup::Su2 => GateFormula { not: 0, cnot: 4 * l + 6, ccnot: 4 * l, data_rot: 1 },
        CircuitGroup::Su3 => GateFormula {
            not: 34 + 24 * l,
            cnot: 56 + 36 * l,
            ccnot: 50 + 36 * l,
            data_rot: 1,
        },
    };
    scale(per, steps)
}

/// Exact counts of the circuits built here, split into the compute path and
/// the gates that return carries, scratch and flags to 0.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DerivedCounts {
    pub compute: GateFormula,
    pub uncompute: GateFormula,
    pub bits: u64,
}

pub fn derived_resources(group: CircuitGroup, n: usize) -> DerivedCounts {
    let steps = n.saturating_sub(1) as u64;
    let w = register_width(group, n) as u64;
    let nn = n as u64;
    match group {
        // four W-bit ripples and two ancilla CNOTs per block
        CircuitGroup::Su2 => DerivedCounts {
            compute: scale(GateFormula { not: 0, cnot: 4 * w + 2, ccnot: 4 * (w - 1), data_rot: 1 }, steps),
            uncompute: scale(GateFormula { not: 0, cnot: 0, ccnot: 4 * (w - 1), data_rot: 0 }, steps),
            bits: 3 * w + nn.saturating_sub(1) + 1 + (w - 1),
        },
        // nine W-qutrit ripples (3 add, 6 sub), the flag CCNOT pair and two rotations
        CircuitGroup::Su3 => DerivedCounts {
            compute: scale(
                GateFormula { not: 18 * w, cnot: 27 * w, ccnot: 27 * w + 1, data_rot: 2 },
                steps,
            ),
            uncompute: scale(
                GateFormula { not: 9 * w, cnot: 39 * w, ccnot: 27 * w + 1, data_rot: 0 },
                steps,
            ),
            bits: 12 * w + 2 * nn.saturating_sub(1) + 3 + w,
        },
    }
}

fn scale(f: GateFormula, k: u64) -> GateFormula {
    GateFormula { not: f.not * k, cnot: f.cnot * k, ccnot: f.ccnot * k, data_rot: f.data_rot * k }
}
