use std::collections::BTreeMap;

use serde::Serialize;

use crate::circuit::{Circuit, RegisterRole};
use crate::gate::{Gate, GateKind};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateTally {
    #[serde(rename = "NOT")]
    pub not: usize,
    #[serde(rename = "CNOT")]
    pub cnot: usize,
    #[serde(rename = "CCNOT")]
    pub ccnot: usize,
    #[serde(rename = "CRY")]
    pub cry: usize,
    #[serde(rename = "CR3")]
    pub cr3: usize,
    #[serde(rename = "DATA_ROT")]
    pub data_rot: usize,
}

impl GateTally {
    pub fn add(&mut self, kind: GateKind) {
        match kind {
            GateKind::Not => self.not += 1,
            GateKind::Cnot => self.cnot += 1,
            GateKind::Ccnot => self.ccnot += 1,
            GateKind::Cry => self.cry += 1,
            GateKind::Cr3 => self.cr3 += 1,
            GateKind::DataRot => self.data_rot += 1,
        }
    }

    pub fn of(gates: &[Gate]) -> Self {
        let mut t = Self::default();
        for g in gates {
            t.add(g.kind);
        }
        t
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self {
            not: self.not + other.not,
            cnot: self.cnot + other.cnot,
            ccnot: self.ccnot + other.ccnot,
            cry: self.cry + other.cry,
            cr3: self.cr3 + other.cr3,
            data_rot: self.data_rot + other.data_rot,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ResourceCounts {
    /// Gates not marked `uncompute`.
    pub compute: GateTally,
    pub uncompute: GateTally,
    pub total: GateTally,
    pub data_rot_by_formula: BTreeMap<String, usize>,
    pub bits: usize,
    pub data_bits: usize,
    pub ancilla_bits: usize,
    pub carry_bits: usize,
}

pub fn count_gates(gates: &[Gate]) -> ResourceCounts {
    let mut r = ResourceCounts::default();
    for g in gates {
        if g.uncompute {
            r.uncompute.add(g.kind);
        } else {
            r.compute.add(g.kind);
        }
        if let Some(f) = g.formula_id {
            *r.data_rot_by_formula.entry(f.name().to_string()).or_default() += 1;
        }
    }
    r.total = r.compute.sum(&r.uncompute);
    r
}

pub fn count_resources(circuit: &Circuit) -> ResourceCounts {
    let mut r = count_gates(&circuit.gates);
    for reg in &circuit.registers {
        r.bits += reg.width;
        match reg.role {
            RegisterRole::Data => r.data_bits += reg.width,
            RegisterRole::Ancilla => r.ancilla_bits += reg.width,
            RegisterRole::Carry => r.carry_bits += reg.width,
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binary_add_qubit, ternary_add_qubit, Qutrit, Scratch};
    use crate::circuit::CircuitGroup;
    use crate::gate::Control;

    #[test]
    fn empty_circuit_counts_nothing() {
        let r = count_resources(&Circuit::new(CircuitGroup::Su2, 1));
        assert_eq!(r, ResourceCounts::default());
    }

    #[test]
    fn adder_counts() {
        let g = binary_add_qubit(&[0, 1, 2], Control::on(3), &[4, 5]).unwrap();
        let r = count_gates(&g);
        assert_eq!((r.compute.cnot, r.compute.ccnot, r.compute.not), (3, 2, 0));
        assert_eq!(r.uncompute.ccnot, 2);
        let g = ternary_add_qubit(Qutrit::at(0), Control::on(2), 3, Scratch { x: 4, y: 5 }).unwrap();
        let r = count_gates(&g);
        assert_eq!((r.compute.not, r.compute.cnot, r.compute.ccnot), (2, 3, 3));
    }
}
