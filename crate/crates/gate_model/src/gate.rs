use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    #[serde(rename = "NOT")]
    Not,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "CCNOT")]
    Ccnot,
    /// Controlled qubit rotation with a static angle.
    #[serde(rename = "CRY")]
    Cry,
    /// Controlled rotation on levels {2,1} of a padded qutrit, static angle.
    #[serde(rename = "CR3")]
    Cr3,
    /// Rotation whose matrix is computed from live register contents.
    #[serde(rename = "DATA_ROT")]
    DataRot,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Ccnot => "CCNOT",
            GateKind::Cry => "CRY",
            GateKind::Cr3 => "CR3",
            GateKind::DataRot => "DATA_ROT",
        })
    }
}

/// Formula evaluated by a [`GateKind::DataRot`] gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    /// Qubit rotation with `cos θ = sqrt(q / (λ1 - λ2 + 1))`.
    /// Operands: `[λ1, λ2, q]`; target: the path bit.
    Su2CgAngle,
    /// Isoscalar rotation `R(F)` on the path qutrit.
    /// Operands: `[λ1, λ2, λ3, k, l]` holding the parent irrep and `(k'', l'')`.
    Su3RhoSigma,
    /// Isospin rotation `R(θ)` on qutrit levels {2,1}.
    /// Operands: `[k, l, m]` holding `(k1, l1, m'')`.
    Su3Isospin,
}

impl FormulaId {
    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Su2CgAngle => "su2_cg_angle",
            FormulaId::Su3RhoSigma => "su3_rho_sigma",
            FormulaId::Su3Isospin => "su3_isospin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Control {
    pub bit: usize,
    /// 1 fires on |1>, 0 fires on |0>.
    pub polarity: u8,
}

impl Control {
    pub fn on(bit: usize) -> Self {
        Self { bit, polarity: 1 }
    }

    pub fn off(bit: usize) -> Self {
        Self { bit, polarity: 0 }
    }

    pub fn fires(&self, bits: &[u8]) -> bool {
        bits[self.bit] == self.polarity
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    #[serde(rename = "type")]
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_id: Option<FormulaId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operands: Option<Vec<String>>,
    /// Static rotation: `cos θ = sqrt(theta_num / theta_den)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_num: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_den: Option<i64>,
    /// Part of a block that returns scratch or carry bits to 0.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub uncompute: bool,
}

impl Gate {
    fn classical(kind: GateKind, target: usize, controls: Vec<Control>) -> Self {
        Self {
            kind,
            targets: vec![target],
            controls,
            formula_id: None,
            operands: None,
            theta_num: None,
            theta_den: None,
            uncompute: false,
        }
    }

    pub fn not(target: usize) -> Self {
        Self::classical(GateKind::Not, target, vec![])
    }

    pub fn cnot(control: Control, target: usize) -> Self {
        Self::classical(GateKind::Cnot, target, vec![control])
    }

    pub fn ccnot(c1: Control, c2: Control, target: usize) -> Self {
        Self::classical(GateKind::Ccnot, target, vec![c1, c2])
    }

    pub fn data_rot(formula: FormulaId, targets: Vec<usize>, operands: &[&str]) -> Self {
        Self {
            kind: GateKind::DataRot,
            targets,
            controls: vec![],
            formula_id: Some(formula),
            operands: Some(operands.iter().map(|s| s.to_string()).collect()),
            theta_num: None,
            theta_den: None,
            uncompute: false,
        }
    }

    pub fn static_rot(kind: GateKind, targets: Vec<usize>, controls: Vec<Control>, num: i64, den: i64) -> Self {
        Self {
            kind,
            targets,
            controls,
            formula_id: None,
            operands: None,
            theta_num: Some(num),
            theta_den: Some(den),
            uncompute: false,
        }
    }

    pub fn marked_uncompute(mut self) -> Self {
        self.uncompute = true;
        self
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.kind, GateKind::Not | GateKind::Cnot | GateKind::Ccnot)
    }

    /// Applies a NOT/CNOT/CCNOT to a bit vector; other kinds are left alone
    /// and return `false`.
    pub fn apply_bits(&self, bits: &mut [u8]) -> bool {
        if !self.is_classical() {
            return false;
        }
        if self.controls.iter().all(|c| c.fires(bits)) {
            for &t in &self.targets {
                bits[t] ^= 1;
            }
        }
        true
    }
}

/// Runs a classical gate list on a bit vector.
///
/// Panics on a non-classical gate.
pub fn run_classical(gates: &[Gate], bits: &mut [u8]) {
    for g in gates {
        assert!(g.apply_bits(bits), "{} is not a classical gate", g.kind);
    }
}
