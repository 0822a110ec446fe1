use std::collections::HashSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::gate::{Gate, GateKind};
use crate::GateModelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircuitGroup {
    Su2,
    Su3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegisterKind {
    #[serde(rename = "qubit-array")]
    QubitArray,
    /// Qutrits stored as bit pairs `(hi, lo)`: 0 = 00, 1 = 01, 2 = 10.
    #[serde(rename = "padded-qutrit-array")]
    PaddedQutritArray,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegisterRole {
    Data,
    Ancilla,
    Carry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Register {
    pub name: String,
    pub kind: RegisterKind,
    /// Width in bits, two per qutrit for padded arrays.
    pub width: usize,
    pub role: RegisterRole,
}

impl Register {
    /// Number of digits: bits for qubit arrays, bit pairs for qutrit arrays.
    pub fn digits(&self) -> usize {
        match self.kind {
            RegisterKind::QubitArray => self.width,
            RegisterKind::PaddedQutritArray => self.width / 2,
        }
    }
}

/// Registers laid out back to back in declaration order, plus a gate list
/// in execution order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub group: CircuitGroup,
    pub n: usize,
    pub registers: Vec<Register>,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(group: CircuitGroup, n: usize) -> Self {
        Self { group, n, registers: Vec::new(), gates: Vec::new() }
    }

    /// Declares a register and returns its bit range.
    pub fn add_register(
        &mut self,
        name: &str,
        kind: RegisterKind,
        width: usize,
        role: RegisterRole,
    ) -> Range<usize> {
        let start = self.num_bits();
        self.registers.push(Register { name: name.to_string(), kind, width, role });
        start..start + width
    }

    pub fn num_bits(&self) -> usize {
        self.registers.iter().map(|r| r.width).sum()
    }

    pub fn register(&self, name: &str) -> Option<&Register> {
        self.registers.iter().find(|r| r.name == name)
    }

    pub fn range(&self, name: &str) -> Option<Range<usize>> {
        let mut start = 0;
        for r in &self.registers {
            if r.name == name {
                return Some(start..start + r.width);
            }
            start += r.width;
        }
        None
    }

    /// Bit ranges of every register, in declaration order.
    pub fn layout(&self) -> Vec<(&Register, Range<usize>)> {
        let mut start = 0;
        self.registers
            .iter()
            .map(|r| {
                let range = start..start + r.width;
                start += r.width;
                (r, range)
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), GateModelError> {
        let mut names = HashSet::new();
        for r in &self.registers {
            if !names.insert(r.name.as_str()) {
                return Err(GateModelError::Register(format!("duplicate register {}", r.name)));
            }
            if r.kind == RegisterKind::PaddedQutritArray && r.width % 2 != 0 {
                return Err(GateModelError::Register(format!(
                    "padded qutrit register {} has odd width {}",
                    r.name, r.width
                )));
            }
        }
        let bits = self.num_bits();
        for (i, g) in self.gates.iter().enumerate() {
            self.validate_gate(g, bits).map_err(|why| GateModelError::Gate { index: i, why })?;
        }
        Ok(())
    }

    fn validate_gate(&self, g: &Gate, bits: usize) -> Result<(), String> {
        let (ntargets, ncontrols): (usize, Option<usize>) = match g.kind {
            GateKind::Not => (1, Some(0)),
            GateKind::Cnot => (1, Some(1)),
            GateKind::Ccnot => (1, Some(2)),
            GateKind::Cry => (1, None),
            GateKind::Cr3 => (2, None),
            GateKind::DataRot => (g.targets.len().max(1), None),
        };
        if g.targets.len() != ntargets {
            return Err(format!("{} expects {ntargets} target bit(s)", g.kind));
        }
        if let Some(c) = ncontrols {
            if g.controls.len() != c {
                return Err(format!("{} expects {c} control(s)", g.kind));
            }
        }
        let mut seen = HashSet::new();
        for &t in &g.targets {
            if t >= bits {
                return Err(format!("target {t} out of range (circuit has {bits} bits)"));
            }
            if !seen.insert(t) {
                return Err(format!("bit {t} used twice"));
            }
        }
        for c in &g.controls {
            if c.bit >= bits {
                return Err(format!("control {} out of range", c.bit));
            }
            if c.polarity > 1 {
                return Err(format!("control polarity {} is not 0 or 1", c.polarity));
            }
            if !seen.insert(c.bit) {
                return Err(format!("bit {} is both control and target, or repeated", c.bit));
            }
        }
        match g.kind {
            GateKind::Cry | GateKind::Cr3 => match (g.theta_num, g.theta_den) {
                (Some(n), Some(d)) if d > 0 && (0..=d).contains(&n) => Ok(()),
                _ => Err("static rotation needs 0 <= theta_num <= theta_den, theta_den > 0".into()),
            },
            GateKind::DataRot => {
                if g.formula_id.is_none() {
                    return Err("DATA_ROT without formula_id".into());
                }
                let ops = g.operands.as_deref().unwrap_or_default();
                if ops.is_empty() {
                    return Err("DATA_ROT without operands".into());
                }
                for op in ops {
                    let r = self.range(op).ok_or_else(|| format!("unknown operand register {op}"))?;
                    if g.targets.iter().any(|t| r.contains(t)) {
                        return Err(format!("operand register {op} overlaps the target"));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Checks that every padded qutrit in a full bit assignment avoids 11.
    pub fn check_encoding(&self, bits: &[u8]) -> Result<(), GateModelError> {
        if bits.len() != self.num_bits() {
            return Err(GateModelError::Width { expected: self.num_bits(), got: bits.len() });
        }
        for (r, range) in self.layout() {
            if r.kind != RegisterKind::PaddedQutritArray {
                continue;
            }
            for (j, pair) in bits[range].chunks(2).enumerate() {
                if pair[0] == 1 && pair[1] == 1 {
                    return Err(GateModelError::Encoding { register: r.name.clone(), digit: j });
                }
            }
        }
        Ok(())
    }

    /// Runs a purely classical circuit on a bit assignment, checking the
    /// qutrit encoding before and after.
    pub fn apply_classical(&self, bits: &[u8]) -> Result<Vec<u8>, GateModelError> {
        self.check_encoding(bits)?;
        let mut out = bits.to_vec();
        for (i, g) in self.gates.iter().enumerate() {
            if !g.apply_bits(&mut out) {
                return Err(GateModelError::Gate { index: i, why: format!("{} is not classical", g.kind) });
            }
        }
        self.check_encoding(&out)?;
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, GateModelError> {
        let c: Circuit = serde_json::from_str(s).map_err(|e| GateModelError::Json(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }
}

/// Reads an unsigned integer from a little-endian bit slice.
pub fn read_binary(bits: &[u8]) -> u64 {
    bits.iter().rev().fold(0, |acc, &b| (acc << 1) | u64::from(b))
}

/// Writes `value` little-endian into `bits`.
pub fn write_binary(bits: &mut [u8], value: u64) {
    for (i, b) in bits.iter_mut().enumerate() {
        *b = ((value >> i) & 1) as u8;
    }
}

/// Reads a base-3 integer from padded qutrit pairs, digit 0 first.
/// Returns `None` on a `11` pair.
pub fn read_ternary(bits: &[u8]) -> Option<u64> {
    let mut v = 0;
    for pair in bits.chunks(2).rev() {
        let d = match (pair[0], pair[1]) {
            (0, 0) => 0,
            (0, 1) => 1,
            (1, 0) => 2,
            _ => return None,
        };
        v = v * 3 + d;
    }
    Some(v)
}

/// Writes `value` (taken mod 3^digits) as padded qutrit pairs, digit 0 first.
pub fn write_ternary(bits: &mut [u8], mut value: u64) {
    for pair in bits.chunks_mut(2) {
        let d = value % 3;
        value /= 3;
        pair[0] = u8::from(d == 2);
        pair[1] = u8::from(d == 1);
    }
}
