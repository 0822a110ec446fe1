use std::ops::Range;

use gate_model::{
    read_binary, read_ternary, write_binary, write_ternary, Circuit, CircuitGroup, Qutrit,
    RegisterKind, RegisterRole, Scratch,
};
use rep_core::{SchurLabel, Weight};

use crate::SynthError;

/// Bits needed to hold `0..=n`.
pub fn binary_width(n: usize) -> usize {
    ((usize::BITS - n.leading_zeros()) as usize).max(1)
}

/// Qutrits needed to hold `0..=n`.
pub fn ternary_width(n: usize) -> usize {
    let mut w = 1;
    let mut cap = 3usize;
    while cap <= n {
        cap *= 3;
        w += 1;
    }
    w
}

/// Register layout shared by every block of one cascade.
///
/// SU(2): `lam1 lam2 q` (binary, W bits), `path` (n−1 bits), `anc`, `carry`
/// (W−1). SU(3): `lam1 lam2 lam3 k l m` (W qutrits), `path` (n−1 qutrits),
/// `flag`, `scratch` (2), `carry` (W).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisPlan {
    pub group: CircuitGroup,
    pub n: usize,
    /// Digits per arithmetic register.
    pub width: usize,
    skeleton: Circuit,
}

pub(crate) const SU2_DATA: [&str; 3] = ["lam1", "lam2", "q"];
pub(crate) const SU3_DATA: [&str; 6] = ["lam1", "lam2", "lam3", "k", "l", "m"];

impl SynthesisPlan {
    pub fn new(group: CircuitGroup, n: usize) -> Result<Self, SynthError> {
        if n < 2 {
            return Err(SynthError::TooFewParticles(n));
        }
        let mut c = Circuit::new(group, n);
        let width = match group {
            CircuitGroup::Su2 => {
                let w = binary_width(n);
                for name in SU2_DATA {
                    c.add_register(name, RegisterKind::QubitArray, w, RegisterRole::Data);
                }
                c.add_register("path", RegisterKind::QubitArray, n - 1, RegisterRole::Data);
                c.add_register("anc", RegisterKind::QubitArray, 1, RegisterRole::Ancilla);
                if w > 1 {
                    c.add_register("carry", RegisterKind::QubitArray, w - 1, RegisterRole::Carry);
                }
                w
            }
            CircuitGroup::Su3 => {
                let w = ternary_width(n);
                for name in SU3_DATA {
                    c.add_register(name, RegisterKind::PaddedQutritArray, 2 * w, RegisterRole::Data);
                }
                c.add_register("path", RegisterKind::PaddedQutritArray, 2 * (n - 1), RegisterRole::Data);
                c.add_register("flag", RegisterKind::QubitArray, 1, RegisterRole::Ancilla);
                c.add_register("scratch", RegisterKind::QubitArray, 2, RegisterRole::Ancilla);
                c.add_register("carry", RegisterKind::QubitArray, w, RegisterRole::Carry);
                w
            }
        };
        Ok(Self { group, n, width, skeleton: c })
    }

    /// Empty circuit carrying this layout.
    pub fn circuit(&self) -> Circuit {
        self.skeleton.clone()
    }

    pub fn steps(&self) -> usize {
        self.n - 1
    }

    pub fn num_bits(&self) -> usize {
        self.skeleton.num_bits()
    }

    pub fn range(&self, name: &str) -> Range<usize> {
        self.skeleton.range(name).unwrap_or(0..0)
    }

    pub(crate) fn bits(&self, name: &str) -> Vec<usize> {
        self.range(name).collect()
    }

    pub(crate) fn qutrits(&self, name: &str) -> Vec<Qutrit> {
        let r = self.range(name);
        Qutrit::array(r.start, r.len() / 2)
    }

    pub(crate) fn scratch(&self) -> Scratch {
        let r = self.range("scratch");
        Scratch { x: r.start, y: r.start + 1 }
    }

    pub(crate) fn check_step(&self, step: usize) -> Result<usize, SynthError> {
        if step >= self.steps() {
            return Err(SynthError::StepOutOfRange { step, steps: self.steps() });
        }
        // step 0 consumes the last path entry
        Ok(self.n - 2 - step)
    }

    fn read(&self, bits: &[u8], name: &str) -> Result<u64, SynthError> {
        let r = self.range(name);
        match self.group {
            CircuitGroup::Su2 => Ok(read_binary(&bits[r])),
            CircuitGroup::Su3 => read_ternary(&bits[r])
                .ok_or_else(|| SynthError::Output(format!("register {name} holds 11"))),
        }
    }

    fn write(&self, bits: &mut [u8], name: &str, value: i64) -> Result<(), SynthError> {
        let r = self.range(name);
        let cap = match self.group {
            CircuitGroup::Su2 => 1i64 << self.width,
            CircuitGroup::Su3 => 3i64.pow(self.width as u32),
        };
        if !(0..cap).contains(&value) {
            return Err(SynthError::Label(format!("{name}={value} does not fit {} digits", self.width)));
        }
        match self.group {
            CircuitGroup::Su2 => write_binary(&mut bits[r], value as u64),
            CircuitGroup::Su3 => write_ternary(&mut bits[r], value as u64),
        }
        Ok(())
    }

    /// Input bit assignment for a label; ancillas and carries start at 0.
    pub fn encode_label(&self, label: &SchurLabel) -> Result<Vec<u8>, SynthError> {
        if label.n() != self.n {
            return Err(SynthError::Label(format!("label has n={}, circuit n={}", label.n(), self.n)));
        }
        let mut bits = vec![0u8; self.num_bits()];
        let rows = label.partition.rows();
        let path = self.range("path");
        match (self.group, &label.weight) {
            (CircuitGroup::Su2, Weight::Su2(w)) => {
                self.write(&mut bits, "lam1", rows[0])?;
                self.write(&mut bits, "lam2", rows[1])?;
                self.write(&mut bits, "q", w.q)?;
                for (i, &p) in label.path.iter().enumerate() {
                    bits[path.start + i] = p;
                }
            }
            (CircuitGroup::Su3, Weight::Su3(w)) => {
                for (name, v) in ["lam1", "lam2", "lam3"].into_iter().zip(rows) {
                    self.write(&mut bits, name, *v)?;
                }
                self.write(&mut bits, "k", w.k)?;
                self.write(&mut bits, "l", w.l)?;
                self.write(&mut bits, "m", w.m)?;
                for (i, &p) in label.path.iter().enumerate() {
                    write_ternary(&mut bits[path.start + 2 * i..path.start + 2 * i + 2], u64::from(p));
                }
            }
            _ => return Err(SynthError::WrongGroup),
        }
        Ok(bits)
    }

    /// Basis string of a terminal assignment, particle 1 first: the value
    /// left in the weight registers, then the rotated path digits.
    pub fn decode_output(&self, bits: &[u8]) -> Result<String, SynthError> {
        let path = self.range("path");
        let mut s = String::with_capacity(self.n);
        match self.group {
            CircuitGroup::Su2 => {
                let q = self.read(bits, "q")?;
                if q > 1 {
                    return Err(SynthError::Output(format!("q register ends at {q}")));
                }
                s.push(char::from(b'0' + q as u8));
                s.extend(bits[path].iter().map(|&b| char::from(b'0' + b)));
            }
            CircuitGroup::Su3 => {
                let klm = (self.read(bits, "k")?, self.read(bits, "l")?, self.read(bits, "m")?);
                let q = match klm {
                    (1, 0, 1) => '2',
                    (1, 0, 0) => '1',
                    (0, 0, 0) => '0',
                    other => return Err(SynthError::Output(format!("(k,l,m)={other:?} is not a quark"))),
                };
                s.push(q);
                for d in bits[path].chunks(2) {
                    let v = read_ternary(d).ok_or_else(|| SynthError::Output("path digit holds 11".into()))?;
                    s.push(char::from(b'0' + v as u8));
                }
            }
        }
        Ok(s)
    }

    /// Terminal postcondition: single-box diagram, ancillas and carries clear.
    pub fn check_terminal(&self, bits: &[u8]) -> Result<(), SynthError> {
        let lam: Vec<u64> = match self.group {
            CircuitGroup::Su2 => ["lam1", "lam2"].iter().map(|r| self.read(bits, r)).collect::<Result<_, _>>()?,
            CircuitGroup::Su3 => {
                ["lam1", "lam2", "lam3"].iter().map(|r| self.read(bits, r)).collect::<Result<_, _>>()?
            }
        };
        if lam[0] != 1 || lam[1..].iter().any(|&v| v != 0) {
            return Err(SynthError::Output(format!("diagram register ends at {lam:?}")));
        }
        for (reg, range) in self.skeleton.layout() {
            if reg.role != RegisterRole::Data && bits[range].iter().any(|&b| b != 0) {
                return Err(SynthError::Output(format!("{} register not clean", reg.name)));
            }
        }
        Ok(())
    }
}
