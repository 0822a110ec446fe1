use std::collections::BTreeMap;

use gate_model::{
    read_binary, read_ternary, write_ternary, Circuit, FormulaId, Gate, GateKind, RegisterKind,
    RegisterRole,
};
use num_traits::{One, Zero};
use su2_engine::{
    rotate_bit, ucg_inv_angle_primed, AmplitudeMap, BigRational, SqrtRational, SurdSum,
};
use su3_engine::{isoscalar_matrix, isospin_angle};

use crate::amp::Amp;
use crate::SimError;

/// Sparse state: full bit assignment -> amplitude.
#[derive(Debug, Clone, PartialEq)]
pub struct SimState<A> {
    width: usize,
    amps: BTreeMap<Vec<u8>, A>,
}

pub type ExactState = SimState<SurdSum>;
pub type FloatState = SimState<f64>;

impl<A: Amp> SimState<A> {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &A)> {
        self.amps.iter()
    }

    pub fn amplitude(&self, bits: &[u8]) -> Option<&A> {
        self.amps.get(bits)
    }

    pub fn norm_squared(&self) -> f64 {
        A::norm_squared(self.amps.values())
    }
}

/// Single basis state with amplitude 1. Ancilla and carry registers must be 0.
pub fn init_state<A: Amp>(circuit: &Circuit, bits: &[u8]) -> Result<SimState<A>, SimError> {
    circuit.check_encoding(bits)?;
    for (reg, range) in circuit.layout() {
        if reg.role != RegisterRole::Data && bits[range].iter().any(|&b| b != 0) {
            return Err(SimError::DirtyInput(reg.name.clone()));
        }
    }
    let mut amps = BTreeMap::new();
    amps.insert(bits.to_vec(), A::one());
    Ok(SimState { width: bits.len(), amps })
}

fn register_value(circuit: &Circuit, bits: &[u8], name: &str) -> Result<i64, SimError> {
    let reg = circuit.register(name).ok_or_else(|| SimError::UnknownRegister(name.to_string()))?;
    let r = circuit.range(name).expect("register exists");
    let v = match reg.kind {
        RegisterKind::QubitArray => read_binary(&bits[r]),
        RegisterKind::PaddedQutritArray => {
            read_ternary(&bits[r]).ok_or_else(|| SimError::Encoding(name.to_string()))?
        }
    };
    Ok(v as i64)
}

fn operands(circuit: &Circuit, gate: &Gate, bits: &[u8]) -> Result<Vec<i64>, SimError> {
    gate.operands
        .as_deref()
        .unwrap_or_default()
        .iter()
        .map(|name| register_value(circuit, bits, name))
        .collect()
}

fn qutrit_value(bits: &[u8], hi: usize, lo: usize) -> Result<u8, SimError> {
    match (bits[hi], bits[lo]) {
        (0, 0) => Ok(0),
        (0, 1) => Ok(1),
        (1, 0) => Ok(2),
        _ => Err(SimError::Encoding(format!("bits {hi},{lo}"))),
    }
}

fn set_qutrit(bits: &mut [u8], hi: usize, v: u8) {
    write_ternary(&mut bits[hi..hi + 2], u64::from(v));
}

fn fault(gate: usize, bits: &[u8], why: String) -> SimError {
    let branch: String = bits.iter().map(|&b| char::from(b'0' + b)).collect();
    SimError::Fault { gate, branch, why }
}

/// Images of one basis state under `gate`: `(new bits, matrix entry)`.
fn branch(
    circuit: &Circuit,
    index: usize,
    gate: &Gate,
    bits: &[u8],
) -> Result<Vec<(Vec<u8>, SqrtRational)>, SimError> {
    let fires = gate.controls.iter().all(|c| c.fires(bits));
    if !fires {
        return Ok(vec![(bits.to_vec(), SqrtRational::one())]);
    }
    let mut out = Vec::with_capacity(3);
    match gate.kind {
        GateKind::Not | GateKind::Cnot | GateKind::Ccnot => {
            let mut b = bits.to_vec();
            gate.apply_bits(&mut b);
            out.push((b, SqrtRational::one()));
        }
        GateKind::Cry => {
            let t = gate.targets[0];
            let cos = static_cos(gate);
            for (v, a) in rotate_bit(bits[t], &cos) {
                let mut b = bits.to_vec();
                b[t] = v;
                out.push((b, a));
            }
        }
        GateKind::Cr3 => {
            let (hi, lo) = (gate.targets[0], gate.targets[1]);
            let cos = static_cos(gate);
            let sin = cos.complement().expect("cos in [0,1]");
            levels_21(bits, hi, lo, &cos, &sin, &mut out)?;
        }
        GateKind::DataRot => {
            let ops = operands(circuit, gate, bits)?;
            match gate.formula_id {
                Some(FormulaId::Su2CgAngle) => {
                    let t = gate.targets[0];
                    let cos = ucg_inv_angle_primed(ops[0], ops[1], ops[2])
                        .map_err(|e| fault(index, bits, e.to_string()))?;
                    for (v, a) in rotate_bit(bits[t], &cos) {
                        let mut b = bits.to_vec();
                        b[t] = v;
                        out.push((b, a));
                    }
                }
                Some(FormulaId::Su3RhoSigma) => {
                    let (hi, lo) = (gate.targets[0], gate.targets[1]);
                    let p = qutrit_value(bits, hi, lo)?;
                    let (p1, q1) = (ops[0] - ops[1], ops[1] - ops[2]);
                    let m = isoscalar_matrix(p1, q1, ops[3], ops[4]);
                    let mut norm = BigRational::zero();
                    for c in 0..3u8 {
                        let f = m.get(p, c);
                        norm += f.square();
                        let mut b = bits.to_vec();
                        set_qutrit(&mut b, hi, c);
                        out.push((b, f.clone()));
                    }
                    if norm != BigRational::one() {
                        return Err(fault(
                            index,
                            bits,
                            format!("isoscalar row p={p} of ({p1},{q1}) at k''={} l''={} has norm² {norm}", ops[3], ops[4]),
                        ));
                    }
                }
                Some(FormulaId::Su3Isospin) => {
                    let (hi, lo) = (gate.targets[0], gate.targets[1]);
                    let (cos, sin) = isospin_angle(ops[0], ops[1], ops[2]);
                    if qutrit_value(bits, hi, lo)? != 0 && cos.square() + sin.square() != BigRational::one() {
                        return Err(fault(
                            index,
                            bits,
                            format!("no isospin coupling at k={} l={} m''={}", ops[0], ops[1], ops[2]),
                        ));
                    }
                    levels_21(bits, hi, lo, &cos, &sin, &mut out)?;
                }
                None => return Err(fault(index, bits, "DATA_ROT without formula_id".into())),
            }
        }
    }
    Ok(out)
}

/// Rotation on qutrit levels {2,1}: `|2> -> c|2> + s|1>`, `|1> -> -s|2> + c|1>`.
fn levels_21(
    bits: &[u8],
    hi: usize,
    lo: usize,
    cos: &SqrtRational,
    sin: &SqrtRational,
    out: &mut Vec<(Vec<u8>, SqrtRational)>,
) -> Result<(), SimError> {
    let v = qutrit_value(bits, hi, lo)?;
    let entries = match v {
        0 => vec![(0, SqrtRational::one())],
        2 => vec![(2, cos.clone()), (1, sin.clone())],
        _ => vec![(2, -sin), (1, cos.clone())],
    };
    for (c, a) in entries {
        let mut b = bits.to_vec();
        set_qutrit(&mut b, hi, c);
        out.push((b, a));
    }
    Ok(())
}

fn static_cos(gate: &Gate) -> SqrtRational {
    SqrtRational::sqrt_frac(gate.theta_num.unwrap_or(1), gate.theta_den.unwrap_or(1))
}

/// Applies gate number `index` of `circuit`.
pub fn apply_gate<A: Amp>(
    state: &mut SimState<A>,
    circuit: &Circuit,
    index: usize,
) -> Result<(), SimError> {
    let gate = &circuit.gates[index];
    let mut next: BTreeMap<Vec<u8>, A> = BTreeMap::new();
    for (bits, amp) in std::mem::take(&mut state.amps) {
        for (b, x) in branch(circuit, index, gate, &bits)? {
            if x.is_zero() {
                continue;
            }
            let term = amp.scaled(&x);
            match next.get_mut(&b) {
                Some(a) => a.accumulate(&term),
                None => {
                    next.insert(b, term);
                }
            }
        }
    }
    next.retain(|_, a| !a.is_zero());
    state.amps = next;
    Ok(())
}

/// Runs every gate of `circuit` on a basis input.
pub fn run<A: Amp>(circuit: &Circuit, input: &[u8]) -> Result<SimState<A>, SimError> {
    circuit.validate()?;
    let mut s = init_state(circuit, input)?;
    for i in 0..circuit.gates.len() {
        apply_gate(&mut s, circuit, i)?;
    }
    Ok(s)
}

/// Marginal onto the registers in `keep`.
///
/// Every other register must hold the same value in every branch; that value
/// is returned as `rest` (with the kept registers zeroed). Keys come from
/// `key` applied to the full assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct Extracted<A> {
    pub amps: BTreeMap<String, A>,
    pub rest: Vec<u8>,
}

pub fn extract_with<A: Amp, E: std::fmt::Display>(
    state: &SimState<A>,
    circuit: &Circuit,
    keep: &[&str],
    key: impl Fn(&[u8]) -> Result<String, E>,
) -> Result<Extracted<A>, SimError> {
    let mut kept = vec![false; state.width];
    for name in keep {
        let r = circuit.range(name).ok_or_else(|| SimError::UnknownRegister(name.to_string()))?;
        kept[r].iter_mut().for_each(|k| *k = true);
    }
    let mut rest: Option<Vec<u8>> = None;
    let mut amps: BTreeMap<String, A> = BTreeMap::new();
    for (bits, a) in &state.amps {
        let r: Vec<u8> = bits.iter().zip(&kept).map(|(&b, &k)| if k { 0 } else { b }).collect();
        match &rest {
            None => rest = Some(r),
            Some(prev) if *prev != r => {
                let reg = circuit
                    .layout()
                    .into_iter()
                    .find(|(_, range)| range.clone().any(|i| prev[i] != r[i]))
                    .map(|(reg, _)| reg.name.clone())
                    .unwrap_or_default();
                return Err(SimError::Entangled(reg));
            }
            _ => {}
        }
        let k = key(bits).map_err(|e| SimError::Key(e.to_string()))?;
        match amps.get_mut(&k) {
            Some(x) => x.accumulate(a),
            None => {
                amps.insert(k, a.clone());
            }
        }
    }
    amps.retain(|_, a| !a.is_zero());
    Ok(Extracted { amps, rest: rest.unwrap_or_else(|| vec![0; state.width]) })
}

/// Marginal keyed by the digits of the kept registers, register by register,
/// digit 0 first (bits for qubit arrays, 0/1/2 for padded qutrits).
pub fn extract<A: Amp>(
    state: &SimState<A>,
    circuit: &Circuit,
    keep: &[&str],
) -> Result<Extracted<A>, SimError> {
    let regs: Vec<_> = keep
        .iter()
        .map(|n| {
            let reg = circuit.register(n).ok_or_else(|| SimError::UnknownRegister(n.to_string()))?;
            Ok((reg.kind, circuit.range(n).expect("register exists")))
        })
        .collect::<Result<_, SimError>>()?;
    extract_with(state, circuit, keep, |bits| {
        let mut s = String::new();
        for (kind, r) in &regs {
            match kind {
                RegisterKind::QubitArray => s.extend(bits[r.clone()].iter().map(|&b| char::from(b'0' + b))),
                RegisterKind::PaddedQutritArray => {
                    for d in bits[r.clone()].chunks(2) {
                        let v = read_ternary(d).ok_or_else(|| "qutrit holds 11".to_string())?;
                        s.push(char::from(b'0' + v as u8));
                    }
                }
            }
        }
        Ok::<_, String>(s)
    })
}

/// Collapses an exact marginal into single surds.
pub fn to_amplitude_map(amps: BTreeMap<String, SurdSum>) -> Result<AmplitudeMap, SimError> {
    AmplitudeMap::from_sums(amps).map_err(SimError::Key)
}
