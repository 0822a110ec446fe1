//! Ripple adders and subtractors built from NOT, CNOT and CCNOT.
//!
//! Every constructor leaves its carries and scratch bits at 0 and marks the
//! gates that clear them with `uncompute`, so the remaining gates are the
//! compute path. Arithmetic is modular in the register width.
//!
//! Binary registers are little-endian bit lists. Ternary registers are lists
//! of [`Qutrit`] pairs, digit 0 first.

use std::collections::HashSet;

use crate::gate::{Control, Gate};
use crate::GateModelError;

/// A padded qutrit: `hi lo` = 00, 01, 10 for 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Qutrit {
    pub hi: usize,
    pub lo: usize,
}

impl Qutrit {
    pub fn at(offset: usize) -> Self {
        Self { hi: offset, lo: offset + 1 }
    }

    /// Consecutive qutrits starting at `offset`.
    pub fn array(offset: usize, digits: usize) -> Vec<Self> {
        (0..digits).map(|i| Self::at(offset + 2 * i)).collect()
    }
}

/// Two shared scratch bits for the ternary units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scratch {
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    Add,
    Sub,
}

fn on(b: usize) -> Control {
    Control::on(b)
}

fn off(b: usize) -> Control {
    Control::off(b)
}

fn flip(c: Control) -> Control {
    Control { bit: c.bit, polarity: 1 - c.polarity }
}

fn distinct(bits: impl IntoIterator<Item = usize>) -> Result<(), GateModelError> {
    let mut seen = HashSet::new();
    for b in bits {
        if !seen.insert(b) {
            return Err(GateModelError::Overlap(b));
        }
    }
    Ok(())
}

fn need(what: &str, expected: usize, got: usize) -> Result<(), GateModelError> {
    if expected == got {
        Ok(())
    } else {
        Err(GateModelError::Layout(format!("{what}: expected {expected}, got {got}")))
    }
}

fn binary(dir: Dir, reg: &[usize], a: Control, carries: &[usize]) -> Result<Vec<Gate>, GateModelError> {
    let w = reg.len();
    if w == 0 {
        return Err(GateModelError::Layout("empty register".into()));
    }
    need("carry bits", w - 1, carries.len())?;
    distinct(reg.iter().chain(carries).copied().chain([a.bit]))?;
    let cin = |i: usize| if i == 0 { a } else { on(carries[i - 1]) };
    // bit stays set for a carry (add) and clear for a borrow (sub)
    let pol = if dir == Dir::Add { 1 } else { 0 };
    let mut g = Vec::with_capacity(3 * w);
    for i in 0..w {
        if i + 1 < w {
            g.push(Gate::ccnot(cin(i), Control { bit: reg[i], polarity: pol }, carries[i]));
        }
        g.push(Gate::cnot(cin(i), reg[i]));
    }
    // after b ^= cin, the old bit is recovered as b' ^ cin
    for i in (0..w.saturating_sub(1)).rev() {
        g.push(
            Gate::ccnot(cin(i), Control { bit: reg[i], polarity: 1 - pol }, carries[i])
                .marked_uncompute(),
        );
    }
    Ok(g)
}

/// `reg += a` over `w` bits: w CNOT and w−1 CCNOT, then w−1 CCNOT to clear
/// the carries.
pub fn binary_add_qubit(reg: &[usize], addend: Control, carries: &[usize]) -> Result<Vec<Gate>, GateModelError> {
    binary(Dir::Add, reg, addend, carries)
}

/// `reg -= a`; borrow logic instead of carry, same counts as the adder.
pub fn binary_sub_qubit(reg: &[usize], subtrahend: Control, carries: &[usize]) -> Result<Vec<Gate>, GateModelError> {
    binary(Dir::Sub, reg, subtrahend, carries)
}

/// One qutrit ± one bit; carry set on wrap. Returns (compute, scratch uncompute).
fn unit(dir: Dir, q: Qutrit, a: Control, carry: usize, s: Scratch) -> (Vec<Gate>, Vec<Gate>) {
    let Qutrit { hi, lo } = q;
    let Scratch { x, y } = s;
    let compute = match dir {
        Dir::Add => vec![
            Gate::ccnot(on(hi), a, carry),
            Gate::cnot(on(hi), x),
            Gate::cnot(on(lo), x),
            Gate::not(hi),
            Gate::cnot(on(hi), y),
            Gate::not(hi),
            Gate::ccnot(on(x), a, hi),
            Gate::ccnot(on(y), a, lo),
        ],
        Dir::Sub => vec![
            Gate::not(lo),
            Gate::cnot(on(lo), y),
            Gate::not(lo),
            Gate::cnot(on(hi), x),
            Gate::cnot(on(lo), x),
            Gate::ccnot(on(y), a, hi),
            Gate::ccnot(on(x), a, lo),
            Gate::ccnot(on(hi), a, carry),
        ],
    };
    let uncompute = match dir {
        // y = ¬hi, x = hi ^ lo in terms of the output digit
        Dir::Add => vec![
            Gate::not(y),
            Gate::cnot(on(carry), y),
            Gate::ccnot(flip(a), on(hi), y),
            Gate::cnot(on(hi), x),
            Gate::cnot(on(carry), x),
            Gate::ccnot(flip(a), on(lo), x),
        ],
        // y = ¬lo, x = hi ^ lo
        Dir::Sub => vec![
            Gate::not(y),
            Gate::cnot(a, y),
            Gate::cnot(on(lo), y),
            Gate::cnot(on(carry), y),
            Gate::cnot(on(hi), x),
            Gate::cnot(a, x),
            Gate::ccnot(flip(a), on(lo), x),
        ],
    };
    (compute, uncompute.into_iter().map(Gate::marked_uncompute).collect())
}

fn single(dir: Dir, q: Qutrit, a: Control, carry: usize, s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    distinct([q.hi, q.lo, a.bit, carry, s.x, s.y])?;
    let (mut c, u) = unit(dir, q, a, carry, s);
    c.extend(u);
    Ok(c)
}

/// Qutrit plus one bit. `carry` is the outgoing carry and is left set on
/// wrap from 2 to 0; the scratch pair is cleared.
pub fn ternary_add_qubit(q: Qutrit, addend: Control, carry: usize, s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    single(Dir::Add, q, addend, carry, s)
}

/// Qutrit minus one bit; `carry` receives the borrow on wrap from 0 to 2.
pub fn ternary_sub_qubit(q: Qutrit, subtrahend: Control, carry: usize, s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    single(Dir::Sub, q, subtrahend, carry, s)
}

/// Clears carry `c` that was produced by adding/subtracting `cin` into `q`.
fn clear_carry(dir: Dir, q: Qutrit, cin: Control, c: usize, s: Scratch) -> Vec<Gate> {
    match dir {
        // carry iff the digit wrapped to 0
        Dir::Add => vec![
            Gate::ccnot(off(q.hi), off(q.lo), s.y),
            Gate::ccnot(cin, on(s.y), c),
            Gate::ccnot(off(q.hi), off(q.lo), s.y),
        ],
        // borrow iff the digit wrapped to 2
        Dir::Sub => vec![Gate::ccnot(cin, on(q.hi), c)],
    }
    .into_iter()
    .map(Gate::marked_uncompute)
    .collect()
}

fn ripple(dir: Dir, digits: &[Qutrit], a: Control, carries: &[usize], s: Scratch) -> Vec<Gate> {
    let cin = |i: usize| if i == 0 { a } else { on(carries[i - 1]) };
    let mut g = Vec::new();
    for (i, &q) in digits.iter().enumerate() {
        let (c, u) = unit(dir, q, cin(i), carries[i], s);
        g.extend(c);
        g.extend(u);
    }
    for (i, &q) in digits.iter().enumerate().rev() {
        g.extend(clear_carry(dir, q, cin(i), carries[i], s));
    }
    g
}

fn register_bit(dir: Dir, digits: &[Qutrit], a: Control, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    if digits.is_empty() {
        return Err(GateModelError::Layout("empty register".into()));
    }
    need("carry bits", digits.len(), carries.len())?;
    distinct(
        digits
            .iter()
            .flat_map(|q| [q.hi, q.lo])
            .chain(carries.iter().copied())
            .chain([a.bit, s.x, s.y]),
    )?;
    Ok(ripple(dir, digits, a, carries, s))
}

/// Ternary register plus one bit, mod 3^W. Needs W carries.
/// Compute path: 2W NOT, 3W CNOT, 3W CCNOT.
pub fn ternary_register_add_qubit(digits: &[Qutrit], addend: Control, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    register_bit(Dir::Add, digits, addend, carries, s)
}

pub fn ternary_register_sub_qubit(digits: &[Qutrit], subtrahend: Control, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    register_bit(Dir::Sub, digits, subtrahend, carries, s)
}

fn register_qutrit(dir: Dir, digits: &[Qutrit], a: Qutrit, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    let w = digits.len();
    if w == 0 {
        return Err(GateModelError::Layout("empty register".into()));
    }
    need("carry bits", w + 1, carries.len())?;
    distinct(
        digits
            .iter()
            .flat_map(|q| [q.hi, q.lo])
            .chain(carries.iter().copied())
            .chain([a.hi, a.lo, s.x, s.y]),
    )?;
    // a = 2·hi + lo is applied to digit 0 as two unit steps of hi and hi^lo
    let (c1, c2) = (carries[0], carries[1]);
    let rest = &carries[2..];
    let d0 = digits[0];
    let mut g = Vec::new();
    let (c, u) = unit(dir, d0, on(a.hi), c1, s);
    g.extend(c);
    g.extend(u);
    g.push(Gate::cnot(on(a.hi), a.lo));
    let (c, u) = unit(dir, d0, on(a.lo), c2, s);
    g.extend(c);
    g.extend(u);
    // at most one of the two steps wraps
    g.push(Gate::cnot(on(c2), c1));
    if w > 1 {
        let cin = |i: usize| if i == 1 { on(c1) } else { on(rest[i - 2]) };
        for i in 1..w {
            let (c, u) = unit(dir, digits[i], cin(i), rest[i - 1], s);
            g.extend(c);
            g.extend(u);
        }
        for i in (1..w).rev() {
            g.extend(clear_carry(dir, digits[i], cin(i), rest[i - 1], s));
        }
    }
    g.push(Gate::cnot(on(c2), c1).marked_uncompute());
    g.extend(clear_carry(dir, d0, on(a.lo), c2, s));
    g.push(Gate::cnot(on(a.hi), a.lo).marked_uncompute());
    // the first step wrapped iff two steps left digit 0 at 1
    g.extend(
        [
            Gate::ccnot(off(d0.hi), on(d0.lo), s.y),
            Gate::ccnot(on(a.hi), on(s.y), c1),
            Gate::ccnot(off(d0.hi), on(d0.lo), s.y),
        ]
        .into_iter()
        .map(Gate::marked_uncompute),
    );
    Ok(g)
}

/// Ternary register plus a qutrit, mod 3^W. Needs W+1 carries.
/// Compute path: W+1 units plus 2 CNOTs that combine the addend bits.
pub fn ternary_register_add(digits: &[Qutrit], addend: Qutrit, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    register_qutrit(Dir::Add, digits, addend, carries, s)
}

pub fn ternary_register_sub(digits: &[Qutrit], subtrahend: Qutrit, carries: &[usize], s: Scratch) -> Result<Vec<Gate>, GateModelError> {
    register_qutrit(Dir::Sub, digits, subtrahend, carries, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::run_classical;

    #[test]
    fn three_bit_increment() {
        let g = binary_add_qubit(&[0, 1, 2], on(3), &[4, 5]).unwrap();
        // 011 + 1, little-endian bits
        let mut b = vec![1, 1, 0, 1, 0, 0];
        run_classical(&g, &mut b);
        assert_eq!(b, vec![0, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn unit_tables() {
        let q = Qutrit::at(0);
        let s = Scratch { x: 4, y: 5 };
        // 10 + 1 -> 00 with carry
        let mut b = vec![1, 0, 1, 0, 0, 0];
        run_classical(&ternary_add_qubit(q, on(2), 3, s).unwrap(), &mut b);
        assert_eq!(b, vec![0, 0, 1, 1, 0, 0]);
        // 00 - 1 -> 10 with borrow
        let mut b = vec![0, 0, 1, 0, 0, 0];
        run_classical(&ternary_sub_qubit(q, on(2), 3, s).unwrap(), &mut b);
        assert_eq!(b, vec![1, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn rejects_overlap() {
        assert_eq!(binary_add_qubit(&[0, 1], on(1), &[2]), Err(GateModelError::Overlap(1)));
        assert!(binary_add_qubit(&[0, 1], on(3), &[]).is_err());
    }
}
