use gate_model::*;
use proptest::prelude::*;

fn reversed(g: &[Gate]) -> Vec<Gate> {
    g.iter().rev().cloned().collect()
}

/// Register bits, then addend, then carries, then scratch.
struct Binary {
    w: usize,
}

impl Binary {
    fn reg(&self) -> Vec<usize> {
        (0..self.w).collect()
    }
    fn addend(&self) -> usize {
        self.w
    }
    fn carries(&self) -> Vec<usize> {
        (self.w + 1..2 * self.w).collect()
    }
    fn bits(&self) -> usize {
        2 * self.w
    }
}

#[test]
fn binary_exhaustive() {
    for w in 1..=4usize {
        let l = Binary { w };
        let modulus = 1u64 << w;
        for polarity in [0u8, 1] {
            let a = Control { bit: l.addend(), polarity };
            let add = binary_add_qubit(&l.reg(), a, &l.carries()).unwrap();
            let sub = binary_sub_qubit(&l.reg(), a, &l.carries()).unwrap();
            for x in 0..modulus {
                for abit in 0..2u8 {
                    let v = u64::from(abit == polarity);
                    let mut b = vec![0u8; l.bits()];
                    write_binary(&mut b[..w], x);
                    b[l.addend()] = abit;
                    let start = b.clone();
                    for (gates, want) in [(&add, (x + v) % modulus), (&sub, (x + modulus - v) % modulus)] {
                        let mut s = start.clone();
                        run_classical(gates, &mut s);
                        assert_eq!(read_binary(&s[..w]), want, "w={w} x={x} a={v}");
                        assert_eq!(s[l.addend()], abit);
                        assert!(s[w + 1..].iter().all(|&c| c == 0), "dirty carry w={w} x={x}");
                        run_classical(&reversed(gates), &mut s);
                        assert_eq!(s, start);
                    }
                    // add then sub is the identity
                    let mut s = start.clone();
                    run_classical(&add, &mut s);
                    run_classical(&sub, &mut s);
                    assert_eq!(s, start);
                }
            }
        }
    }
}

#[test]
fn binary_counts() {
    for w in 1..=6usize {
        let l = Binary { w };
        for g in [
            binary_add_qubit(&l.reg(), Control::on(l.addend()), &l.carries()).unwrap(),
            binary_sub_qubit(&l.reg(), Control::on(l.addend()), &l.carries()).unwrap(),
        ] {
            let r = count_gates(&g);
            assert_eq!((r.compute.cnot, r.compute.ccnot, r.compute.not), (w, w - 1, 0));
            assert_eq!(r.uncompute.ccnot, w - 1);
        }
    }
}

#[test]
fn qutrit_unit_exhaustive() {
    let q = Qutrit::at(0);
    let s = Scratch { x: 4, y: 5 };
    for polarity in [0u8, 1] {
        let a = Control { bit: 2, polarity };
        let add = ternary_add_qubit(q, a, 3, s).unwrap();
        let sub = ternary_sub_qubit(q, a, 3, s).unwrap();
        for (g, name) in [(&add, "add"), (&sub, "sub")] {
            let r = count_gates(g);
            assert_eq!((r.compute.not, r.compute.cnot, r.compute.ccnot), (2, 3, 3), "{name}");
        }
        for x in 0..3u64 {
            for abit in 0..2u8 {
                let v = u64::from(abit == polarity);
                let mut b = vec![0u8; 6];
                write_ternary(&mut b[..2], x);
                b[2] = abit;
                let mut s1 = b.clone();
                run_classical(&add, &mut s1);
                assert_eq!(read_ternary(&s1[..2]), Some((x + v) % 3));
                assert_eq!(s1[3], u8::from(x + v == 3), "carry {x}+{v}");
                assert_eq!((s1[2], s1[4], s1[5]), (abit, 0, 0));
                let mut s2 = b.clone();
                run_classical(&sub, &mut s2);
                assert_eq!(read_ternary(&s2[..2]), Some((x + 3 - v) % 3));
                assert_eq!(s2[3], u8::from(v > x), "borrow {x}-{v}");
                assert_eq!((s2[2], s2[4], s2[5]), (abit, 0, 0));
                run_classical(&reversed(&sub), &mut s2);
                assert_eq!(s2, b);
            }
        }
    }
}

#[test]
fn qutrit_unit_rejects_invalid_encoding() {
    let mut c = Circuit::new(CircuitGroup::Su3, 1);
    let q = c.add_register("q", RegisterKind::PaddedQutritArray, 2, RegisterRole::Data);
    c.add_register("a", RegisterKind::QubitArray, 1, RegisterRole::Data);
    c.add_register("c", RegisterKind::QubitArray, 1, RegisterRole::Carry);
    c.add_register("xy", RegisterKind::QubitArray, 2, RegisterRole::Ancilla);
    c.gates = ternary_add_qubit(Qutrit::at(q.start), Control::on(2), 3, Scratch { x: 4, y: 5 }).unwrap();
    c.validate().unwrap();
    assert!(matches!(c.apply_classical(&[1, 1, 1, 0, 0, 0]), Err(GateModelError::Encoding { .. })));
    assert_eq!(c.apply_classical(&[1, 0, 1, 0, 0, 0]).unwrap(), vec![0, 0, 1, 1, 0, 0]);
}

/// Digits, then addend (1 or 2 bits), then carries, then x, y.
fn ternary_layout(w: usize, addend_bits: usize) -> (Vec<Qutrit>, usize, Vec<usize>, Scratch, usize) {
    let digits = Qutrit::array(0, w);
    let a = 2 * w;
    let ncarry = if addend_bits == 1 { w } else { w + 1 };
    let c0 = a + addend_bits;
    let carries: Vec<usize> = (c0..c0 + ncarry).collect();
    let s = Scratch { x: c0 + ncarry, y: c0 + ncarry + 1 };
    (digits, a, carries, s, c0 + ncarry + 2)
}

#[test]
fn ternary_register_bit_exhaustive() {
    for w in 1..=3usize {
        let (digits, a, carries, s, nbits) = ternary_layout(w, 1);
        let modulus = 3u64.pow(w as u32);
        let add = ternary_register_add_qubit(&digits, Control::on(a), &carries, s).unwrap();
        let sub = ternary_register_sub_qubit(&digits, Control::on(a), &carries, s).unwrap();
        for g in [&add, &sub] {
            let r = count_gates(g);
            assert_eq!((r.compute.not, r.compute.cnot, r.compute.ccnot), (2 * w, 3 * w, 3 * w));
        }
        for x in 0..modulus {
            for v in 0..2u64 {
                let mut b = vec![0u8; nbits];
                write_ternary(&mut b[..2 * w], x);
                b[a] = v as u8;
                for (g, want) in [(&add, (x + v) % modulus), (&sub, (x + modulus - v) % modulus)] {
                    let mut st = b.clone();
                    run_classical(g, &mut st);
                    assert_eq!(read_ternary(&st[..2 * w]), Some(want), "w={w} x={x} v={v}");
                    assert!(st[a + 1..].iter().all(|&c| c == 0), "dirty w={w} x={x} v={v}");
                    run_classical(&reversed(g), &mut st);
                    assert_eq!(st, b);
                }
            }
        }
    }
}

#[test]
fn ternary_register_qutrit_exhaustive() {
    for w in 1..=3usize {
        let (digits, a, carries, s, nbits) = ternary_layout(w, 2);
        let modulus = 3u64.pow(w as u32);
        let aq = Qutrit::at(a);
        let add = ternary_register_add(&digits, aq, &carries, s).unwrap();
        let sub = ternary_register_sub(&digits, aq, &carries, s).unwrap();
        for g in [&add, &sub] {
            let r = count_gates(g);
            let logic = r.compute.not + r.compute.cnot + r.compute.ccnot;
            // w+1 units and two CNOTs combining the addend bits
            assert_eq!(logic, 8 * (w + 1) + 2);
        }
        for x in 0..modulus {
            for v in 0..3u64 {
                let mut b = vec![0u8; nbits];
                write_ternary(&mut b[..2 * w], x);
                write_ternary(&mut b[a..a + 2], v);
                for (g, want) in [(&add, (x + v) % modulus), (&sub, (x + modulus - v) % modulus)] {
                    let mut st = b.clone();
                    run_classical(g, &mut st);
                    assert_eq!(read_ternary(&st[..2 * w]), Some(want), "w={w} x={x} v={v}");
                    assert_eq!(read_ternary(&st[a..a + 2]), Some(v));
                    assert!(st[a + 2..].iter().all(|&c| c == 0), "dirty w={w} x={x} v={v}");
                    run_classical(&reversed(g), &mut st);
                    assert_eq!(st, b);
                }
            }
        }
    }
}

#[test]
fn base_three_example() {
    let (digits, a, carries, s, nbits) = ternary_layout(2, 2);
    let mut b = vec![0u8; nbits];
    write_ternary(&mut b[..4], 5);
    write_ternary(&mut b[a..a + 2], 2);
    run_classical(&ternary_register_add(&digits, Qutrit::at(a), &carries, s).unwrap(), &mut b);
    assert_eq!(read_ternary(&b[..4]), Some(7));
}

proptest! {
    #[test]
    fn wide_registers_and_spectators(w in 1usize..7, x in any::<u64>(), v in 0u64..3, noise in any::<u64>()) {
        // spectator bits after the layout must never change
        let (digits, a, carries, s, nbits) = ternary_layout(w, 2);
        let modulus = 3u64.pow(w as u32);
        let x = x % modulus;
        let mut b = vec![0u8; nbits + 8];
        write_ternary(&mut b[..2 * w], x);
        write_ternary(&mut b[a..a + 2], v);
        write_binary(&mut b[nbits..], noise);
        let before = b.clone();
        run_classical(&ternary_register_add(&digits, Qutrit::at(a), &carries, s).unwrap(), &mut b);
        prop_assert_eq!(read_ternary(&b[..2 * w]), Some((x + v) % modulus));
        prop_assert_eq!(&b[nbits..], &before[nbits..]);
        run_classical(&ternary_register_sub(&digits, Qutrit::at(a), &carries, s).unwrap(), &mut b);
        prop_assert_eq!(b, before);
    }

    #[test]
    fn wide_binary(w in 1usize..12, x in any::<u64>(), pol in 0u8..2) {
        let l = Binary { w };
        let x = x % (1 << w);
        let mut b = vec![0u8; l.bits()];
        write_binary(&mut b[..w], x);
        b[l.addend()] = 1;
        let a = Control { bit: l.addend(), polarity: pol };
        run_classical(&binary_add_qubit(&l.reg(), a, &l.carries()).unwrap(), &mut b);
        prop_assert_eq!(read_binary(&b[..w]), (x + u64::from(pol)) % (1 << w));
    }
}
