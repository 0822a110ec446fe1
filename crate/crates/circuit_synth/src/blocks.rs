use gate_model::{
    binary_add_qubit, binary_sub_qubit, ternary_register_add_qubit, ternary_register_sub_qubit,
    Circuit, CircuitGroup, Control, FormulaId, Gate,
};

use crate::plan::SynthesisPlan;
use crate::SynthError;

fn expect_group(plan: &SynthesisPlan, g: CircuitGroup) -> Result<(), SynthError> {
    if plan.group == g {
        Ok(())
    } else {
        Err(SynthError::WrongGroup)
    }
}

/// One qubit inverse CG block. Step `s` consumes path entry `n-2-s`.
///
/// Order: load `anc = ¬p`, `λ2 -= anc`, `λ1 -= p`, `q += anc`, reset `anc`,
/// rotate `p` from `(λ1', λ2', q̃)`, then `q -= p'`.
pub fn build_ucg_inv_su2(plan: &SynthesisPlan, step: usize) -> Result<Vec<Gate>, SynthError> {
    expect_group(plan, CircuitGroup::Su2)?;
    let t = plan.check_step(step)?;
    let p = plan.range("path").start + t;
    let anc = plan.range("anc").start;
    let carries = plan.bits("carry");
    let (lam1, lam2, q) = (plan.bits("lam1"), plan.bits("lam2"), plan.bits("q"));
    let mut g = vec![Gate::cnot(Control::off(p), anc)];
    g.extend(binary_sub_qubit(&lam2, Control::on(anc), &carries)?);
    g.extend(binary_sub_qubit(&lam1, Control::on(p), &carries)?);
    g.extend(binary_add_qubit(&q, Control::on(anc), &carries)?);
    g.push(Gate::cnot(Control::off(p), anc));
    g.push(Gate::data_rot(FormulaId::Su2CgAngle, vec![p], &["lam1", "lam2", "q"]));
    g.extend(binary_sub_qubit(&q, Control::on(p), &carries)?);
    Ok(g)
}

/// One qutrit inverse CG block. Step `s` consumes path qutrit `n-2-s`.
///
/// The `[p=0]` flag drives the λ3 update and the `+1` shift of `k, l, m`
/// and is cleared before the first rotation. The isoscalar rotation writes
/// the channel into the path qutrit, `k, l` are lowered by channel, the
/// isospin rotation on levels {2,1} writes the quark and `m` drops by `[u]`.
pub fn build_ucg_inv_su3(plan: &SynthesisPlan, step: usize) -> Result<Vec<Gate>, SynthError> {
    expect_group(plan, CircuitGroup::Su3)?;
    let t = plan.check_step(step)?;
    let p = plan.qutrits("path")[t];
    let flag = plan.range("flag").start;
    let carries = plan.bits("carry");
    let s = plan.scratch();
    let reg = |name| plan.qutrits(name);
    let sub = |name, a| ternary_register_sub_qubit(&reg(name), a, &carries, s);
    let add = |name, a| ternary_register_add_qubit(&reg(name), a, &carries, s);
    let is_s = Gate::ccnot(Control::off(p.hi), Control::off(p.lo), flag);

    let mut g = Vec::new();
    g.extend(sub("lam1", Control::on(p.hi))?);
    g.extend(sub("lam2", Control::on(p.lo))?);
    g.push(is_s.clone());
    g.extend(sub("lam3", Control::on(flag))?);
    for name in ["k", "l", "m"] {
        g.extend(add(name, Control::on(flag))?);
    }
    g.push(is_s.marked_uncompute());
    g.push(Gate::data_rot(
        FormulaId::Su3RhoSigma,
        vec![p.hi, p.lo],
        &["lam1", "lam2", "lam3", "k", "l"],
    ));
    g.extend(sub("k", Control::on(p.hi))?);
    g.extend(sub("l", Control::on(p.lo))?);
    g.push(Gate::data_rot(FormulaId::Su3Isospin, vec![p.hi, p.lo], &["k", "l", "m"]));
    g.extend(sub("m", Control::on(p.hi))?);
    Ok(g)
}

fn cascade(
    group: CircuitGroup,
    n: usize,
    block: fn(&SynthesisPlan, usize) -> Result<Vec<Gate>, SynthError>,
) -> Result<Circuit, SynthError> {
    let plan = SynthesisPlan::new(group, n)?;
    let mut c = plan.circuit();
    for step in 0..plan.steps() {
        c.gates.extend(block(&plan, step)?);
    }
    c.validate()?;
    Ok(c)
}

/// Full qubit cascade: n−1 blocks ending at the single-box diagram.
pub fn build_usch_inv_su2(n: usize) -> Result<Circuit, SynthError> {
    cascade(CircuitGroup::Su2, n, build_ucg_inv_su2)
}

/// Full qutrit cascade.
pub fn build_usch_inv_su3(n: usize) -> Result<Circuit, SynthError> {
    cascade(CircuitGroup::Su3, n, build_ucg_inv_su3)
}

pub fn build_usch_inv(group: CircuitGroup, n: usize) -> Result<Circuit, SynthError> {
    match group {
        CircuitGroup::Su2 => build_usch_inv_su2(n),
        CircuitGroup::Su3 => build_usch_inv_su3(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gate_model::GateKind;

    #[test]
    fn su2_block_layout() {
        let plan = SynthesisPlan::new(CircuitGroup::Su2, 3).unwrap();
        let g = build_ucg_inv_su2(&plan, 0).unwrap();
        let rots: Vec<_> = g.iter().filter(|g| g.kind == GateKind::DataRot).collect();
        assert_eq!(rots.len(), 1);
        // step 0 rotates the last path bit
        assert_eq!(rots[0].targets, vec![plan.range("path").start + 1]);
        assert!(build_ucg_inv_su2(&plan, 2).is_err());
        assert!(build_ucg_inv_su3(&plan, 0).is_err());
    }

    #[test]
    fn cascades_validate() {
        for n in 2..6 {
            build_usch_inv_su2(n).unwrap();
            build_usch_inv_su3(n).unwrap();
        }
        assert!(build_usch_inv_su3(1).is_err());
    }
}
