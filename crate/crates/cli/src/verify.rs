use circuit_synth::{build_usch_inv, SynthesisPlan};
use gate_model::{Circuit, CircuitGroup};
use rayon::prelude::*;
use rep_core::{enumerate_labels, Group, SchurLabel};
use serde::Serialize;
use state_sim::{extract_with, run, to_amplitude_map, Amp, SimState};
use su2_engine::{AmplitudeMap, SurdSum};

use crate::{decompose, CliError, Mode};

/// Minimum engine/oracle fidelity.
pub const FIDELITY_TOL: f64 = 1e-10;
/// Largest per-amplitude circuit/engine difference in float mode.
pub const AMPLITUDE_TOL: f64 = 1e-12;

pub const THREADS_ENV: &str = "SCHUR_SYNTH_THREADS";

/// Thread cap from `SCHUR_SYNTH_THREADS`; unset, empty or 0 means no cap.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) if s.trim().is_empty() => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(0) => Ok(None),
            Ok(n) => Ok(Some(n)),
            Err(_) => Err(CliError::Usage(format!("{THREADS_ENV}={s} is not a thread count"))),
        },
    }
}

pub fn circuit_group(g: Group) -> CircuitGroup {
    match g {
        Group::Su2 => CircuitGroup::Su2,
        Group::Su3 => CircuitGroup::Su3,
    }
}

fn kept(g: CircuitGroup) -> &'static [&'static str] {
    match g {
        CircuitGroup::Su2 => &["q", "path"],
        CircuitGroup::Su3 => &["k", "l", "m", "path"],
    }
}

/// Runs `circuit` on the encoded label and reads back the data registers,
/// checking that λ, ancillas and carries end in their terminal values.
pub fn simulate_label<A: Amp>(
    plan: &SynthesisPlan,
    circuit: &Circuit,
    label: &SchurLabel,
) -> Result<std::collections::BTreeMap<String, A>, CliError> {
    let input = plan.encode_label(label)?;
    let state: SimState<A> = run(circuit, &input)?;
    let ex = extract_with(&state, circuit, kept(plan.group), |b| plan.decode_output(b))?;
    plan.check_terminal(&ex.rest)?;
    Ok(ex.amps)
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelCheck {
    pub label: String,
    pub fidelity: f64,
    /// `None` when no circuit exists (one particle).
    pub circuit_error: Option<f64>,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelSummary {
    pub n: usize,
    pub labels: usize,
    pub expected: usize,
    pub passed: usize,
    pub min_fidelity: f64,
    pub max_circuit_error: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub group: String,
    pub max_n: usize,
    pub mode: Mode,
    pub levels: Vec<LevelSummary>,
    pub failures: Vec<LabelCheck>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.levels.iter().all(|l| l.labels == l.expected && l.passed == l.labels)
    }
}

fn max_diff(engine: &AmplitudeMap, got: &std::collections::BTreeMap<String, f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for (k, v) in engine.iter() {
        worst = worst.max((got.get(k).copied().unwrap_or(0.0) - v.to_f64()).abs());
    }
    for (k, v) in got {
        if engine.get(k).is_zero() {
            worst = worst.max(v.abs());
        }
    }
    worst
}

fn check_label(label: &SchurLabel, circuit: Option<(&SynthesisPlan, &Circuit)>, mode: Mode) -> LabelCheck {
    let mut out = LabelCheck { label: label.to_string(), fidelity: 0.0, circuit_error: None, pass: false, error: None };
    let res = (|| -> Result<bool, CliError> {
        let engine = decompose(label)?;
        let d = label.partition.d();
        out.fidelity = oracle::fidelity(&engine, &oracle::oracle_state(label)?, d)?;
        let mut ok = (out.fidelity - 1.0).abs() < FIDELITY_TOL;
        if let Some((plan, c)) = circuit {
            match mode {
                Mode::Exact => {
                    let got = to_amplitude_map(simulate_label::<SurdSum>(plan, c, label)?)?;
                    let floats = got.iter().map(|(k, v)| (k.clone(), v.to_f64())).collect();
                    out.circuit_error = Some(max_diff(&engine, &floats));
                    ok &= got == engine;
                }
                Mode::Float => {
                    let got = simulate_label::<f64>(plan, c, label)?;
                    let e = max_diff(&engine, &got);
                    out.circuit_error = Some(e);
                    ok &= e < AMPLITUDE_TOL;
                }
            }
        }
        Ok(ok)
    })();
    match res {
        Ok(ok) => out.pass = ok,
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

/// Engine vs oracle vs circuit over every label with `1 ≤ n ≤ max_n`.
pub fn sweep(group: Group, max_n: usize, mode: Mode) -> Result<SweepReport, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_cap()? {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let cg = circuit_group(group);
    let d = group.d();
    let mut levels = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let synth = if n >= 2 {
            Some((SynthesisPlan::new(cg, n)?, build_usch_inv(cg, n)?))
        } else {
            None
        };
        let circuit = synth.as_ref().map(|(p, c)| (p, c));
        let labels = enumerate_labels(group, n);
        let checks: Vec<LabelCheck> =
            pool.install(|| labels.par_iter().map(|l| check_label(l, circuit, mode)).collect());
        levels.push(LevelSummary {
            n,
            labels: labels.len(),
            expected: d.pow(n as u32),
            passed: checks.iter().filter(|c| c.pass).count(),
            min_fidelity: checks.iter().map(|c| c.fidelity).fold(f64::INFINITY, f64::min),
            max_circuit_error: checks.iter().filter_map(|c| c.circuit_error).fold(0.0, f64::max),
        });
        failures.extend(checks.into_iter().filter(|c| !c.pass));
    }
    Ok(SweepReport { group: group.to_string(), max_n, mode, levels, failures })
}
