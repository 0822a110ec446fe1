//! `schur-synth`: exact decompositions, circuit synthesis, simulation and
//! verification sweeps.
//!
//! # Label grammar
//!
//! ```text
//! label   := su2 | su3
//! su2     := "su2:(" INT "," INT ");" INT ";" path
//! su3     := "su3:(" INT "," INT "," INT ");" INT "," INT "," INT ";" path
//! path    := "" | DIGIT ("," DIGIT)*
//! ```
//!
//! The SU(2) weight is `q = j + m`; the SU(3) weight is `(k, l, m)`. Path
//! entries name the row that received each box after the first: `1`/`0` for
//! the first/second row of an SU(2) diagram, `2`/`1`/`0` for SU(3). Examples:
//! `su2:(2,1);1;1,0`, `su3:(1,1,1);0,0,0;1,0`.
//!
//! Amplitude keys list one digit per particle, particle 1 first (`u=2`,
//! `d=1`, `s=0` for qutrits).
//!
//! # Exit codes
//!
//! `0` pass, `1` verification failure, `2` usage, parse or input error.

mod isoscalar;
mod report;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use circuit_synth::{
    build_usch_inv, derived_resources, predicted_resources, GateFormula, SynthError, SynthesisPlan,
};
use clap::{Parser, Subcommand, ValueEnum};
use gate_model::{count_resources, Circuit, GateModelError, GateTally};
use oracle::OracleError;
use rep_core::{Group, RepError, SchurLabel};
use serde::Serialize;
use serde_json::json;
use state_sim::{report, FloatEntry, SimError};
use su2_engine::{AmplitudeMap, Su2Error, SurdSum};
use su3_engine::Su3Error;
use thiserror::Error;

pub use isoscalar::{isoscalar_table, orthonormality_failures, IsoscalarRow};
pub use report::RunReport;
pub use verify::{
    circuit_group, simulate_label, sweep, thread_cap, LabelCheck, LevelSummary, SweepReport, AMPLITUDE_TOL,
    FIDELITY_TOL, THREADS_ENV,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("label: {0}")]
    Label(#[from] RepError),
    #[error("su2 engine: {0}")]
    Su2(#[from] Su2Error),
    #[error("su3 engine: {0}")]
    Su3(#[from] Su3Error),
    #[error("synthesis: {0}")]
    Synth(#[from] SynthError),
    #[error("circuit: {0}")]
    Circuit(#[from] GateModelError),
    #[error("simulation: {0}")]
    Sim(#[from] SimError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "schur-synth", version, about = "Inverse Schur transform for qubits and qutrits")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact computational-basis amplitudes of a Schur label.
    Decompose {
        #[arg(value_name = "LABEL", required_unless_present = "label", conflicts_with = "label")]
        label_pos: Option<String>,
        #[arg(long)]
        label: Option<String>,
    },
    /// Build the inverse Schur circuit for n particles and write it as JSON.
    Synthesize {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a circuit file on a label and compare with the engine.
    Simulate {
        circuit: PathBuf,
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Engine vs oracle vs circuit for every label up to max-n.
    Verify {
        #[arg(value_name = "GROUP", required_unless_present = "group", conflicts_with = "group")]
        group_pos: Option<Group>,
        #[arg(value_name = "MAX_N", conflicts_with = "max_n")]
        max_n_pos: Option<usize>,
        #[arg(long)]
        group: Option<Group>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Measured gate counts against the closed forms.
    Resources {
        #[arg(value_name = "GROUP", required_unless_present = "group", conflicts_with = "group")]
        group_pos: Option<Group>,
        #[arg(value_name = "N", conflicts_with = "n")]
        n_pos: Option<usize>,
        #[arg(long)]
        group: Option<Group>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// All isoscalar factors of (P1,Q1) ⊗ (1,0), with an orthonormality check.
    IsoscalarTable { p1: i64, q1: i64 },
}

/// What a command prints: its report, or a raw document (a circuit written
/// to stdout).
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub raw: Option<String>,
}

impl From<RunReport> for Outcome {
    fn from(report: RunReport) -> Self {
        Self { report, raw: None }
    }
}

pub fn decompose(label: &SchurLabel) -> Result<AmplitudeMap, CliError> {
    Ok(match label.group() {
        Group::Su2 => su2_engine::decompose_su2(label)?,
        Group::Su3 => su3_engine::decompose_su3(label)?,
    })
}

fn parse_label(s: &str) -> Result<SchurLabel, CliError> {
    Ok(s.trim().parse::<SchurLabel>()?)
}

fn pick<T>(pos: Option<T>, flag: Option<T>, what: &str) -> Result<T, CliError> {
    pos.or(flag).ok_or_else(|| CliError::Usage(format!("missing {what}")))
}

pub fn cmd_decompose(text: &str) -> Result<RunReport, CliError> {
    let label = parse_label(text)?;
    let map = decompose(&label)?;
    let entries = report(&map);
    let mut r = RunReport::new("decompose").input("label", &label);
    r.lines = entries.iter().map(|e| e.text()).collect();
    r.outputs = json!({ "n": label.n(), "terms": entries.len(), "amplitudes": entries });
    Ok(r)
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn cmd_synthesize(group: Group, n: usize, out: Option<&Path>) -> Result<Outcome, CliError> {
    let c = build_usch_inv(circuit_group(group), n)?;
    let json = c.to_json();
    let mut r = RunReport::new("synthesize").input("group", group).input("n", n);
    r.outputs = json!({ "bits": c.num_bits(), "gates": c.gates.len() });
    r.lines.push(format!("{} bits, {} gates", c.num_bits(), c.gates.len()));
    match out {
        Some(p) => {
            write_file(p, &json)?;
            r.inputs.insert("out".into(), p.display().to_string());
            Ok(r.into())
        }
        None => Ok(Outcome { report: r, raw: Some(json) }),
    }
}

pub fn cmd_simulate(path: &Path, label: &str, mode: Mode) -> Result<RunReport, CliError> {
    let body = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let c = Circuit::from_json(&body)?;
    let label = parse_label(label)?;
    if circuit_group(label.group()) != c.group || label.n() != c.n {
        return Err(CliError::Usage(format!(
            "label {label} does not fit a {:?} circuit on {} particles",
            c.group, c.n
        )));
    }
    let plan = SynthesisPlan::new(c.group, c.n)?;
    let engine = decompose(&label)?;
    let mut r = RunReport::new("simulate")
        .input("circuit", path.display())
        .input("label", &label)
        .input("mode", mode);
    plan.encode_label(&label)?;
    // from here on a fault, a dirty ancilla or a wrong amplitude is a
    // verification failure of the circuit, not an input error
    let outcome = match mode {
        Mode::Exact => simulate_label::<SurdSum>(&plan, &c, &label)
            .and_then(|m| Ok(state_sim::to_amplitude_map(m)?))
            .map(|got| {
                let entries = report(&got);
                r.lines = entries.iter().map(|e| e.text()).collect();
                r.outputs = json!({ "amplitudes": entries });
                if got != engine {
                    r.fail("circuit output differs from the exact decomposition");
                }
            }),
        Mode::Float => simulate_label::<f64>(&plan, &c, &label).map(|got| {
            let entries: Vec<FloatEntry> = got.iter().map(|(k, &value)| FloatEntry { key: k.clone(), value }).collect();
            r.lines = entries.iter().map(|e| format!("|{}>  {:+.12}", e.key, e.value)).collect();
            r.outputs = json!({ "amplitudes": entries });
            for (k, v) in engine.iter() {
                let x = got.get(k).copied().unwrap_or(0.0);
                if (x - v.to_f64()).abs() >= AMPLITUDE_TOL {
                    r.fail(format!("|{k}>: circuit {x:+.15}, engine {:+.15}", v.to_f64()));
                }
            }
            for k in got.keys().filter(|k| engine.get(k).is_zero()) {
                r.fail(format!("|{k}>: not in the exact decomposition"));
            }
        }),
    };
    if let Err(e) = outcome {
        r.fail(e.to_string());
    }
    Ok(r)
}

pub fn cmd_verify(group: Group, max_n: usize, mode: Mode) -> Result<RunReport, CliError> {
    let s = sweep(group, max_n, mode)?;
    let mut r = RunReport::new("verify").input("group", group).input("max_n", max_n).input("mode", mode);
    for l in &s.levels {
        r.lines.push(format!(
            "n={}  {}/{} labels pass (expected {})  min fidelity {:.12}  max circuit error {:.1e}",
            l.n, l.passed, l.labels, l.expected, l.min_fidelity, l.max_circuit_error
        ));
        if l.labels != l.expected {
            r.fail(format!("n={}: {} labels, expected {}", l.n, l.labels, l.expected));
        }
    }
    for f in &s.failures {
        let why = f.error.clone().unwrap_or_else(|| {
            format!("fidelity {:.15}, circuit error {:?}", f.fidelity, f.circuit_error)
        });
        r.fail(format!("{}: {why}", f.label));
    }
    r.outputs = serde_json::to_value(&s).expect("sweep serialises");
    Ok(r)
}

fn formula(t: &GateTally) -> GateFormula {
    GateFormula { not: t.not as u64, cnot: t.cnot as u64, ccnot: t.ccnot as u64, data_rot: t.data_rot as u64 }
}

/// Ratio measured/closed-form per arithmetic gate kind; `None` where the
/// closed-form count is 0.
pub fn closed_form_ratios(measured: &GateFormula, closed: &GateFormula) -> [(&'static str, Option<f64>); 3] {
    let ratio = |a: u64, b: u64| (b != 0).then(|| a as f64 / b as f64);
    [
        ("NOT", ratio(measured.not, closed.not)),
        ("CNOT", ratio(measured.cnot, closed.cnot)),
        ("CCNOT", ratio(measured.ccnot, closed.ccnot)),
    ]
}

pub fn cmd_resources(group: Group, n: usize) -> Result<RunReport, CliError> {
    let cg = circuit_group(group);
    let c = build_usch_inv(cg, n)?;
    let counts = count_resources(&c);
    let derived = derived_resources(cg, n);
    let predicted = predicted_resources(cg, n);
    let compute = formula(&counts.compute);
    let mut r = RunReport::new("resources").input("group", group).input("n", n);
    if compute != derived.compute {
        r.fail(format!("compute path {compute:?} differs from derived {:?}", derived.compute));
    }
    if formula(&counts.uncompute) != derived.uncompute {
        r.fail(format!("uncompute path {:?} differs from derived {:?}", counts.uncompute, derived.uncompute));
    }
    if counts.bits as u64 != derived.bits {
        r.fail(format!("{} bits, derived {}", counts.bits, derived.bits));
    }
    for (f, &k) in &counts.data_rot_by_formula {
        if k != n - 1 {
            r.fail(format!("{k} DATA_ROT {f}, expected {}", n - 1));
        }
    }
    let ratios = closed_form_ratios(&compute, &predicted);
    r.lines.push(format!("bits {} (data {}, ancilla {}, carry {})", counts.bits, counts.data_bits, counts.ancilla_bits, counts.carry_bits));
    r.lines.push(format!(
        "compute    NOT {:>6}  CNOT {:>6}  CCNOT {:>6}  DATA_ROT {:>4}",
        compute.not, compute.cnot, compute.ccnot, compute.data_rot
    ));
    r.lines.push(format!(
        "uncompute  NOT {:>6}  CNOT {:>6}  CCNOT {:>6}",
        counts.uncompute.not, counts.uncompute.cnot, counts.uncompute.ccnot
    ));
    r.lines.push(format!(
        "closed     NOT {:>6}  CNOT {:>6}  CCNOT {:>6}  DATA_ROT {:>4}",
        predicted.not, predicted.cnot, predicted.ccnot, predicted.data_rot
    ));
    let shown: Vec<String> = ratios
        .iter()
        .map(|(k, v)| format!("{k} {}", v.map_or("-".to_string(), |x| format!("{x:.3}"))))
        .collect();
    r.lines.push(format!("measured/closed-form  {}", shown.join("  ")));
    r.outputs = json!({
        "measured": counts,
        "derived": derived,
        "closed_form": predicted,
        "ratios": ratios.iter().map(|(k, v)| (k.to_string(), *v)).collect::<std::collections::BTreeMap<_, _>>(),
    });
    Ok(r)
}

pub fn cmd_isoscalar_table(p1: i64, q1: i64) -> Result<RunReport, CliError> {
    if p1 < 0 || q1 < 0 {
        return Err(CliError::Usage(format!("({p1},{q1}) is not an irrep")));
    }
    let rows = isoscalar_table(p1, q1);
    let mut r = RunReport::new("isoscalar-table").input("p1", p1).input("q1", q1);
    r.lines = rows.iter().map(|x| x.text()).collect();
    for f in orthonormality_failures(p1, q1) {
        r.fail(f);
    }
    r.outputs = json!({ "factors": rows });
    Ok(r)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    Ok(match &cli.command {
        Command::Decompose { label_pos, label } => {
            cmd_decompose(&pick(label_pos.clone(), label.clone(), "label")?)?.into()
        }
        Command::Synthesize { group, n, out } => cmd_synthesize(*group, *n, out.as_deref())?,
        Command::Simulate { circuit, label, mode } => cmd_simulate(circuit, label, *mode)?.into(),
        Command::Verify { group_pos, max_n_pos, group, max_n, mode } => {
            let max_n = pick(*max_n_pos, *max_n, "max-n")?;
            cmd_verify(pick(*group_pos, *group, "group")?, max_n, *mode)?.into()
        }
        Command::Resources { group_pos, n_pos, group, n } => {
            cmd_resources(pick(*group_pos, *group, "group")?, pick(*n_pos, *n, "n")?)?.into()
        }
        Command::IsoscalarTable { p1, q1 } => cmd_isoscalar_table(*p1, *q1)?.into(),
    })
}

/// Parses `args`, runs the command, prints the result and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(mut out) => {
            out.report.elapsed_ms = start.elapsed().as_millis() as u64;
            let body = match (&out.raw, cli.format) {
                (Some(raw), _) => format!("{raw}\n"),
                (None, Format::Json) => format!("{}\n", out.report.to_json()),
                (None, Format::Text) => out.report.to_text(),
            };
            // a closed pipe is not a failure of the command
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.report.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
