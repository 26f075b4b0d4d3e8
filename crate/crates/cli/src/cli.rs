use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Measurement planning for variational quantum algorithms.
#[derive(Debug, Parser)]
#[command(name = "shotplan", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full pipeline: group, synthesize, solve the ground state, and report
    /// measurement counts per noise configuration.
    Plan(PlanArgs),
    /// Partition a Hamiltonian into fragments and list them.
    Group(GroupArgs),
    /// Synthesize the measurement circuit for one fragment.
    Synth(SynthArgs),
    /// Fit measurement-circuit gate counts against N_q²/log₁₀(N_q).
    Scaling(ScalingArgs),
    /// Convert an FCIDUMP integral file into a qubit Hamiltonian file.
    IngestFcidump(IngestArgs),
    /// Monte Carlo check of the analytic estimator mean and variance.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Fc,
    Qwc,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SingleModeArg {
    Fc,
    Qwc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MappingArg {
    Jw,
    Bk,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Hamiltonian file (`qubits:` header + coefficient/Pauli lines).
    pub input: PathBuf,
    /// Grouping mode; `both` additionally reports N_m(QWC)/N_m(FC) ratios.
    #[arg(long, value_enum, default_value = "both")]
    pub mode: ModeArg,
    /// Target accuracy ε in Hartree.
    #[arg(long, default_value_t = 1e-3)]
    pub epsilon: f64,
    /// Fidelity presets to sweep: ideal, c, f (repeatable).
    #[arg(long = "preset", value_delimiter = ',', default_values = ["ideal", "c", "f"])]
    pub presets: Vec<String>,
    /// Custom single-qubit gate fidelity (overrides the preset list with one
    /// custom entry; requires --f2).
    #[arg(long, requires = "f2")]
    pub f1: Option<f64>,
    /// Custom two-qubit gate fidelity.
    #[arg(long, requires = "f1")]
    pub f2: Option<f64>,
    /// State-preparation fidelities p to sweep (repeatable).
    #[arg(long = "p", value_delimiter = ',', default_values_t = [1.0, 0.8, 0.6])]
    pub p_values: Vec<f64>,
    /// Seed for the deterministic eigensolver start vector.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// One-qubit gate cost of a Y-basis rotation (SDG+H pair): 1 or 2.
    #[arg(long = "y-cost", default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub y_cost: u8,
    /// Refuse inputs wider than this many qubits.
    #[arg(long = "qubit-cap", default_value_t = 20)]
    pub qubit_cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Output file (stdout when omitted).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "fc")]
    pub mode: SingleModeArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "fc")]
    pub mode: SingleModeArg,
    /// Fragment index (as listed by `group`).
    #[arg(long, default_value_t = 0)]
    pub fragment: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    /// Hamiltonian files covering at least 3 distinct qubit counts.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "fc")]
    pub mode: SingleModeArg,
    #[arg(long = "y-cost", default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub y_cost: u8,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// FCIDUMP integral file.
    pub input: PathBuf,
    /// Fermion-to-qubit mapping.
    #[arg(long, value_enum, default_value = "bk")]
    pub mapping: MappingArg,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "fc")]
    pub mode: SingleModeArg,
    /// Fidelity preset: ideal, c, or f.
    #[arg(long, default_value = "ideal")]
    pub preset: String,
    /// State-preparation fidelity p.
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    /// Shots per fragment.
    #[arg(long, default_value_t = 100_000)]
    pub shots: usize,
    /// RNG seed (required for reproducibility).
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
