mod group;
mod ingest;
mod plan;
mod scaling;
mod simulate;
mod synth;

use shotplan_core::clifford::{synthesize_fc, synthesize_qwc, CliffordCircuit};
use shotplan_core::grouping::{require_nonempty, sorted_insertion, FragmentSet};
use shotplan_core::{GroupingMode, PauliSum};

use crate::cli::{Cli, Command, ModeArg, SingleModeArg};
use crate::util::{read_input, sha256_hex, CliResult};

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Plan(args) => plan::run(&args),
        Command::Group(args) => group::run(&args),
        Command::Synth(args) => synth::run(&args),
        Command::Scaling(args) => scaling::run(&args),
        Command::IngestFcidump(args) => ingest::run(&args),
        Command::Simulate(args) => simulate::run(&args),
    }
}

impl From<SingleModeArg> for GroupingMode {
    fn from(m: SingleModeArg) -> Self {
        match m {
            SingleModeArg::Fc => GroupingMode::Fc,
            SingleModeArg::Qwc => GroupingMode::Qwc,
        }
    }
}

impl ModeArg {
    pub fn modes(&self) -> Vec<GroupingMode> {
        match self {
            ModeArg::Fc => vec![GroupingMode::Fc],
            ModeArg::Qwc => vec![GroupingMode::Qwc],
            ModeArg::Both => vec![GroupingMode::Fc, GroupingMode::Qwc],
        }
    }
}

/// Parses a Hamiltonian file; returns the operator and its content digest.
pub fn load_hamiltonian(path: &std::path::Path) -> CliResult<(PauliSum, String)> {
    let text = read_input(path)?;
    let h = PauliSum::parse(&text)?;
    require_nonempty(&h)?;
    Ok((h, sha256_hex(&text)))
}

/// Synthesizes the measurement circuit appropriate to the grouping mode.
pub fn synthesize(mode: GroupingMode, fragment: &PauliSum) -> shotplan_core::Result<CliffordCircuit> {
    match mode {
        GroupingMode::Fc => synthesize_fc(fragment),
        GroupingMode::Qwc => synthesize_qwc(fragment),
    }
}

/// Groups and synthesizes every fragment of one mode.
pub fn partition_and_synthesize(
    h: &PauliSum,
    mode: GroupingMode,
) -> CliResult<(FragmentSet<f64>, Vec<CliffordCircuit>)> {
    let fs = sorted_insertion(h, mode)?;
    let circuits = fs
        .fragments
        .iter()
        .map(|f| synthesize(mode, f))
        .collect::<shotplan_core::Result<Vec<_>>>()?;
    Ok((fs, circuits))
}
