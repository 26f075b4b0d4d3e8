use shotplan_core::grouping::sorted_insertion;

use crate::cli::SynthArgs;
use crate::commands::{load_hamiltonian, synthesize};
use crate::util::{write_output, CliError, CliResult};

pub fn run(args: &SynthArgs) -> CliResult<()> {
    let (h, _) = load_hamiltonian(&args.input)?;
    let mode = args.mode.into();
    let fs = sorted_insertion(&h, mode)?;
    let fragment = fs.fragments.get(args.fragment).ok_or_else(|| {
        CliError::input(format!(
            "fragment index {} out of range ({} fragments)",
            args.fragment,
            fs.n_fragments(),
        ))
    })?;
    // synthesize_fc / synthesize_qwc verify all-Ising conjugation internally
    let circuit = synthesize(mode, fragment)?;
    let (g1, g2) = circuit.gate_counts();

    let mut out = format!(
        "# fragment {} of {} ({} mode, {} terms)\n# G1 = {g1}, G2 = {g2}\n",
        args.fragment,
        args.input.display(),
        mode,
        fragment.len(),
    );
    out.push_str(&circuit.serialize());
    write_output(args.output.as_deref(), &out)
}
