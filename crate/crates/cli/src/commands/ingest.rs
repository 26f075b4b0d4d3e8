use shotplan_core::fermion::{
    bravyi_kitaev, build_second_quantized, jordan_wigner, parse_fcidump,
};

use crate::cli::{IngestArgs, MappingArg};
use crate::util::{read_input, write_output, CliResult};

pub fn run(args: &IngestArgs) -> CliResult<()> {
    let text = read_input(&args.input)?;
    let integrals = parse_fcidump::<f64>(&text)?;
    let n_modes = 2 * integrals.n_orbitals();
    let fermion_op = build_second_quantized(&integrals);
    let (mapping, h) = match args.mapping {
        MappingArg::Jw => ("jw", jordan_wigner(&fermion_op, n_modes)?),
        MappingArg::Bk => ("bk", bravyi_kitaev(&fermion_op, n_modes)?),
    };

    let mut out = format!(
        "# source: {}\n# mapping: {mapping}\n# orbitals: {}, electrons: {}\n\
         # spin-orbital convention: interleaved (alpha = 2p, beta = 2p+1)\n",
        args.input.display(),
        integrals.n_orbitals(),
        integrals.n_electrons(),
    );
    out.push_str(&h.serialize());
    write_output(args.output.as_deref(), &out)
}
