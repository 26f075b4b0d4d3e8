use serde::Serialize;
use shotplan_core::grouping::{sorted_insertion, validate_partition};

use crate::cli::{FormatArg, GroupArgs};
use crate::commands::load_hamiltonian;
use crate::util::{write_output, CliError, CliResult};

#[derive(Debug, Serialize)]
struct FragmentEntry {
    index: usize,
    n_terms: usize,
    /// `Σ_j a_j²` of this fragment.
    ssc: f64,
    terms: Vec<String>,
}

#[derive(Debug, Serialize)]
struct GroupOutput {
    input: String,
    source_sha256: String,
    mode: String,
    n_qubits: usize,
    constant: f64,
    n_fragments: usize,
    fragments: Vec<FragmentEntry>,
}

pub fn run(args: &GroupArgs) -> CliResult<()> {
    let (h, sha) = load_hamiltonian(&args.input)?;
    let mode = args.mode.into();
    let fs = sorted_insertion(&h, mode)?;
    let report = validate_partition(&fs, &h)?;
    if !report.is_valid() {
        return Err(CliError::internal(format!(
            "partition failed validation: {}",
            report.violations.join("; "),
        )));
    }

    let fragments: Vec<FragmentEntry> = fs
        .fragments
        .iter()
        .enumerate()
        .map(|(index, f)| FragmentEntry {
            index,
            n_terms: f.len(),
            ssc: f.sum_square_coeffs(),
            terms: f
                .terms()
                .iter()
                .map(|(c, p)| format!("{c:+.12e} {p}"))
                .collect(),
        })
        .collect();
    let out = GroupOutput {
        input: args.input.display().to_string(),
        source_sha256: sha,
        mode: mode.to_string(),
        n_qubits: h.n_qubits(),
        constant: fs.constant,
        n_fragments: fs.n_fragments(),
        fragments,
    };

    let rendered = match args.format {
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&out)
                .map_err(|e| CliError::internal(format!("json serialization: {e}")))?;
            s.push('\n');
            s
        }
        FormatArg::Csv => {
            let mut s = String::from("fragment,n_terms,ssc\n");
            for f in &out.fragments {
                s.push_str(&format!("{},{},{:.12e}\n", f.index, f.n_terms, f.ssc));
            }
            s
        }
    };
    write_output(args.output.as_deref(), &rendered)
}
