use std::collections::BTreeSet;

use crate::cli::ScalingArgs;
use crate::commands::{load_hamiltonian, partition_and_synthesize};
use crate::util::{ols_fit, write_output, CliError, CliResult};

pub fn run(args: &ScalingArgs) -> CliResult<()> {
    let mode = args.mode.into();
    // (input, n_qubits, x = N_q²/log10(N_q), mean gates per fragment circuit)
    let mut points: Vec<(String, usize, f64, f64)> = Vec::new();
    for input in &args.inputs {
        let (h, _) = load_hamiltonian(input)?;
        let (fs, circuits) = partition_and_synthesize(&h, mode)?;
        let total: usize = circuits
            .iter()
            .map(|c| {
                let (g1, g2) = c.gate_counts_with_y_cost(args.y_cost);
                g1 + g2
            })
            .sum();
        let mean = total as f64 / fs.n_fragments() as f64;
        let n_q = h.n_qubits();
        let x = (n_q * n_q) as f64 / (n_q as f64).log10();
        points.push((input.display().to_string(), n_q, x, mean));
    }

    let sizes: BTreeSet<usize> = points.iter().map(|p| p.1).collect();
    if sizes.len() < 3 {
        return Err(CliError::input(format!(
            "need at least 3 distinct qubit counts for a fit, got {}",
            sizes.len(),
        )));
    }

    points.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let xs: Vec<f64> = points.iter().map(|p| p.2).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.3).collect();
    let (slope, intercept, r2) = ols_fit(&xs, &ys);

    let mut out = String::from("input,n_qubits,x,mean_gates\n");
    for (input, n_q, x, mean) in &points {
        out.push_str(&format!("{input},{n_q},{x:.6},{mean:.6}\n"));
    }
    out.push_str(&format!(
        "# fit: mean_gates = {slope:.6} * x + {intercept:.6}, r2 = {r2:.6}\n",
    ));
    write_output(args.output.as_deref(), &out)
}
