use serde::Serialize;
use shotplan_core::clifford::conjugate_sum;
use shotplan_core::metrics::{metrics_from_profile, profile_fragment, NoiseParams};
use shotplan_core::state::{apply_clifford, ground_state, sample_noisy_measurement, LanczosOptions};
use shotplan_core::Error;

use crate::cli::{FormatArg, SimulateArgs};
use crate::commands::{load_hamiltonian, partition_and_synthesize};
use crate::util::{write_output, CliError, CliResult};

/// Sampling cost guard: `2^12` amplitudes per CDF is the largest register the
/// simulate subcommand accepts.
const SIMULATE_QUBIT_CAP: usize = 12;

#[derive(Debug, Serialize)]
struct FragmentComparison {
    fragment: usize,
    n_terms: usize,
    f_n: f64,
    analytic_mean: f64,
    empirical_mean: f64,
    mean_z_score: f64,
    var_bar: f64,
    empirical_var: f64,
    var_z_score: f64,
}

#[derive(Debug, Serialize)]
struct SimulateOutput {
    input: String,
    source_sha256: String,
    mode: String,
    preset: String,
    p: f64,
    shots: usize,
    seed: u64,
    ground_energy: f64,
    fragments: Vec<FragmentComparison>,
}

pub fn run(args: &SimulateArgs) -> CliResult<()> {
    let (h, sha) = load_hamiltonian(&args.input)?;
    if h.n_qubits() > SIMULATE_QUBIT_CAP {
        return Err(Error::WidthOverCap(h.n_qubits(), SIMULATE_QUBIT_CAP).into());
    }
    let np = NoiseParams::preset(&args.preset, args.p)?;
    let mode = args.mode.into();

    let opts = LanczosOptions { seed: args.seed, ..Default::default() };
    let (energy, psi) = ground_state(&h, &opts)?;
    let (fs, circuits) = partition_and_synthesize(&h, mode)?;

    let mut rows = Vec::new();
    for (index, (fragment, circuit)) in fs.fragments.iter().zip(circuits.iter()).enumerate() {
        let profile = profile_fragment(fragment, circuit, &psi, 2)?;
        let metrics = metrics_from_profile(&profile, &np)?;
        let ising = conjugate_sum(circuit, fragment)?;
        let phi = apply_clifford(circuit, &psi)?;
        // per-fragment seed offset keeps shots independent across fragments
        let outcomes =
            sample_noisy_measurement(&ising, &phi, metrics.f_n, args.shots, args.seed ^ index as u64)?;

        // the unbiased estimator divides raw outcomes by F_n
        let scaled: Vec<f64> = outcomes.iter().map(|o| o / metrics.f_n).collect();
        let n = scaled.len() as f64;
        let mean = scaled.iter().sum::<f64>() / n;
        let var = scaled.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        let m4 = scaled.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / n;

        let mean_se = (metrics.var_bar / n).sqrt();
        let var_se = ((m4 - var * var).max(0.0) / n).sqrt();
        rows.push(FragmentComparison {
            fragment: index,
            n_terms: fragment.len(),
            f_n: metrics.f_n,
            analytic_mean: metrics.mean,
            empirical_mean: mean,
            mean_z_score: if mean_se > 0.0 { (mean - metrics.mean).abs() / mean_se } else { 0.0 },
            var_bar: metrics.var_bar,
            empirical_var: var,
            var_z_score: if var_se > 0.0 { (var - metrics.var_bar).abs() / var_se } else { 0.0 },
        });
    }

    let out = SimulateOutput {
        input: args.input.display().to_string(),
        source_sha256: sha,
        mode: mode.to_string(),
        preset: args.preset.clone(),
        p: args.p,
        shots: args.shots,
        seed: args.seed,
        ground_energy: energy,
        fragments: rows,
    };

    let rendered = match args.format {
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&out)
                .map_err(|e| CliError::internal(format!("json serialization: {e}")))?;
            s.push('\n');
            s
        }
        FormatArg::Csv => {
            let mut s = String::from(
                "fragment,n_terms,f_n,analytic_mean,empirical_mean,mean_z,var_bar,empirical_var,var_z\n",
            );
            for r in &out.fragments {
                s.push_str(&format!(
                    "{},{},{:.6},{:.10e},{:.10e},{:.3},{:.10e},{:.10e},{:.3}\n",
                    r.fragment,
                    r.n_terms,
                    r.f_n,
                    r.analytic_mean,
                    r.empirical_mean,
                    r.mean_z_score,
                    r.var_bar,
                    r.empirical_var,
                    r.var_z_score,
                ));
            }
            s
        }
    };
    write_output(args.output.as_deref(), &rendered)
}
