use serde::Serialize;
use shotplan_core::metrics::{
    build_report, metrics_from_profile, profile_fragment, FragmentProfile, MeasurementReport,
    NoiseParams, REPORT_SCHEMA_VERSION,
};
use shotplan_core::state::{ground_state, LanczosOptions};
use shotplan_core::{Error, GroupingMode};

use crate::cli::{FormatArg, PlanArgs};
use crate::commands::{load_hamiltonian, partition_and_synthesize};
use crate::util::{write_output, CliError, CliResult};

#[derive(Debug, Serialize)]
struct ReportEntry {
    preset: String,
    report: MeasurementReport,
}

#[derive(Debug, Serialize)]
struct RatioEntry {
    preset: String,
    p: f64,
    n_m_qwc: f64,
    n_m_fc: f64,
    /// `N_m(QWC) / N_m(FC)`.
    ratio: f64,
}

#[derive(Debug, Serialize)]
struct PlanOutput {
    schema_version: u32,
    input: String,
    source_sha256: String,
    epsilon: f64,
    seed: u64,
    y_cost: u8,
    n_qubits: usize,
    ground_energy: f64,
    reports: Vec<ReportEntry>,
    ratios: Vec<RatioEntry>,
}

pub fn run(args: &PlanArgs) -> CliResult<()> {
    if args.epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon(args.epsilon).into());
    }
    let (h, sha) = load_hamiltonian(&args.input)?;
    if h.n_qubits() > args.qubit_cap {
        return Err(Error::WidthOverCap(h.n_qubits(), args.qubit_cap).into());
    }

    let noise_configs = noise_sweep(args)?;

    let opts = LanczosOptions { seed: args.seed, qubit_cap: args.qubit_cap, ..Default::default() };
    let (energy, psi) = ground_state(&h, &opts)?;

    let mut reports: Vec<ReportEntry> = Vec::new();
    let mut by_mode: Vec<(GroupingMode, Vec<(String, f64)>)> = Vec::new();
    for mode in args.mode.modes() {
        let (fs, circuits) = partition_and_synthesize(&h, mode)?;
        let profiles: Vec<FragmentProfile> = fs
            .fragments
            .iter()
            .zip(circuits.iter())
            .map(|(f, c)| profile_fragment(f, c, &psi, args.y_cost))
            .collect::<shotplan_core::Result<Vec<_>>>()?;

        let mut mode_counts = Vec::new();
        for (preset, np) in &noise_configs {
            let metrics = profiles
                .iter()
                .map(|pr| metrics_from_profile(pr, np))
                .collect::<shotplan_core::Result<Vec<_>>>()?;
            let report = build_report(
                &fs,
                metrics,
                np,
                args.epsilon,
                h.n_qubits(),
                energy,
                args.seed,
                args.input.display().to_string(),
                Some(sha.clone()),
            )?;
            mode_counts.push((format!("{preset}|{}", np.p), report.n_m));
            reports.push(ReportEntry { preset: preset.clone(), report });
        }
        by_mode.push((mode, mode_counts));
    }

    let ratios = if by_mode.len() == 2 {
        let fc = &by_mode.iter().find(|(m, _)| *m == GroupingMode::Fc).unwrap().1;
        let qwc = &by_mode.iter().find(|(m, _)| *m == GroupingMode::Qwc).unwrap().1;
        noise_configs
            .iter()
            .zip(fc.iter().zip(qwc.iter()))
            .map(|((preset, np), ((_, n_fc), (_, n_qwc)))| RatioEntry {
                preset: preset.clone(),
                p: np.p,
                n_m_qwc: *n_qwc,
                n_m_fc: *n_fc,
                ratio: n_qwc / n_fc,
            })
            .collect()
    } else {
        Vec::new()
    };

    let out = PlanOutput {
        schema_version: REPORT_SCHEMA_VERSION,
        input: args.input.display().to_string(),
        source_sha256: sha,
        epsilon: args.epsilon,
        seed: args.seed,
        y_cost: args.y_cost,
        n_qubits: h.n_qubits(),
        ground_energy: energy,
        reports,
        ratios,
    };

    let rendered = match args.format {
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&out)
                .map_err(|e| CliError::internal(format!("json serialization: {e}")))?;
            s.push('\n');
            s
        }
        FormatArg::Csv => render_csv(&out),
    };
    write_output(args.output.as_deref(), &rendered)
}

/// The (preset, NoiseParams) sweep: either one custom (f1, f2) pair or the
/// named presets, each crossed with every p value.
fn noise_sweep(args: &PlanArgs) -> CliResult<Vec<(String, NoiseParams)>> {
    let mut out = Vec::new();
    for &p in &args.p_values {
        match (args.f1, args.f2) {
            (Some(f1), Some(f2)) => {
                let np = NoiseParams { f1, f2, p };
                np.validate()?;
                out.push(("custom".to_string(), np));
            }
            _ => {
                for preset in &args.presets {
                    out.push((preset.clone(), NoiseParams::preset(preset, p)?));
                }
            }
        }
    }
    Ok(out)
}

fn render_csv(out: &PlanOutput) -> String {
    let mut s = String::from(
        "kind,mode,preset,p,f1,f2,epsilon,n_fragments,n_m,n_m_approx_p,ratio\n",
    );
    for entry in &out.reports {
        let r = &entry.report;
        s.push_str(&format!(
            "report,{},{},{},{},{},{},{},{:.6e},{},\n",
            r.mode,
            entry.preset,
            r.noise.p,
            r.noise.f1,
            r.noise.f2,
            r.epsilon,
            r.fragments.len(),
            r.n_m,
            r.n_m_approx_p.map_or(String::new(), |v| format!("{v:.6e}")),
        ));
    }
    for ratio in &out.ratios {
        s.push_str(&format!(
            "ratio,both,{},{},,,{},,,,{:.6}\n",
            ratio.preset, ratio.p, out.epsilon, ratio.ratio,
        ));
    }
    s
}
