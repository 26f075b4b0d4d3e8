//! Fidelity model, estimator variance, and measurement-count formulas.

use serde::{Deserialize, Serialize};

use crate::clifford::{conjugate_sum, CliffordCircuit};
use crate::error::Error;
use crate::grouping::{FragmentSet, GroupingMode};
use crate::pauli::PauliSum;
use crate::scalar::{real, Real};
use crate::state::{expectation, expectation_of_square, Statevector};
use crate::Result;

/// Report schema version stamped into serialized [`MeasurementReport`]s.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Depolarizing noise model parameters: per-gate fidelities and the
/// state-preparation fidelity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseParams {
    /// Single-qubit gate fidelity, in (0, 1].
    pub f1: f64,
    /// Two-qubit gate fidelity, in (0, 1].
    pub f2: f64,
    /// State-preparation fidelity, in (0, 1].
    pub p: f64,
}

impl NoiseParams {
    /// Noiseless gates and perfect preparation.
    pub fn ideal() -> Self {
        Self { f1: 1.0, f2: 1.0, p: 1.0 }
    }

    /// Fidelity set C: f1 = 0.9938, f2 = 0.9984.
    pub fn set_c(p: f64) -> Self {
        Self { f1: 0.9938, f2: 0.9984, p }
    }

    /// Fidelity set F: f1 = 0.9999, f2 = 0.999.
    pub fn set_f(p: f64) -> Self {
        Self { f1: 0.9999, f2: 0.999, p }
    }

    /// Looks up a preset by name: `ideal`, `c`, or `f`.
    pub fn preset(name: &str, p: f64) -> Result<Self> {
        let np = match name.to_ascii_lowercase().as_str() {
            "ideal" => Self { f1: 1.0, f2: 1.0, p },
            "c" => Self::set_c(p),
            "f" => Self::set_f(p),
            other => return Err(Error::Parse(format!("unknown fidelity preset '{other}'"))),
        };
        np.validate()?;
        Ok(np)
    }

    /// Checks that all three fidelities lie in (0, 1].
    pub fn validate(&self) -> Result<()> {
        for v in [self.f1, self.f2, self.p] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::InvalidFidelity(v));
            }
        }
        Ok(())
    }
}

/// `q_n = f1^G1 · f2^G2`.
pub fn circuit_fidelity(g1: usize, g2: usize, np: &NoiseParams) -> f64 {
    np.f1.powi(g1 as i32) * np.f2.powi(g2 as i32)
}

/// Estimator variance of one fragment under total fidelity `f_n`:
///
/// `var_bar = var_psi + ((1−F)/F)·⟨H_n²⟩ + ((1−F)/F²)·Σa_j²`.
pub fn estimator_variance<T: Real>(var_psi: T, h2_exp: T, ssc: T, f_n: f64) -> Result<T> {
    if !(f_n > 0.0 && f_n <= 1.0) {
        return Err(Error::InvalidFidelity(f_n));
    }
    let f = real::<T>(f_n);
    let one = T::one();
    Ok(var_psi + (one - f) / f * h2_exp + (one - f) / (f * f) * ssc)
}

/// Noise contribution of the estimator variance split into the diagonal
/// (`i = j`) and off-diagonal (`i ≠ j`) parts of `⟨H_n²⟩`, plus the noiseless
/// quantum variance:
///
/// - diagonal: `(1−F)(1/F + 1/F²)·Σa_j²`
/// - off-diagonal: `((1−F)/F)·(⟨H_n²⟩ − Σa_j²)`
///
/// Their sum with `var_psi` equals [`estimator_variance`].
pub fn estimator_variance_split<T: Real>(
    fragment: &PauliSum<T>,
    v: &Statevector<T>,
    f_n: f64,
) -> Result<(T, T, T)> {
    if !(f_n > 0.0 && f_n <= 1.0) {
        return Err(Error::InvalidFidelity(f_n));
    }
    let mean = expectation(fragment, v)?;
    let h2_exp = expectation_of_square(fragment, v)?;
    let var_psi = (h2_exp - mean * mean).max(T::zero());
    let ssc = fragment.sum_square_coeffs();
    let f = real::<T>(f_n);
    let one = T::one();
    let diagonal = (one - f) * (one / f + one / (f * f)) * ssc;
    let off_diagonal = (one - f) / f * (h2_exp - ssc);
    Ok((diagonal, off_diagonal, var_psi))
}

/// Optimal-allocation measurement count: `N_m = (Σ_n √var_bar_n / ε)²`,
/// together with the continuous per-fragment shot shares (proportional to
/// `√var_bar_n`, summing to 1 when any variance is nonzero).
pub fn total_measurements(var_bars: &[f64], epsilon: f64) -> Result<(f64, Vec<f64>)> {
    if epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let roots: Vec<f64> = var_bars.iter().map(|v| v.max(0.0).sqrt()).collect();
    let total: f64 = roots.iter().sum();
    let n_m = (total / epsilon).powi(2);
    let shares = if total > 0.0 {
        roots.iter().map(|r| r / total).collect()
    } else {
        vec![0.0; var_bars.len()]
    };
    Ok((n_m, shares))
}

/// The p-dominated approximation
/// `N_m^(p) = ((1−p)/(ε²p²)) · (Σ_n √(Σ_j a_j²))²`.
///
/// At `p = 1` the leading factor vanishes; the caller should flag that the
/// approximation is degenerate there.
pub fn approx_measurements_p<T: Real>(
    fragments: &FragmentSet<T>,
    p: f64,
    epsilon: f64,
) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidFidelity(p));
    }
    if epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let root_sum: f64 = fragments
        .fragments
        .iter()
        .map(|f| f.sum_square_coeffs().to_f64().unwrap_or(0.0).max(0.0).sqrt())
        .sum();
    Ok((1.0 - p) / (epsilon * epsilon * p * p) * root_sum * root_sum)
}

/// Everything the planner needs to know about one fragment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FragmentMetrics {
    /// Number of Pauli terms in the fragment.
    pub n_terms: usize,
    /// One-qubit gate count of the measurement circuit.
    pub g1: usize,
    /// Two-qubit gate count of the measurement circuit.
    pub g2: usize,
    /// Circuit fidelity `q_n = f1^G1 f2^G2`.
    pub q_n: f64,
    /// Total fidelity `F_n = p · q_n`.
    pub f_n: f64,
    /// Quantum variance `⟨H_n²⟩ − ⟨H_n⟩²`.
    pub var_psi: f64,
    /// `⟨H_n²⟩`.
    pub h2_exp: f64,
    /// `Σ_j a_j²`.
    pub ssc: f64,
    /// Estimator variance under the noise model.
    pub var_bar: f64,
    /// `⟨H_n⟩` on the reference state.
    pub mean: f64,
}

/// Noise-independent fragment data: state expectations and gate counts.
///
/// Profiling once and reusing across a (preset, p) sweep avoids recomputing
/// the expensive `⟨H_n⟩` / `⟨H_n²⟩` statevector contractions per config.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FragmentProfile {
    pub n_terms: usize,
    pub g1: usize,
    pub g2: usize,
    pub mean: f64,
    pub h2_exp: f64,
    pub ssc: f64,
}

/// Computes the noise-independent [`FragmentProfile`] of one fragment.
///
/// The circuit must diagonalize the fragment; this is re-checked here so a
/// bad (fragment, circuit) pairing cannot silently poison a report.
pub fn profile_fragment<T: Real>(
    fragment: &PauliSum<T>,
    circuit: &CliffordCircuit,
    v: &Statevector<T>,
    y_cost: u8,
) -> Result<FragmentProfile> {
    let rotated = conjugate_sum(circuit, fragment)?;
    if !rotated.is_ising() {
        return Err(Error::Integrity(
            "measurement circuit fails to diagonalize its fragment".into(),
        ));
    }
    let (g1, g2) = circuit.gate_counts_with_y_cost(y_cost);
    let mean = expectation(fragment, v)?;
    let h2_exp = expectation_of_square(fragment, v)?;
    Ok(FragmentProfile {
        n_terms: fragment.len(),
        g1,
        g2,
        mean: mean.to_f64().unwrap_or(f64::NAN),
        h2_exp: h2_exp.to_f64().unwrap_or(f64::NAN),
        ssc: fragment.sum_square_coeffs().to_f64().unwrap_or(f64::NAN),
    })
}

/// Applies one noise configuration to a profiled fragment.
pub fn metrics_from_profile(profile: &FragmentProfile, np: &NoiseParams) -> Result<FragmentMetrics> {
    np.validate()?;
    let q_n = circuit_fidelity(profile.g1, profile.g2, np);
    let f_n = np.p * q_n;
    let var_psi = (profile.h2_exp - profile.mean * profile.mean).max(0.0);
    let var_bar = estimator_variance(var_psi, profile.h2_exp, profile.ssc, f_n)?;
    Ok(FragmentMetrics {
        n_terms: profile.n_terms,
        g1: profile.g1,
        g2: profile.g2,
        q_n,
        f_n,
        var_psi,
        h2_exp: profile.h2_exp,
        ssc: profile.ssc,
        var_bar,
        mean: profile.mean,
    })
}

/// Computes the full [`FragmentMetrics`] record for one fragment (Y-rotation
/// cost model fixed at 2 one-qubit gates).
pub fn analyze_fragment<T: Real>(
    fragment: &PauliSum<T>,
    circuit: &CliffordCircuit,
    v: &Statevector<T>,
    np: &NoiseParams,
) -> Result<FragmentMetrics> {
    let profile = profile_fragment(fragment, circuit, v, 2)?;
    metrics_from_profile(&profile, np)
}

/// A complete measurement plan for one (mode, noise, p, ε) configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementReport {
    pub schema_version: u32,
    pub mode: GroupingMode,
    pub noise: NoiseParams,
    pub epsilon: f64,
    pub n_qubits: usize,
    pub constant: f64,
    pub ground_energy: f64,
    pub fragments: Vec<FragmentMetrics>,
    /// `N_m` per the optimal-allocation formula.
    pub n_m: f64,
    /// Continuous optimal shot shares per fragment.
    pub shares: Vec<f64>,
    /// `N_m^(p)` per the p-dominated approximation; `None` at `p = 1`, where
    /// the `1 − p` prefactor makes the approximation degenerate.
    pub n_m_approx_p: Option<f64>,
    /// Seed used for the Lanczos start vector.
    pub seed: u64,
    /// Identifier for the input Hamiltonian (path or label).
    pub source: String,
    /// SHA-256 of the input Hamiltonian text, when read from a file.
    pub source_sha256: Option<String>,
}

/// Assembles a [`MeasurementReport`] from per-fragment metrics.
#[allow(clippy::too_many_arguments)]
pub fn build_report<T: Real>(
    fragments: &FragmentSet<T>,
    metrics: Vec<FragmentMetrics>,
    np: &NoiseParams,
    epsilon: f64,
    n_qubits: usize,
    ground_energy: f64,
    seed: u64,
    source: String,
    source_sha256: Option<String>,
) -> Result<MeasurementReport> {
    let var_bars: Vec<f64> = metrics.iter().map(|m| m.var_bar).collect();
    let (n_m, shares) = total_measurements(&var_bars, epsilon)?;
    let n_m_approx_p = if np.p < 1.0 {
        Some(approx_measurements_p(fragments, np.p, epsilon)?)
    } else {
        None
    };
    Ok(MeasurementReport {
        schema_version: REPORT_SCHEMA_VERSION,
        mode: fragments.mode,
        noise: *np,
        epsilon,
        n_qubits,
        constant: fragments.constant.to_f64().unwrap_or(f64::NAN),
        ground_energy,
        fragments: metrics,
        n_m,
        shares,
        n_m_approx_p,
        seed,
        source,
        source_sha256,
    })
}
