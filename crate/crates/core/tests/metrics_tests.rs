//! Fidelity model and measurement-count formulas against dense mixed-state
//! oracles and hand-computed values.

mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{circuit_matrix, depolarized_density, pure_density, sum_matrix, trace_product};
use shotplan_core::clifford::synthesize_fc;
use shotplan_core::grouping::{sorted_insertion, GroupingMode};
use shotplan_core::metrics::{
    analyze_fragment, approx_measurements_p, circuit_fidelity, estimator_variance,
    estimator_variance_split, metrics_from_profile, profile_fragment, total_measurements,
    NoiseParams,
};
use shotplan_core::pauli::PauliSum;
use shotplan_core::state::Statevector;
use shotplan_core::Error;

/// Dense reference for the estimator variance: prepare the depolarized state,
/// measure the rotated (Ising) operator, divide by F² for the 1/F rescaling
/// of the unbiased estimator.
fn dense_estimator_variance(
    fragment: &PauliSum<f64>,
    circuit: &shotplan_core::clifford::CliffordCircuit,
    v: &Statevector<f64>,
    f_n: f64,
) -> f64 {
    let u = circuit_matrix(circuit);
    let rho = depolarized_density(&u, &pure_density(v), f_n);
    let z = &u * sum_matrix(fragment) * u.adjoint(); // the Ising image, densely
    let first = trace_product(&z, &rho);
    let second = trace_product(&(&z * &z), &rho);
    (second - first * first) / (f_n * f_n)
}

#[test]
fn noise_params_presets_and_validation() {
    let c = NoiseParams::set_c(1.0);
    assert_eq!((c.f1, c.f2), (0.9938, 0.9984));
    let f = NoiseParams::set_f(0.8);
    assert_eq!((f.f1, f.f2, f.p), (0.9999, 0.999, 0.8));
    assert_eq!(NoiseParams::preset("C", 0.6).unwrap(), NoiseParams::set_c(0.6));
    assert!(matches!(NoiseParams::preset("bogus", 1.0), Err(Error::Parse(_))));
    assert!(matches!(NoiseParams::preset("c", 0.0), Err(Error::InvalidFidelity(_))));
    assert!(NoiseParams { f1: 1.1, f2: 1.0, p: 1.0 }.validate().is_err());
}

#[test]
fn circuit_fidelity_arithmetic() {
    let ideal = NoiseParams::ideal();
    assert_eq!(circuit_fidelity(5, 9, &ideal), 1.0);
    let np = NoiseParams { f1: 0.999, f2: 0.99, p: 1.0 };
    let expected = 0.999f64.powi(3) * 0.99f64.powi(2);
    assert!((circuit_fidelity(3, 2, &np) - expected).abs() < 1e-15);
    assert_eq!(circuit_fidelity(0, 0, &np), 1.0);
}

#[test]
fn estimator_variance_limits() {
    // F = 1: the noise terms vanish
    assert_eq!(estimator_variance(0.3, 0.7, 0.5, 1.0).unwrap(), 0.3);
    // single traceless Pauli a·P with ⟨P⟩ = 0: var_psi = h2 = ssc = a²,
    // and the closed form collapses to a²/F²
    let a2 = 0.49;
    let f = 0.8;
    let got = estimator_variance(a2, a2, a2, f).unwrap();
    assert!((got - a2 / (f * f)).abs() < 1e-12);
    assert!(matches!(estimator_variance(0.1, 0.1, 0.1, 0.0), Err(Error::InvalidFidelity(_))));
}

#[test]
fn estimator_variance_is_monotone_in_fidelity() {
    let mut prev = f64::INFINITY;
    for k in 1..=20 {
        let f = k as f64 / 20.0;
        let v = estimator_variance(0.2, 0.9, 0.6, f).unwrap();
        assert!(v <= prev + 1e-12, "variance increased with fidelity");
        assert!(v >= 0.2 - 1e-12, "estimator variance fell below var_psi");
        prev = v;
    }
}

#[test]
fn variance_matches_dense_mixed_state_oracle() {
    let mut rng = StdRng::seed_from_u64(101);
    for _ in 0..25 {
        let n = rng.gen_range(1..=3);
        let (fragment, _) = common::random_fc_fragment(&mut rng, n, 3);
        let circuit = synthesize_fc(&fragment).unwrap();
        let v = common::random_state(&mut rng, n);
        let f_n = rng.gen_range(0.3..1.0);
        let profile = profile_fragment(&fragment, &circuit, &v, 2).unwrap();
        let var_psi = (profile.h2_exp - profile.mean * profile.mean).max(0.0);
        let formula = estimator_variance(var_psi, profile.h2_exp, profile.ssc, f_n).unwrap();
        let dense = dense_estimator_variance(&fragment, &circuit, &v, f_n);
        assert!((formula - dense).abs() < 1e-10, "formula {formula} vs dense {dense}");
    }
}

#[test]
fn variance_split_sums_to_total() {
    let mut rng = StdRng::seed_from_u64(103);
    for _ in 0..10 {
        let n = rng.gen_range(1..=3);
        let (fragment, _) = common::random_fc_fragment(&mut rng, n, 3);
        let v = common::random_state(&mut rng, n);
        let f_n = rng.gen_range(0.3..1.0);
        let (diag, offdiag, var_psi) = estimator_variance_split(&fragment, &v, f_n).unwrap();
        let h2 = shotplan_core::state::expectation_of_square(&fragment, &v).unwrap();
        let total = estimator_variance(var_psi, h2, fragment.sum_square_coeffs(), f_n).unwrap();
        assert!((diag + offdiag + var_psi - total).abs() < 1e-10);
    }

    // single-term fragment: the off-diagonal part is exactly zero
    let single = PauliSum::<f64>::parse("qubits: 2\n0.7 X0 Z1\n").unwrap();
    let v = Statevector::basis_state(2, 0);
    let (_, offdiag, _) = estimator_variance_split(&single, &v, 0.6).unwrap();
    assert!(offdiag.abs() < 1e-12);

    // F = 1: both noise parts are zero
    let (diag, offdiag, _) = estimator_variance_split(&single, &v, 1.0).unwrap();
    assert_eq!((diag, offdiag), (0.0, 0.0));
}

#[test]
fn total_measurements_formula() {
    let eps = 1e-3;
    // single fragment: v/ε²
    let (n_m, shares) = total_measurements(&[0.04], eps).unwrap();
    assert!((n_m - 0.04 / (eps * eps)).abs() < 1e-6);
    assert_eq!(shares, vec![1.0]);
    // two equal fragments: 4v/ε², even split
    let (n_m, shares) = total_measurements(&[0.04, 0.04], eps).unwrap();
    assert!((n_m - 4.0 * 0.04 / (eps * eps)).abs() < 1e-6);
    assert!((shares[0] - 0.5).abs() < 1e-12);
    // all-zero variances
    let (n_m, shares) = total_measurements(&[0.0, 0.0], eps).unwrap();
    assert_eq!(n_m, 0.0);
    assert_eq!(shares, vec![0.0, 0.0]);
    assert!(matches!(total_measurements(&[0.1], 0.0), Err(Error::InvalidEpsilon(_))));
}

#[test]
fn approx_measurements_p_formula() {
    // single fragment {a·P} at p = 0.5 → 2a²/ε²
    let h = PauliSum::<f64>::parse("qubits: 1\n0.7 Z0\n").unwrap();
    let fs = sorted_insertion(&h, GroupingMode::Fc).unwrap();
    let eps = 1e-3;
    let got = approx_measurements_p(&fs, 0.5, eps).unwrap();
    assert!((got - 2.0 * 0.49 / (eps * eps)).abs() < 1e-6);
    assert!(matches!(approx_measurements_p(&fs, 0.0, eps), Err(Error::InvalidFidelity(_))));

    // splitting a fixed Σa² across more fragments never decreases N_m^(p)
    let joined = PauliSum::<f64>::parse("qubits: 2\n0.6 Z0\n0.8 Z1\n").unwrap();
    let split = PauliSum::<f64>::parse("qubits: 2\n0.6 Z0\n0.8 X0\n").unwrap();
    let one_group = sorted_insertion(&joined, GroupingMode::Qwc).unwrap();
    let two_groups = sorted_insertion(&split, GroupingMode::Qwc).unwrap();
    assert_eq!(one_group.n_fragments(), 1);
    assert_eq!(two_groups.n_fragments(), 2);
    let merged = approx_measurements_p(&one_group, 0.5, eps).unwrap();
    let apart = approx_measurements_p(&two_groups, 0.5, eps).unwrap();
    assert!(apart >= merged - 1e-9);
}

#[test]
fn analyze_fragment_composes_the_pieces() {
    // fragment {Z₀} on |0⟩ under ideal fidelities: a definite outcome, no variance
    let z = PauliSum::<f64>::parse("qubits: 1\n1.0 Z0\n").unwrap();
    let circuit = synthesize_fc(&z).unwrap();
    let v = Statevector::basis_state(1, 0);
    let m = analyze_fragment(&z, &circuit, &v, &NoiseParams::ideal()).unwrap();
    assert_eq!(m.var_bar, 0.0);
    assert_eq!((m.g1, m.g2), (0, 0));
    assert_eq!(m.f_n, 1.0);
    assert!((m.mean - 1.0).abs() < 1e-12);
}

#[test]
fn profile_rejects_wrong_circuit() {
    // an empty circuit cannot diagonalize an X fragment
    let x = PauliSum::<f64>::parse("qubits: 1\n1.0 X0\n").unwrap();
    let noop = shotplan_core::clifford::CliffordCircuit::new(1);
    let v = Statevector::basis_state(1, 0);
    assert!(matches!(
        profile_fragment(&x, &noop, &v, 2),
        Err(Error::Integrity(_))
    ));
}

#[test]
fn metrics_from_profile_matches_analyze() {
    let mut rng = StdRng::seed_from_u64(107);
    let (fragment, _) = common::random_fc_fragment(&mut rng, 3, 4);
    let circuit = synthesize_fc(&fragment).unwrap();
    let v = common::random_state(&mut rng, 3);
    let np = NoiseParams::set_c(0.8);
    let via_profile =
        metrics_from_profile(&profile_fragment(&fragment, &circuit, &v, 2).unwrap(), &np).unwrap();
    let direct = analyze_fragment(&fragment, &circuit, &v, &np).unwrap();
    assert_eq!(via_profile, direct);
    // invariant: var_bar strictly above var_psi whenever F_n < 1 and ssc > 0
    assert!(via_profile.f_n < 1.0);
    assert!(via_profile.var_bar > via_profile.var_psi);
}
