//! End-to-end CLI checks: exit codes, determinism, and cross-subcommand
//! consistency on the small bundled fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::tempdir;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn shotplan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shotplan"))
        .args(args)
        .output()
        .expect("failed to spawn shotplan")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn plan_h2_is_deterministic_and_well_formed() {
    let h2 = fixture("h2_sto3g_jw.ham");
    let args = [h2.to_str().unwrap(), "--mode", "both"];
    let first = shotplan(&["plan", args[0], args[1], args[2]]);
    assert!(first.status.success(), "{}", stderr(&first));
    let second = shotplan(&["plan", args[0], args[1], args[2]]);
    assert_eq!(first.stdout, second.stdout, "plan output is not deterministic");

    let json: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["n_qubits"], 4);
    assert_eq!(json["seed"], 0x5eed);
    assert!(json["source_sha256"].as_str().unwrap().len() == 64);
    // default sweep: 3 presets × 3 p values × 2 modes
    assert_eq!(json["reports"].as_array().unwrap().len(), 18);
    assert_eq!(json["ratios"].as_array().unwrap().len(), 9);
    // ideal p=1 H₂ ratio is 1.00
    let r0 = &json["ratios"][0];
    assert_eq!(r0["preset"], "ideal");
    assert!((r0["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn plan_ratios_match_single_mode_runs() {
    let h2 = fixture("h2_sto3g_jw.ham");
    let path = h2.to_str().unwrap();
    let both = shotplan(&["plan", path, "--mode", "both", "--preset", "c", "--p", "0.8"]);
    let fc = shotplan(&["plan", path, "--mode", "fc", "--preset", "c", "--p", "0.8"]);
    let qwc = shotplan(&["plan", path, "--mode", "qwc", "--preset", "c", "--p", "0.8"]);
    for out in [&both, &fc, &qwc] {
        assert!(out.status.success(), "{}", stderr(out));
    }
    let vboth: serde_json::Value = serde_json::from_str(&stdout(&both)).unwrap();
    let vfc: serde_json::Value = serde_json::from_str(&stdout(&fc)).unwrap();
    let vqwc: serde_json::Value = serde_json::from_str(&stdout(&qwc)).unwrap();
    let n_fc = vfc["reports"][0]["report"]["n_m"].as_f64().unwrap();
    let n_qwc = vqwc["reports"][0]["report"]["n_m"].as_f64().unwrap();
    let ratio = vboth["ratios"][0]["ratio"].as_f64().unwrap();
    assert!((ratio - n_qwc / n_fc).abs() < 1e-9 * ratio);
}

#[test]
fn plan_custom_fidelities_and_output_file() {
    let dir = tempdir().unwrap();
    let out_path = dir.path().join("plan.json");
    let h2 = fixture("h2_sto3g_jw.ham");
    let out = shotplan(&[
        "plan",
        h2.to_str().unwrap(),
        "--mode",
        "fc",
        "--f1",
        "0.99",
        "--f2",
        "0.98",
        "--p",
        "1.0",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(json["reports"][0]["preset"], "custom");
    assert_eq!(json["reports"][0]["report"]["noise"]["f1"], 0.99);
}

#[test]
fn input_errors_exit_2() {
    // missing file
    let out = shotplan(&["plan", "no_such_file.ham"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));

    // malformed Hamiltonian names the line
    let dir = tempdir().unwrap();
    let bad = dir.path().join("bad.ham");
    std::fs::write(&bad, "qubits: 2\n0.5 Z0\nnot a term\n").unwrap();
    let out = shotplan(&["plan", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    // empty operator
    let empty = dir.path().join("empty.ham");
    std::fs::write(&empty, "qubits: 2\nconstant: 1.0\n").unwrap();
    let out = shotplan(&["group", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // invalid epsilon
    let h2 = fixture("h2_sto3g_jw.ham");
    let out = shotplan(&["plan", h2.to_str().unwrap(), "--epsilon", "0"]);
    assert_eq!(out.status.code(), Some(2));

    // qubit cap
    let out = shotplan(&["plan", h2.to_str().unwrap(), "--qubit-cap", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed FCIDUMP
    let bad_fci = dir.path().join("bad.fcidump");
    std::fs::write(&bad_fci, "this is not an fcidump\n").unwrap();
    let out = shotplan(&["ingest-fcidump", bad_fci.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_lists_fragments_with_invariants() {
    let dir = tempdir().unwrap();
    let toy = dir.path().join("toy.ham");
    std::fs::write(&toy, "qubits: 2\n0.3 Z0\n0.2 Z0 Z1\n").unwrap();
    let out = shotplan(&["group", toy.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    // all-Z toy → a single fragment row after the header
    assert_eq!(stdout(&out).lines().count(), 2);

    let h2o = fixture("h2o_sto3g_jw.ham");
    let fc = shotplan(&["group", h2o.to_str().unwrap(), "--mode", "fc", "--format", "csv"]);
    let qwc = shotplan(&["group", h2o.to_str().unwrap(), "--mode", "qwc", "--format", "csv"]);
    assert!(fc.status.success() && qwc.status.success());
    assert!(stdout(&qwc).lines().count() >= stdout(&fc).lines().count());
}

#[test]
fn synth_emits_gate_counts_and_validates_index() {
    let h2 = fixture("h2_sto3g_jw.ham");
    // QWC circuits never contain CNOTs
    for index in ["0", "1", "2"] {
        let out = shotplan(&["synth", h2.to_str().unwrap(), "--mode", "qwc", "--fragment", index]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.contains("G2 = 0"), "{text}");
        assert!(!text.contains("CNOT"));
    }
    // out-of-range fragment index is an input error
    let out = shotplan(&["synth", h2.to_str().unwrap(), "--fragment", "99"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn scaling_needs_three_distinct_sizes() {
    let h2 = fixture("h2_sto3g_jw.ham");
    let out = shotplan(&["scaling", h2.to_str().unwrap(), h2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let inputs: Vec<PathBuf> = ["h2_sto3g_jw.ham", "h2_631g_jw.ham", "lih_sto3g_jw.ham"]
        .iter()
        .map(|n| fixture(n))
        .collect();
    let mut args = vec!["scaling"];
    let paths: Vec<&str> = inputs.iter().map(|p| p.to_str().unwrap()).collect();
    args.extend(paths);
    let out = shotplan(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("# fit:"));
}

#[test]
fn ingest_round_trips_through_plan() {
    let dir = tempdir().unwrap();
    let ham = dir.path().join("h2_jw.ham");
    let out = shotplan(&[
        "ingest-fcidump",
        fixture("h2_sto3g.fcidump").to_str().unwrap(),
        "--mapping",
        "jw",
        "-o",
        ham.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&ham).unwrap();
    assert!(text.contains("# mapping: jw"));
    assert!(text.contains("qubits: 4"));
    // identical modulo the `# source:` path header to the bundled fixture
    let bundled = std::fs::read_to_string(fixture("h2_sto3g_jw.ham")).unwrap();
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("# source:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&text), strip(&bundled));

    let planned = shotplan(&["plan", ham.to_str().unwrap(), "--mode", "fc", "--preset", "ideal"]);
    assert!(planned.status.success(), "{}", stderr(&planned));
}

#[test]
fn simulate_is_seeded_and_capped() {
    let h2 = fixture("h2_sto3g_jw.ham");
    let args = [
        "simulate",
        h2.to_str().unwrap(),
        "--preset",
        "c",
        "--shots",
        "20000",
        "--seed",
        "42",
    ];
    let first = shotplan(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    let second = shotplan(&args);
    assert_eq!(first.stdout, second.stdout);

    let json: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    for fragment in json["fragments"].as_array().unwrap() {
        assert!(fragment["mean_z_score"].as_f64().unwrap() < 4.0);
        assert!(fragment["var_z_score"].as_f64().unwrap() < 4.0);
    }

    // --seed is mandatory
    let out = shotplan(&["simulate", h2.to_str().unwrap()]);
    assert!(!out.status.success());

    // width over the sampling cap is an input error
    let nh3 = fixture("nh3_sto3g_jw.ham");
    let out = shotplan(&["simulate", nh3.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}
