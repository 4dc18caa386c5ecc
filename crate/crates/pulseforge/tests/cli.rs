//! Contract tests for the `pulseforge` binary: exit codes, output files, and
//! byte-level reproducibility.

use std::path::Path;
use std::process::{Command, Output};

fn pulseforge(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_pulseforge"));
    command.args(args);
    for (key, value) in envs {
        command.env(key, value);
    }
    command.output().expect("binary runs")
}

fn read(path: impl AsRef<Path>) -> String {
    std::fs::read_to_string(path).expect("output file exists")
}

#[test]
fn search_converges_and_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    let args = |out: &Path| {
        vec![
            "search".to_string(),
            "--target".into(),
            "cnot".into(),
            "--qubits".into(),
            "2".into(),
            "--length".into(),
            "3".into(),
            "--seed".into(),
            "7".into(),
            "--out".into(),
            out.display().to_string(),
        ]
    };
    for out in [&out_a, &out_b] {
        let argv: Vec<String> = args(out);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let output = pulseforge(&argv, &[]);
        assert_eq!(
            output.status.code(),
            Some(0),
            "stderr: {}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
    assert_eq!(
        read(out_a.join("result.json")),
        read(out_b.join("result.json"))
    );
    assert_eq!(
        read(out_a.join("generations.log")),
        read(out_b.join("generations.log"))
    );

    let result: serde_json::Value = serde_json::from_str(&read(out_a.join("result.json"))).unwrap();
    assert_eq!(result["manifest"]["config"]["seed"], 7);
    assert_eq!(result["manifest"]["target"]["name"], "cnot");
    assert_eq!(result["result"]["converged"], true);
    assert!(result["manifest"].get("timestamps").is_none());

    // re-running from the manifest reproduces the files byte for byte
    let out_c = dir.path().join("c");
    let manifest_path = out_a.join("result.json");
    let output = pulseforge(
        &[
            "search",
            "--from-manifest",
            manifest_path.to_str().unwrap(),
            "--out",
            out_c.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        read(out_a.join("result.json")),
        read(out_c.join("result.json"))
    );
    assert_eq!(
        read(out_a.join("generations.log")),
        read(out_c.join("generations.log"))
    );
}

#[test]
fn search_results_do_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let out_one = dir.path().join("one");
    let out_two = dir.path().join("two");
    for (out, threads) in [(&out_one, "1"), (&out_two, "2")] {
        let output = pulseforge(
            &[
                "search",
                "--target",
                "cnot",
                "--qubits",
                "2",
                "--length",
                "3",
                "--seed",
                "5",
                "--out",
                out.to_str().unwrap(),
            ],
            &[("PULSEFORGE_THREADS", threads)],
        );
        assert_eq!(output.status.code(), Some(0));
    }
    assert_eq!(
        read(out_one.join("result.json")),
        read(out_two.join("result.json"))
    );
}

#[test]
fn exhausted_budget_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let output = pulseforge(
        &[
            "search",
            "--target",
            "cnot",
            "--qubits",
            "2",
            "--length",
            "3",
            "--seed",
            "1",
            "--gens",
            "2",
            "--tol",
            "1e-15",
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(output.status.code(), Some(2));
    let result: serde_json::Value =
        serde_json::from_str(&read(dir.path().join("result.json"))).unwrap();
    assert_eq!(result["result"]["converged"], false);
}

#[test]
fn verify_empty_sequence_against_cnot_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let sequence = dir.path().join("empty.seq");
    std::fs::write(&sequence, "").unwrap();
    let output = pulseforge(
        &[
            "verify",
            "--target",
            "cnot",
            "--sequence",
            sequence.to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(output.status.code(), Some(1));
    let document: serde_json::Value =
        serde_json::from_str(&read(dir.path().join("verification.json"))).unwrap();
    // the empty product is the identity: fitness 1 - |tr(cnot)|/4 = 0.5
    let fitness = document["report"]["fitness_phase_invariant"]
        .as_f64()
        .unwrap();
    assert!((fitness - 0.5).abs() < 1e-12);
    assert_eq!(document["report"]["pass"], false);
}

#[test]
fn verify_exact_sequence_passes_and_reruns_identically() {
    let dir = tempfile::tempdir().unwrap();
    let sequence = dir.path().join("cnot3.seq");
    std::fs::write(&sequence, "R zA 90\nR zxAB 270\nR xB 90\n").unwrap();
    let out_a = dir.path().join("a");
    let output = pulseforge(
        &[
            "verify",
            "--target",
            "cnot",
            "--sequence",
            sequence.to_str().unwrap(),
            "--out",
            out_a.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(
        output.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );

    let out_b = dir.path().join("b");
    let rerun = pulseforge(
        &[
            "verify",
            "--from-manifest",
            out_a.join("verification.json").to_str().unwrap(),
            "--out",
            out_b.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(rerun.status.code(), Some(0));
    assert_eq!(
        read(out_a.join("verification.json")),
        read(out_b.join("verification.json"))
    );
}

#[test]
fn replicate_writes_four_rows_and_exit_tracks_row_passes() {
    let dir = tempfile::tempdir().unwrap();
    let output = pulseforge(&["replicate", "--out", dir.path().to_str().unwrap()], &[]);
    let document: serde_json::Value =
        serde_json::from_str(&read(dir.path().join("replication.json"))).unwrap();
    let rows = document["report"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!(row["fitness_phase_invariant"].is_f64());
        assert!(row["convention"].is_string());
        assert!(row["pass"].is_boolean());
    }
    let all_pass = document["report"]["all_pass"].as_bool().unwrap();
    assert_eq!(output.status.code(), Some(if all_pass { 0 } else { 1 }));
    // the strict CNOT tier holds; the coarse published shor-core angles do not
    assert_eq!(rows[0]["pass"], true);
    assert_eq!(rows[1]["pass"], true);
    assert_eq!(rows[2]["pass"], false);
    assert_eq!(rows[3]["pass"], false);
}

#[test]
fn usage_errors_exit_sixty_four() {
    let unknown_flag = pulseforge(&["search", "--bogus"], &[]);
    assert_eq!(unknown_flag.status.code(), Some(64));
    let unknown_subcommand = pulseforge(&["transmogrify"], &[]);
    assert_eq!(unknown_subcommand.status.code(), Some(64));
    let bad_convention = pulseforge(
        &[
            "search",
            "--target",
            "cnot",
            "--qubits",
            "2",
            "--length",
            "3",
            "--convention",
            "9",
        ],
        &[],
    );
    assert_eq!(bad_convention.status.code(), Some(64));
    let unknown_target = pulseforge(
        &[
            "search", "--target", "toffoli", "--qubits", "3", "--length", "5",
        ],
        &[],
    );
    assert_eq!(unknown_target.status.code(), Some(64));
    let help = pulseforge(&["--help"], &[]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn config_violations_exit_sixty_five() {
    let dir = tempfile::tempdir().unwrap();
    let odd_population = pulseforge(
        &[
            "search",
            "--target",
            "cnot",
            "--qubits",
            "2",
            "--length",
            "3",
            "--pop",
            "3",
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(odd_population.status.code(), Some(65));
    let qubit_mismatch = pulseforge(
        &[
            "search",
            "--target",
            "cnot",
            "--qubits",
            "3",
            "--length",
            "3",
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(qubit_mismatch.status.code(), Some(65));
    let malformed_sequence = dir.path().join("bad.seq");
    std::fs::write(&malformed_sequence, "R zB ninety\n").unwrap();
    let bad_sequence = pulseforge(
        &[
            "verify",
            "--target",
            "cnot",
            "--sequence",
            malformed_sequence.to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(bad_sequence.status.code(), Some(65));
}

#[test]
fn missing_files_exit_sixty_six() {
    let missing_sequence = pulseforge(
        &[
            "verify",
            "--target",
            "cnot",
            "--sequence",
            "/nonexistent/path.seq",
        ],
        &[],
    );
    assert_eq!(missing_sequence.status.code(), Some(66));
    let missing_target = pulseforge(
        &[
            "search",
            "--target",
            "file:/nonexistent/gate.json",
            "--qubits",
            "2",
            "--length",
            "3",
        ],
        &[],
    );
    assert_eq!(missing_target.status.code(), Some(66));
}

#[test]
fn custom_target_files_work_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    // identity on one qubit in the documented JSON format
    let target_path = dir.path().join("identity.json");
    std::fs::write(
        &target_path,
        r#"{"name":"identity","qubits":1,"matrix":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}"#,
    )
    .unwrap();
    let sequence = dir.path().join("noop.seq");
    std::fs::write(&sequence, "R xA 0\n").unwrap();
    let target_arg = format!("file:{}", target_path.display());
    let output = pulseforge(
        &[
            "verify",
            "--target",
            &target_arg,
            "--sequence",
            sequence.to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(
        output.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
}
