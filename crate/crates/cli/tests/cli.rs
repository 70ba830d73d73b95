//! End-to-end checks of the `grover` binary: flag handling, exit codes,
//! output shapes.

use std::io::Write;
use std::process::{Command, Output};

fn grover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("stdout is JSON")
}

#[test]
fn run_exact_small_case() {
    let out = grover(&[
        "run", "--qubits", "2", "--marked", "3", "--iterations", "1", "--samples", "10", "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert_eq!(value["final_success_prob"], 1.0);
    assert_eq!(value["samples"].as_array().unwrap().len(), 10);
    assert!(value["samples"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s == 3));
}

#[test]
fn run_auto_random_marked_reaches_half() {
    let out = grover(&[
        "run", "--qubits", "10", "--marked", "random", "--iterations", "auto", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert!(value["final_success_prob"].as_f64().unwrap() >= 0.5);
}

#[test]
fn run_rejects_zero_qubits() {
    let out = grover(&["run", "--qubits", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));
}

#[test]
fn run_rejects_marked_out_of_range() {
    let out = grover(&["run", "--qubits", "2", "--marked", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_rejects_unparseable_flags() {
    let out = grover(&["run", "--qubits", "2", "--marked", "sometimes"]);
    assert_eq!(out.status.code(), Some(2));
    let out = grover(&["run", "--qubits", "2", "--iterations", "-3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_csv_needs_trace() {
    let out = grover(&["run", "--qubits", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--trace"));
}

#[test]
fn run_csv_trajectory_has_pinned_header_and_row_count() {
    let out = grover(&[
        "run", "--qubits", "3", "--marked", "5", "--iterations", "4", "--trace", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "j,marked_amp,unmarked_amp,c_scale,average_after_flip,success_prob"
    );
    assert_eq!(lines.len(), 1 + 4 + 1); // header + (iterations + 1) rows
}

#[test]
fn verify_passes_and_names_identities() {
    let out = grover(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["WW=I", "D=WRW", "D=-I+2P", "P^2=P", "D^2=I"] {
        assert!(text.contains(name), "missing {name} in table");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_corrupted_rotation_fails_naming_the_identity() {
    let out = grover(&["verify", "--max-qubits", "4", "--corrupt-r-sign"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("D=WRW"));
}

#[test]
fn verify_rejects_oversized_cap() {
    let out = grover(&["verify", "--max-qubits", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_table_shape_and_bounds() {
    let out = grover(&["compare", "--qubits", "6", "--trials", "500", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "N,quantum_iterations_auto,quantum_success_prob,classical_queries_for_half_success"
    );
    assert_eq!(lines.len(), 1 + 5); // one row per n in 2..=6
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        let states: f64 = fields[0].parse().unwrap();
        let iterations: f64 = fields[1].parse().unwrap();
        let success: f64 = fields[2].parse().unwrap();
        let bound = (std::f64::consts::FRAC_PI_4 * states.sqrt()).ceil() + 1.0;
        assert!(iterations <= bound);
        assert!(success >= 0.5);
    }
}

#[test]
fn directory_four_records() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\ngrace,555-0101\nalan,555-0102\nkurt,555-0103\n").unwrap();
    let path = file.path().to_str().unwrap();

    let out = grover(&["directory", "--file", path, "--name", "kurt", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert_eq!(value["found"], true);
    assert_eq!(value["number"], "555-0103");
    assert_eq!(value["success_prob"], 1.0);
    assert_eq!(value["classical_expected_queries"], 2.0);
}

#[test]
fn directory_handles_crlf() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\r\ngrace,555-0101\r\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = grover(&["directory", "--file", path, "--name", "grace", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    if value["found"] == true {
        assert_eq!(value["number"], "555-0101");
    }
}

#[test]
fn directory_errors_are_usage_errors() {
    let out = grover(&["directory", "--file", "/nonexistent/dir.csv", "--name", "x"]);
    assert_eq!(out.status.code(), Some(2));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\nno-comma-here\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = grover(&["directory", "--file", path, "--name", "ada"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\nada,555-0200\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = grover(&["directory", "--file", path, "--name", "ada"]);
    assert_eq!(out.status.code(), Some(2));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = grover(&["directory", "--file", path, "--name", "absent"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn directory_thousand_records() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for i in 0..1000 {
        writeln!(file, "name{i:04},555-{i:04}").unwrap();
    }
    let path = file.path().to_str().unwrap();
    let out = grover(&[
        "directory", "--file", path, "--name", "name0742", "--seed", "4", "--retries", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert!(value["success_prob"].as_f64().unwrap() >= 0.5);
    assert!(value["oracle_queries"].as_u64().unwrap() <= 805);
    assert_eq!(value["classical_expected_queries"], 500.0);
}

#[test]
fn retries_accumulate_queries_on_misses() {
    // One record pads to two states and the schedule is zero iterations, so
    // success probability is 0.5 per attempt; scan seeds until one misses
    // first and then hits.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "ada,555-0100\n").unwrap();
    let path = file.path().to_str().unwrap();
    let mut saw_retry = false;
    for seed in 0..20 {
        let out = grover(&[
            "directory", "--file", path, "--name", "ada", "--seed", &seed.to_string(),
            "--retries", "5",
        ]);
        assert_eq!(out.status.code(), Some(0));
        let value = json(&out);
        if value["found"] == true && value["attempts"].as_u64().unwrap() > 1 {
            saw_retry = true;
            break;
        }
    }
    assert!(saw_retry, "no seed in 0..20 exercised the retry path");
}
