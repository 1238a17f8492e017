//! End-to-end tests of the `banalg` binary: argument handling, stdin/file
//! input, JSON output shapes, seed resolution, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_banalg"));
    cmd.env_remove("BANALG_SEED");
    cmd
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn banalg");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for banalg")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "expected success, got {:?}\nstderr: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const T2_SPEC: &str = r#"{"kind":"upper_triangular","n":2}"#;
const T3_SPEC: &str = r#"{"kind":"upper_triangular","n":3}"#;

#[test]
fn construct_pipes_into_characters() {
    let constructed = bin()
        .args(["construct", "upper-triangular", "--n", "3"])
        .output()
        .expect("run construct");
    assert!(constructed.status.success());
    let algebra_json = String::from_utf8(constructed.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&algebra_json).unwrap();
    assert_eq!(v["dim"], 6);
    assert_eq!(v["labels"][0], "E11");

    let chars = run_with_stdin(&["characters"], &algebra_json);
    let v = stdout_json(&chars);
    assert_eq!(v["count"], 3);
    assert_eq!(v["characters"][0]["label"], "phi_1");
}

#[test]
fn dw_amen_on_t3_phi2_reports_the_diagonal_witness() {
    let out = run_with_stdin(&["dw-amen", "--phi", "phi_2"], T3_SPEC);
    let v = stdout_json(&out);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["phi"], "phi_2");
    // Minimum-norm witness is diag(1, 0, 1) on the basis E11..E33.
    let w = v["witness"].as_array().unwrap();
    assert_eq!(w.len(), 6);
    let entry = |i: usize| w[i][0].as_f64().unwrap();
    assert!((entry(0) - 1.0).abs() < 1e-8);
    assert!((entry(5) - 1.0).abs() < 1e-8);
    for i in 1..5 {
        assert!(entry(i).abs() < 1e-8);
    }
}

#[test]
fn dw_amen_zero_phi_on_the_complex_field_finds_the_unit() {
    let out = run_with_stdin(
        &["dw-amen", "--phi", "zero"],
        r#"{"kind":"complex_field"}"#,
    );
    let v = stdout_json(&out);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["phi"], "zero");
    let w = v["witness"].as_array().unwrap();
    assert!((w[0][0].as_f64().unwrap() - 1.0).abs() < 1e-8);
}

#[test]
fn characters_of_a_phi_is_a_singleton() {
    let out = run_with_stdin(
        &["characters"],
        r#"{"kind":"a_phi","phi":[[1,0],[0,0],[0,0],[0,0]]}"#,
    );
    let v = stdout_json(&out);
    assert_eq!(v["count"], 1);
}

#[test]
fn phi_amen_convention_flip_on_t2_phi2() {
    let right = run_with_stdin(
        &["phi-amen", "--phi", "phi_2", "--convention", "right"],
        T2_SPEC,
    );
    let v = stdout_json(&right);
    assert_eq!(v["decision"], "no");
    assert_eq!(v["convention"], "right");
    assert!(v["witness"].is_null());

    let left = run_with_stdin(
        &["phi-amen", "--phi", "phi_2", "--convention", "left"],
        T2_SPEC,
    );
    let v = stdout_json(&left);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["convention"], "left");

    // Default convention is left.
    let default = run_with_stdin(&["phi-amen", "--phi", "phi_2"], T2_SPEC);
    let v = stdout_json(&default);
    assert_eq!(v["convention"], "left");
}

#[test]
fn kernel_rid_on_t2_phi1_is_e22() {
    let out = run_with_stdin(&["kernel-rid", "--phi", "phi_1"], T2_SPEC);
    let v = stdout_json(&out);
    assert_eq!(v["decision"], "yes");
    let w = v["witness"].as_array().unwrap();
    assert!((w[2][0].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!(w[0][0].as_f64().unwrap().abs() < 1e-8);
    assert!(w[1][0].as_f64().unwrap().abs() < 1e-8);

    let no = run_with_stdin(&["kernel-rid", "--phi", "phi_2"], T2_SPEC);
    let v = stdout_json(&no);
    assert_eq!(v["decision"], "no");
}

#[test]
fn malformed_input_exits_2() {
    let out = run_with_stdin(&["characters"], "this is not json");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run_with_stdin(&["characters"], r#"{"dim":2}"#);
    assert_eq!(out.status.code(), Some(2));

    // Non-associative table.
    let out = run_with_stdin(
        &["characters"],
        r#"{"dim":2,"table":[
            [[[1,0],[0,0]],[[0,0],[1,0]]],
            [[[1,0],[0,0]],[[0,0],[0,0]]]]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_phi_selector_exits_2() {
    let out = run_with_stdin(&["dw-amen", "--phi", "phi_9"], T2_SPEC);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("phi_9"), "stderr was: {msg}");
}

#[test]
fn seed_flag_and_env_var_agree() {
    let flagged = run_with_stdin(&["characters", "--seed", "0x2A"], T2_SPEC);
    let via_env = {
        let mut child = bin()
            .args(["characters"])
            .env("BANALG_SEED", "42")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(T2_SPEC.as_bytes())
            .unwrap();
        child.wait_with_output().unwrap()
    };
    let a = stdout_json(&flagged);
    let b = stdout_json(&via_env);
    assert_eq!(a["seed"], 42);
    assert_eq!(a, b);

    // An explicit flag beats the environment.
    let mut child = bin()
        .args(["characters", "--seed", "7"])
        .env("BANALG_SEED", "42")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(T2_SPEC.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout_json(&out)["seed"], 7);
}

#[test]
fn verify_subcommand_reports_a_clean_corpus() {
    let out = bin().args(["verify"]).output().expect("run verify");
    let v = stdout_json(&out);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["fixtures"].as_u64().unwrap() >= 20);
    assert!(v["checks"].as_u64().unwrap() > 100);
}

#[test]
fn combine_glues_partial_identities_over_stdin() {
    let request = r#"{
        "algebra": {"kind": "direct_sum",
                    "a": {"kind": "upper_triangular", "n": 2},
                    "b": {"kind": "complex_field"}},
        "ideal": [[[1,0],[0,0],[0,0],[0,0]],
                  [[0,0],[1,0],[0,0],[0,0]],
                  [[0,0],[0,0],[1,0],[0,0]]],
        "e": [[1,0],[0,0],[1,0],[0,0]],
        "f": [[1,0],[0,0],[1,0],[1,0]]
    }"#;
    let out = run_with_stdin(&["combine"], request);
    let v = stdout_json(&out);
    // g = e + f - e f is the identity E11 + E22 + 1 of the direct sum.
    let g = v["g"].as_array().unwrap();
    let expect = [1.0, 0.0, 1.0, 1.0];
    for (slot, want) in g.iter().zip(expect) {
        assert!((slot[0].as_f64().unwrap() - want).abs() < 1e-8);
        assert!(slot[1].as_f64().unwrap().abs() < 1e-8);
    }
}

#[test]
fn extend_char_lifts_a_character_off_the_ideal() {
    let request = r#"{
        "algebra": {"kind": "direct_sum",
                    "a": {"kind": "upper_triangular", "n": 2},
                    "b": {"kind": "complex_field"}},
        "ideal": [[[1,0],[0,0],[0,0],[0,0]],
                  [[0,0],[1,0],[0,0],[0,0]],
                  [[0,0],[0,0],[1,0],[0,0]]],
        "phi_values": [[0,0],[0,0],[1,0]],
        "u": [[1,0],[0,0],[1,0],[0,0]]
    }"#;
    let out = run_with_stdin(&["extend-char"], request);
    let v = stdout_json(&out);
    let cov = v["covector"].as_array().unwrap();
    let expect = [0.0, 0.0, 1.0, 0.0];
    for (slot, want) in cov.iter().zip(expect) {
        assert!((slot[0].as_f64().unwrap() - want).abs() < 1e-8);
    }
    assert!(v["residual"].as_f64().unwrap() < 1e-8);

    // A right-but-not-two-sided identity of the ideal must be refused.
    let bad = request.replace(
        r#""u": [[1,0],[0,0],[1,0],[0,0]]"#,
        r#""u": [[1,0],[1,0],[1,0],[0,0]]"#,
    );
    let out = run_with_stdin(&["extend-char"], &bad);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_renders_human_readable_reports() {
    let out = run_with_stdin(&["dw-amen", "--phi", "phi_1", "--format", "text"], T2_SPEC);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("decision: yes"), "got: {text}");
    assert!(text.contains("witness:"), "got: {text}");
}

#[test]
fn shipped_t2_fixture_loads_and_round_trips() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/t2.json");
    let text = std::fs::read_to_string(path).expect("fixtures/t2.json is in-repo");

    let out = run_with_stdin(&["characters"], &text);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 2);

    // Loading the fixture and re-serializing reproduces it bit-for-bit.
    let fixture: serde_json::Value = serde_json::from_str(&text).unwrap();
    let constructed = bin()
        .args(["construct", "upper-triangular", "--n", "2"])
        .output()
        .unwrap();
    let emitted: serde_json::Value = serde_json::from_slice(&constructed.stdout).unwrap();
    assert_eq!(fixture, emitted);
}

#[test]
fn snake_case_constructor_names_are_accepted() {
    let out = bin()
        .args(["construct", "upper_triangular", "--n", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 6);

    let group = bin()
        .args(["construct", "group", "--cayley", "[[0]]"])
        .output()
        .unwrap();
    assert!(group.status.success());
    let v: serde_json::Value = serde_json::from_slice(&group.stdout).unwrap();
    assert_eq!(v["dim"], 1);
}

#[test]
fn file_input_matches_stdin_input() {
    let dir = std::env::temp_dir().join("banalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t2_spec.json");
    std::fs::write(&path, T2_SPEC).unwrap();

    let from_file = bin()
        .args(["characters", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    let from_stdin = run_with_stdin(&["characters"], T2_SPEC);
    assert_eq!(stdout_json(&from_file), stdout_json(&from_stdin));
}
