use std::io::Write;
use std::process::{Command, Output, Stdio};

use supertrop::format::parse_matrix;
use supertrop::oracle::{sample, Sample, SampleKind};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_supertrop"));
    c.env_remove("SUPERTROP_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn det_expand_example() {
    let o = run(&["det", "--engine", "expand", "--inline", "0 1; 2 0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3");
}

#[test]
fn det_from_file_and_stdin() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# a 2x2 matrix\n0 1\n2 0").unwrap();
    let o = run(&["det", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "3");

    let mut child = bin()
        .args(["det", "--engine", "assign", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1 2\n3 4\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "5g");
}

#[test]
fn singular_pinv_is_a_domain_error() {
    let o = run(&["pinv", "--inline", "1 2; 3 4"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular matrix: |A| = 5g"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&run(&["det", "--inline", "0 1/0"])), 2);
    assert_eq!(code(&run(&["det", "--inline", "0 1; 2"])), 2);
    assert_eq!(code(&run(&["det", "/nonexistent/file.mat"])), 2);
    assert_eq!(code(&run(&["check", "no-such-suite"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn frobenius_suite_passes() {
    let o = run(&["check", "frobenius", "--trials", "1000", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("frobenius: pass"));
}

#[test]
fn counterexample_exits_3() {
    let o = run(&["monic", "--inline", "0 0; 0 0"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("refuted"));
}

#[test]
fn json_output_is_versioned() {
    let o = run(&["--format", "json", "adj", "--inline", "0 1; 2 0"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["schema"], "supertrop/1");
    assert_eq!(doc["command"], "adj");
    assert_eq!(doc["result"]["rows"], serde_json::json!([["0", "1"], ["2", "0"]]));
}

#[test]
fn printed_matrices_reparse() {
    for index in 0..10 {
        let Sample::Matrix(a) = sample(SampleKind::Matrix, (3, 3), 21, index).unwrap() else {
            unreachable!()
        };
        let literal = supertrop::format::to_inline(&a);
        for cmd in ["adj", "close"] {
            let o = run(&[cmd, "--inline", &literal]);
            if code(&o) != 0 {
                continue;
            }
            let printed = stdout(&o);
            let back = parse_matrix(&printed).unwrap();
            assert_eq!(back.to_string(), printed);
        }
        let o = run(&["--format", "json", "adj", "--inline", &literal]);
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let back = parse_matrix(&doc["result"].to_string()).unwrap();
        assert_eq!(back, a.adjoint().unwrap());
    }
}

#[test]
fn engines_agree_through_the_cli() {
    for index in 0..12 {
        let Sample::Matrix(a) = sample(SampleKind::Matrix, (4, 4), 5, index).unwrap() else {
            unreachable!()
        };
        let literal = supertrop::format::to_inline(&a);
        let e = run(&["det", "--engine", "expand", "--inline", &literal]);
        let s = run(&["det", "--engine", "assign", "--inline", &literal]);
        assert_eq!(stdout(&e), stdout(&s), "{literal}");
    }
}

#[test]
fn seed_comes_from_the_environment() {
    let a = bin()
        .args(["--format", "json", "check", "decompose", "--trials", "5"])
        .env("SUPERTROP_SEED", "11")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["result"]["seed"], 11);
    let b = run(&["--format", "json", "check", "decompose", "--trials", "5", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bilinear_commands() {
    let o = run(&["gram", "--inline", "0 -inf; -inf 0", "--inline", "0 0; 1 -inf"]);
    assert_eq!(stdout(&o), "0g 1\n1 2");
    let o = run(&["classify", "--inline", "-inf 0; 0 -inf", "--inline", "0 -inf; 0 0"]);
    assert_eq!(stdout(&o), "-inf isotropic\n0g isotropic");
    let o = run(&["--format", "json", "strip", "--inline", "0 3g; 3g 0", "--inline", "0 -inf; -inf 0"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["result"], serde_json::json!({"kind": "interval", "lo": "-3", "hi": "3"}));
    let o = run(&["gs", "--step", "--inline", "0 -inf; -inf 0", "--inline", "0 -inf; 1 2"]);
    assert_eq!(stdout(&o), "1g 2");
    let o = run(&["symmetric", "--inline", "-inf 0; -inf -inf"]);
    assert_eq!(stdout(&o), "false");
    let o = run(&["decompose", "--inline", "-inf 0; 0 -inf", "--inline", "0 0; 0 0"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn quadratic_commands() {
    let o = run(&["quad", "eval", "--diagonal", "--inline", "0 2", "--inline", "1 1; -inf 0"]);
    assert_eq!(stdout(&o), "4\n2");
    let o = run(&["quad", "fromq", "--diagonal", "--inline", "0g 2"]);
    assert_eq!(stdout(&o), "0g 1g\n1g 2");
    let o = run(&["quad", "check", "--inline", "-inf 0; -inf -inf"]);
    assert_eq!(stdout(&o), "neither");
    let o = run(&["quad", "hyper", "0"]);
    assert_eq!(stdout(&o), "-inf 0\n0 -inf");
    assert_eq!(code(&run(&["quad", "hyper", "0g"])), 1);
    let o = run(&["quad", "ishyper", "--inline", "0g 5; 5 0g", "--inline", "0 -inf; -inf 0"]);
    assert_eq!(stdout(&o), "true");
    let o = run(&["quad", "osum", "--diagonal", "--inline", "0", "--inline", "2"]);
    assert_eq!(stdout(&o), "0 2");
    assert_eq!(code(&run(&["quad", "osum", "--inline", "0", "--inline", "2"])), 0);
}

#[test]
fn dual_and_rank_commands() {
    let o = run(&["dualgrid", "--inline", "2 -inf; -inf 3"]);
    assert_eq!(stdout(&o), "0 -inf\n-inf 0");
    let o = run(&["dualbase", "--inline", "2 -inf; -inf 3"]);
    assert_eq!(stdout(&o), "-2 -inf\n-inf -3");
    assert_eq!(stdout(&run(&["rank", "--inline", "1 2; 3 4"])), "1");
    assert_eq!(stdout(&run(&["indep", "--inline", "0 -inf; -inf 0"])), "true");
    assert_eq!(stdout(&run(&["onto", "--inline", "0 0; 0 0"])), "false");
    let o = run(&["quasiid", "--inline", "0 1; 2 0"]);
    assert!(stdout(&o).starts_with("I_A\n0 "));
}
