// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::process::Command;

use bfc_cli::report::{AnfReport, CensusReport, SpectrumReport, VcReport};
use bfc_cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use bfc_core::census::SuiteReport;
use bfc_core::measures::MeasureReport;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bfc_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bfc").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn bfc(args: &[&str]) -> Outcome {
    bfc_with_stdin(args, "")
}

#[test]
fn census_rows() {
    let expected = ["1 4 3 3", "2 16 9 11", "3 256 55 83", "4 65536 633 2491"];
    for (n, row) in (1..=4).zip(expected) {
        let o = bfc(&["census", "--n", &n.to_string()]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert_eq!(o.stdout.lines().nth(1), Some(row));
    }
    let o = bfc(&["census", "--n", "5"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn census_threads_do_not_change_output() {
    let one = bfc(&["census", "--n", "4", "--threads", "1", "--json"]);
    let four = bfc(&["census", "--n", "4", "--threads", "4", "--json"]);
    assert_eq!(one.code, EXIT_OK);
    assert_eq!(one.stdout, four.stdout);
    let r: CensusReport = serde_json::from_str(&one.stdout).unwrap();
    assert_eq!((r.deg_equality_count, r.f2_equality_count), (633, 2491));
    assert_eq!(
        bfc(&["census", "--n", "2", "--threads", "0"]).code,
        EXIT_USAGE
    );
}

#[test]
fn census_list_matches_counts() {
    let o = bfc(&["census", "--n", "3", "--list", "--json"]);
    let r: CensusReport = serde_json::from_str(&o.stdout).unwrap();
    let lists = r.lists.unwrap();
    assert_eq!(lists.deg.len(), 55);
    assert_eq!(lists.f2.len(), 83);
    let text = bfc(&["census", "--n", "3", "--list"]).stdout;
    assert_eq!(text.lines().filter(|l| l.starts_with("deg ")).count(), 55);
    assert_eq!(text.lines().filter(|l| l.starts_with("f2 ")).count(), 83);
}

#[test]
fn zero_function_measures_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.bft");
    fs::write(&path, "3\n00000000\n").unwrap();
    let o = bfc(&["measures", "--input", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("zero"), "{}", o.stderr);
    // Sensitivity alone is defined for the zero function.
    let o = bfc(&["measures", "--input", path.to_str().unwrap(), "--set", "s"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
}

#[test]
fn verify_exhaustive_passes() {
    let o = bfc(&["verify", "--n", "3", "--mode", "exhaustive"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o.stdout.ends_with("result: pass\n"));
}

#[test]
fn verify_sampled_reports_skipped_caps() {
    let o = bfc(&[
        "verify", "--n", "10", "--mode", "sampled", "--trials", "5", "--seed", "3", "--json",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let r: SuiteReport = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(r.trials, 10);
    let c = r.checks.iter().find(|c| c.name == "vc+c>=n").unwrap();
    assert_eq!((c.passed, c.skipped), (0, 10));
    assert!(!r.notes.is_empty());
}

#[test]
fn malformed_input_reports_location() {
    let o = bfc_with_stdin(&["vc"], "2\n01x1\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(
        o.stderr.contains("line 2") && o.stderr.contains("column 3"),
        "{}",
        o.stderr
    );
    let o = bfc_with_stdin(&["vc"], "3\n0101\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    let o = bfc(&["vc", "--input", "/nonexistent/f.bft"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert_eq!(bfc(&["spectrum", "--frobnicate"]).code, EXIT_USAGE);
    assert_eq!(bfc(&["nonsense"]).code, EXIT_USAGE);
}

#[test]
fn max_n_caps_inputs() {
    let o = bfc_with_stdin(&["anf", "--max-n", "2"], "3\n00000001\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--max-n"), "{}", o.stderr);
}

#[test]
fn spectrum_header_and_lines() {
    let o = bfc_with_stdin(&["spectrum"], "2\n0001\n");
    assert_eq!(o.stdout, "n 2 scale 4\n0 1\n1 -1\n2 -1\n3 1\n");
    let j = bfc_with_stdin(&["spectrum", "--json", "--nonzero"], "supp 2\n0\n");
    let r: SpectrumReport = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(r.coefficients.len(), 4);
    assert!(r.coefficients.iter().all(|c| c.coeff == 1));
}

#[test]
fn anf_and_degree() {
    let o = bfc_with_stdin(&["anf"], "2\n0110\n");
    assert_eq!(o.stdout, "1\n2\n");
    let o = bfc_with_stdin(&["anf", "--degree-only"], "2\n0001\n");
    assert_eq!(o.stdout, "2\n");
    let o = bfc_with_stdin(&["anf", "--json"], "2\n0000\n");
    let r: AnfReport = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!((r.degree, r.monomials.len()), (None, 0));
}

#[test]
fn example_and_counterexample_through_pipes() {
    let ex = bfc(&["construct", "example-n4"]).stdout;
    assert_eq!(ex, "4\n0111010000101110\n");
    let v = bfc_with_stdin(&["vc", "--witness", "--json"], &ex);
    let r: VcReport = serde_json::from_str(&v.stdout).unwrap();
    assert_eq!(r.vc, 2);
    assert_eq!(r.witness.unwrap().realizers().len(), 4);

    let cx = bfc(&["construct", "counterexample15"]).stdout;
    let m = bfc_with_stdin(&["measures", "--set", "vc,s", "--json"], &cx);
    assert_eq!(m.code, EXIT_OK);
    let r: MeasureReport = serde_json::from_str(&m.stdout).unwrap();
    assert_eq!((r.measures["vc"], r.measures["s"]), (7, 7));
    let conj = r.inequality("vc+s>=n").unwrap();
    assert!(!conj.holds);
    assert!(r.inequality("2vc+s>=n").unwrap().holds);
}

#[test]
fn design_check_failure_exits_one_with_violation() {
    // supp = {∅} has an odd containment count at ∅.
    let o = bfc_with_stdin(
        &["design-check", "--d", "0", "--condition", "ii"],
        "2\n1000\n",
    );
    assert_eq!(o.code, EXIT_FAILURE);
    assert!(o.stdout.starts_with("violated"), "{}", o.stdout);
    let parity = bfc_with_stdin(
        &["design-check", "--d", "1", "--condition", "disjoint"],
        "3\n01101001\n",
    );
    assert_eq!(parity.code, EXIT_OK, "{}", parity.stdout);
}

#[test]
fn extract_shattered_from_parity() {
    // x1 xor x2 xor x3 has F2-degree 1, so its support is a null 1-design.
    let o = bfc_with_stdin(&["extract-shattered", "--d", "1"], "3\n01101001\n");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(
        o.stdout.starts_with("shattered {1,2} mask 3\n"),
        "{}",
        o.stdout
    );
    let o = bfc_with_stdin(&["extract-shattered", "--d", "1"], "2\n0001\n");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn construct_writes_files_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.bft");
    let o = bfc(&[
        "construct",
        "subcube",
        "--n",
        "3",
        "--fix",
        "1=1,3=0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(fs::read_to_string(&path).unwrap(), "3\n01010000\n");
    assert_eq!(
        bfc(&["construct", "subcube", "--n", "3", "--fix", "4=1"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        bfc(&["construct", "random", "--n", "4", "--p", "1.5"]).code,
        EXIT_USAGE
    );
    let a = bfc(&[
        "construct",
        "random",
        "--n",
        "8",
        "--p",
        "0.5",
        "--seed",
        "1",
    ]);
    let b = bfc(&[
        "construct",
        "random",
        "--n",
        "8",
        "--p",
        "0.5",
        "--seed",
        "1",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(
        a.stdout,
        bfc(&["construct", "random", "--n", "8", "--seed", "2"]).stdout
    );
}

#[test]
fn json_round_trips_and_is_byte_identical() {
    let ex = bfc(&["construct", "example-n4"]).stdout;
    fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(json: &str) {
        let value: T = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", json);
    }
    for args in [
        vec!["measures", "--json"],
        vec!["vc", "--witness", "--json"],
        vec!["spectrum", "--json"],
        vec!["anf", "--json"],
    ] {
        let a = bfc_with_stdin(&args, &ex).stdout;
        assert_eq!(a, bfc_with_stdin(&args, &ex).stdout, "{args:?}");
        match args[0] {
            "measures" => round_trip::<MeasureReport>(&a),
            "vc" => round_trip::<VcReport>(&a),
            "spectrum" => round_trip::<SpectrumReport>(&a),
            _ => round_trip::<AnfReport>(&a),
        }
    }
    let m = bfc_with_stdin(&["measures", "--json"], &ex).stdout;
    let r: MeasureReport = serde_json::from_str(&m).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", m);

    let s = bfc(&[
        "verify", "--n", "8", "--mode", "sampled", "--trials", "10", "--seed", "9", "--json",
    ])
    .stdout;
    let again = bfc(&[
        "verify",
        "--n",
        "8",
        "--mode",
        "sampled",
        "--trials",
        "10",
        "--seed",
        "9",
        "--json",
        "--threads",
        "3",
    ])
    .stdout;
    assert_eq!(s, again);
    let r: SuiteReport = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", s);
}

#[test]
fn binary_exit_codes_and_env_threads() {
    let exe = env!("CARGO_BIN_EXE_bfc");
    let out = Command::new(exe)
        .args(["census", "--n", "4"])
        .env("BFC_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("4 65536 633 2491"));

    let out = Command::new(exe)
        .args(["census", "--n", "2"])
        .env("BFC_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.bft");
    fs::write(&zero, "2\n0000\n").unwrap();
    let out = Command::new(exe)
        .args(["measures", "--input"])
        .arg(&zero)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero"));

    let out = Command::new(exe)
        .args(["verify", "--n", "3", "--mode", "exhaustive"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(exe).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
