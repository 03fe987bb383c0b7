//! Command-line behavior: output shapes, exit codes, JSON agreement.

use std::path::PathBuf;

use simplicia::cli::run_from_args;
use simplicia::*;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let mut argv = vec!["simplicia"];
    argv.extend(args);
    let code = run_from_args(argv, &mut stdout, &mut stderr);
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn write_fixture(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn data_file(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

const TETRA: &str = "scx 1\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";

#[test]
fn chi_reports_the_alternating_count() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["chi", &file]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "2");

    let out = run(&["--json", "chi", &file]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["chi"], 2);
}

#[test]
fn chi_of_built_models_pipes_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torus.scx");
    let out = run(&["build", "torus", "-o", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let out = run(&["chi", path.to_str().unwrap()]);
    assert_eq!(out.stdout.trim(), "0");
}

#[test]
fn build_writes_scx_to_stdout() {
    let out = run(&["build", "sphere-tetra"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("scx 1\n"));
    let c = parse_scx(&out.stdout).unwrap();
    assert_eq!(c.counts(), CountVector(vec![4, 6, 4]));

    let json = run(&["--json", "build", "sphere-tetra"]);
    assert_eq!(json.code, 0);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["model"], "sphere-tetra");
    assert_eq!(v["chi"], 2);
    assert_eq!(v["counts"], serde_json::json!([4, 6, 4]));
    assert_eq!(parse_scx(v["scx"].as_str().unwrap()).unwrap(), c);
}

#[test]
fn validate_accepts_well_formed_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["validate", &file]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("ok"));
    assert!(out.stdout.contains("(4,6,4)"));
}

#[test]
fn classify_reports_surfaces() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["classify", &file]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("orientable, genus 0, chi 2"));
    assert!(out.stdout.contains("label: orientable genus-0 surface"));
}

#[test]
fn classify_klein_matches_expected_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.scx");
    run(&["build", "klein", "-o", path.to_str().unwrap()]);
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("non-orientable, genus 2, chi 0"));
}

#[test]
fn classify_non_surface_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "triangle.scx", "scx 1\n0 1 2\n");
    let out = run(&["classify", &file]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not a surface"));
}

#[test]
fn orientable_prints_witness_for_klein() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.scx");
    run(&["build", "klein", "-o", path.to_str().unwrap()]);
    let out = run(&["orientable", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("non-orientable"));
    assert!(out.stdout.contains("witness cycle:"));

    let torus = dir.path().join("torus.scx");
    run(&["build", "torus", "-o", torus.to_str().unwrap()]);
    let out = run(&["orientable", torus.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "orientable");
}

#[test]
fn reduce_trace_ends_with_residual_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["reduce", &file, "--trace"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("seed"));
    assert!(out.stdout.trim_end().ends_with("residual 3 3 1, total chi 2"));

    let torus = dir.path().join("torus.scx");
    run(&["build", "torus", "-o", torus.to_str().unwrap()]);
    let out = run(&["reduce", torus.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("total chi 0"));
}

#[test]
fn reduce_accepts_an_explicit_seed() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["reduce", &file, "--trace", "--seed", "1,2,3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("(1,2,3)"));

    let out = run(&["reduce", &file, "--seed", "1,2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn reduce_refuses_pseudo_surfaces() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pinched.scx");
    run(&["build", "pinched-torus", "-o", path.to_str().unwrap()]);
    let out = run(&["reduce", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not a closed surface"));
}

#[test]
fn connect_sum_of_two_tori() {
    let dir = tempfile::tempdir().unwrap();
    let torus = dir.path().join("torus.scx");
    run(&["build", "torus", "-o", torus.to_str().unwrap()]);
    let out = run(&[
        "connect-sum",
        torus.to_str().unwrap(),
        torus.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    let c = parse_scx(&out.stdout).unwrap();
    assert_eq!(c.euler_characteristic().unwrap(), -2);
}

#[test]
fn off_ingestion_by_extension_and_flag() {
    let cube = data_file("cube.off");
    let out = run(&["chi", &cube]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "2");

    // same content under a neutral extension needs --format
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(&cube).unwrap();
    let renamed = write_fixture(&dir, "cube.txt", &text);
    let out = run(&["chi", &renamed]);
    assert_eq!(out.code, 2, "sniffed as SCX, must fail to parse");
    let out = run(&["--format", "off", "chi", &renamed]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "2");
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();

    let bad_header = write_fixture(&dir, "bad.scx", "simplicial 1\n0 1 2\n");
    assert_eq!(run(&["chi", &bad_header]).code, 2);

    let degenerate = write_fixture(&dir, "degen.scx", "scx 1\n0 1 1\n");
    let out = run(&["chi", &degenerate]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"));

    let duplicate = write_fixture(&dir, "dup.scx", "scx 1\n0 1 2\n2 1 0\n");
    assert_eq!(run(&["chi", &duplicate]).code, 2);

    let bad_off = write_fixture(&dir, "bad.off", "OFF\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 9\n");
    let out = run(&["chi", &bad_off]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("out of range"));

    assert_eq!(run(&["build", "dodecahedron"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["chi", "/nonexistent/file.scx"]).code, 2);
}

#[test]
fn json_and_human_output_agree_on_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    for (m, _) in model_catalog() {
        let path = dir.path().join(format!("{m}.scx"));
        let path = path.to_str().unwrap();
        assert_eq!(run(&["build", &m.to_string(), "-o", path]).code, 0);

        let human = run(&["classify", path]);
        let json = run(&["--json", "classify", path]);
        assert_eq!(human.code, json.code, "{m}");
        let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();

        // the JSON document mirrors the library report field by field
        let report = classify(&build(&m).unwrap()).unwrap();
        assert_eq!(v, serde_json::to_value(&report).unwrap(), "{m}");

        // and the human text shows the same values
        assert!(human.stdout.contains(&format!("chi {}", report.chi)), "{m}");
        assert!(
            human.stdout.contains(&format!("label: {}", report.label)),
            "{m}"
        );
        if let Some(g) = report.genus {
            assert!(human.stdout.contains(&format!("genus {g}")), "{m}");
        }
        match report.orientable {
            Some(true) => assert!(human.stdout.contains("orientable"), "{m}"),
            Some(false) => assert!(human.stdout.contains("non-orientable"), "{m}"),
            None => {}
        }

        // chi agrees across the two modes as well
        let human_chi = run(&["chi", path]);
        let json_chi = run(&["--json", "chi", path]);
        let v: serde_json::Value = serde_json::from_str(&json_chi.stdout).unwrap();
        assert_eq!(human_chi.stdout.trim(), v["chi"].to_string(), "{m}");
    }
}

#[test]
fn json_reduce_mirrors_the_trace() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_fixture(&dir, "tetra.scx", TETRA);
    let out = run(&["--json", "reduce", &file]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["total_chi"], 2);
    assert_eq!(v["residual_chi"], 1);
    assert_eq!(v["residual_counts"], serde_json::json!([3, 3, 1]));
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    assert_eq!(v["steps"][0]["kind"], "Seed");
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("chi"));
    assert!(out.stdout.contains("connect-sum"));
}
