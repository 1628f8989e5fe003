//! Exercises the binary surface: exit codes, file errors with line numbers,
//! JSON report round trips, and the file-based subcommands.

use std::process::Command;

use rptri_core::constructions::rational_icosahedron;
use rptri_core::formats;

fn rptri() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rptri"))
}

#[test]
fn equal_parameters_are_a_precondition_failure() {
    let out = rptri()
        .args(["verify-rp5", "--alpha", "3/7", "--beta", "3/7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("alpha < beta"), "stderr: {stderr}");
}

#[test]
fn malformed_points_file_is_a_parse_failure_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pts");
    std::fs::write(&path, "2 2\n1 2\n3/0 4\n").unwrap();
    let out = rptri()
        .args(["analyze", "--points"])
        .arg(&path)
        .args(["--threshold", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "stderr: {stderr}");
}

#[test]
fn analyze_thresholds_above_max_norm_give_empty_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ico.pts");
    std::fs::write(&path, formats::render_points(&rational_icosahedron())).unwrap();
    let json_path = dir.path().join("table.json");
    let out = rptri()
        .args(["analyze", "--points"])
        .arg(&path)
        .args(["--threshold", "4", "--chromatic", "--json"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let table: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let row = &table["rows"][0];
    assert_eq!(row["regular"], 0);
    assert_eq!(row["edges"], 0);
    assert_eq!(row["chromatic_exact"], 1);
}

#[test]
fn quotient_then_homology_of_the_icosahedron_is_a_projective_plane() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("ico.pts");
    std::fs::write(&points, formats::render_points(&rational_icosahedron())).unwrap();
    let facets = dir.path().join("quotient.fct");
    let out = rptri()
        .args(["quotient", "--points"])
        .arg(&points)
        .arg("--out")
        .arg(&facets)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("quotient: 6 vertices"), "stdout: {stdout}");
    assert!(stdout.contains("(6, 15, 10)"), "stdout: {stdout}");

    let out = rptri()
        .args(["homology", "--facets"])
        .arg(&facets)
        .arg("--integer")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("(1, 1, 1)"), "stdout: {stdout}");
    assert!(stdout.contains("(Z, Z/2, 0)"), "stdout: {stdout}");

    let out = rptri()
        .args(["automorphisms", "--facets"])
        .arg(&facets)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    // the 6-vertex projective plane is 2-transitive: A5 x Z2 has order 60
    assert!(stdout.contains("order: 60"), "stdout: {stdout}");
}

#[test]
fn verify_rp6_exit_code_distinguishes_check_failures() {
    // a 3-dimensional input runs the pipeline but fails the 7-dimensional
    // homology expectation: exit code 1, not a usage error
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("ico.pts");
    std::fs::write(&points, formats::render_points(&rational_icosahedron())).unwrap();
    let json_path = dir.path().join("report.json");
    let out = rptri()
        .args(["verify-rp6", "--points"])
        .arg(&points)
        .arg("--json")
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "fail");
    // the quotient itself works (6 vertices); only the homology row fails
    let checks = report["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "antipodal quotient" && c["status"] == "pass"));
    assert!(checks
        .iter()
        .any(|c| c["name"] == "quotient mod-2 homology" && c["status"] == "fail"));
}

#[test]
fn verify_rp5_rejects_unrelated_point_files() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("ico.pts");
    std::fs::write(&points, formats::render_points(&rational_icosahedron())).unwrap();
    let out = rptri()
        .args(["verify-rp5", "--points"])
        .arg(&points)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL"), "stdout: {stdout}");
    assert!(stdout.contains("frame alignment"), "stdout: {stdout}");
}

#[test]
fn rationalize_output_reparses_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("float.pts");
    std::fs::write(
        &input,
        "2 4\n0.49999999 0.74999999\n-0.33333333 0.2\n-0.5 -0.75\n0.33333334 -0.2\n",
    )
    .unwrap();
    let output = dir.path().join("exact.pts");
    let out = rptri()
        .args(["rationalize", "--points"])
        .arg(&input)
        .args(["--max-den", "6", "--out"])
        .arg(&output)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&output).unwrap();
    let config = formats::parse_points(&text).unwrap();
    assert_eq!(config.len(), 4);
    assert_eq!(config.point(0)[0], rptri_core::ratmath::rat(1, 2));
    assert_eq!(config.point(1)[0], rptri_core::ratmath::rat(-1, 3));
}

#[test]
fn search_is_reproducible_across_invocations() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.pts");
    let out2 = dir.path().join("b.pts");
    for out in [&out1, &out2] {
        let status = rptri()
            .args([
                "search", "--n", "8", "--dim", "3", "--seed", "5", "--iters", "400", "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(
        std::fs::read_to_string(&out1).unwrap(),
        std::fs::read_to_string(&out2).unwrap()
    );
}
