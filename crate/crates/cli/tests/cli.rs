//! End-to-end tests driving the binary on the checked-in workspaces.

use std::path::PathBuf;
use std::process::{Command, Output};

fn workspace_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../workspaces")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

#[test]
fn tau_of_simple_prints_dims() {
    let ws = workspace_file("a2.json");
    let out = run(&["tau", "-w", ws.to_str().unwrap(), "-m", "S1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tau(S1) = module with dims {1:0, 2:1}"), "{}", stdout(&out));
}

#[test]
fn tau_works_over_a_prime_field() {
    let ws = workspace_file("a2.json");
    let out = run(&["tau", "-w", ws.to_str().unwrap(), "-m", "S1", "--field", "Fp:5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("{1:0, 2:1}"));
}

#[test]
fn hom_dimension_between_projectives() {
    let ws = workspace_file("a2.json");
    let out = run(&["hom", "-w", ws.to_str().unwrap(), "-m", "P2", "-m", "P1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim Hom(P2, P1) = 1"));
    let rev = run(&["hom", "-w", ws.to_str().unwrap(), "-m", "P1", "-m", "P2"]);
    assert!(stdout(&rev).contains("dim Hom(P1, P2) = 0"));
}

#[test]
fn maps_algebra_emits_expected_presentation_and_roundtrips() {
    let ws = workspace_file("a2.json");
    let out = run(&["maps-algebra", "-w", ws.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["quiver"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["quiver"]["arrows"].as_array().unwrap().len(), 5);
    assert_eq!(v["relations"].as_array().unwrap().len(), 2);
    // determinism: a second run is byte-identical
    let out2 = run(&["maps-algebra", "-w", ws.to_str().unwrap(), "--json"]);
    assert_eq!(out.stdout, out2.stdout);
    // the emitted artifact re-parses as a workspace
    let tmp = std::env::temp_dir().join("matcat_roundtrip_ws.json");
    std::fs::write(&tmp, &text).unwrap();
    let again = run(&["maps-algebra", "-w", tmp.to_str().unwrap(), "--json"]);
    assert_eq!(again.status.code(), Some(0), "{}", String::from_utf8_lossy(&again.stderr));
}

#[test]
fn maps_tau_reports_closed_form() {
    let ws = workspace_file("a2.json");
    let maps = workspace_file("a2-maps.json");
    let out = run(&[
        "maps-tau",
        "-w",
        ws.to_str().unwrap(),
        "--maps",
        maps.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["closed_form_certified"], serde_json::Value::Bool(true));
}

#[test]
fn ar_seq_then_verify_roundtrip() {
    let ws = workspace_file("a2.json");
    let seq = workspace_file("a2-seq.json");
    let out = run(&[
        "ar-seq",
        "-w",
        ws.to_str().unwrap(),
        "--seq",
        seq.to_str().unwrap(),
        "--variant",
        "1i",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let tmp = std::env::temp_dir().join("matcat_lifted_seq.json");
    std::fs::write(&tmp, stdout(&out)).unwrap();
    let verify = run(&[
        "verify-ar",
        "-w",
        ws.to_str().unwrap(),
        "--seq",
        tmp.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(0), "{}", String::from_utf8_lossy(&verify.stderr));
    assert!(stdout(&verify).contains("verified almost split"));
}

#[test]
fn all_four_variants_lift_and_are_deterministic() {
    let ws = workspace_file("a2.json");
    let seq = workspace_file("a2-seq.json");
    for variant in ["1i", "1ii", "2i", "2ii"] {
        let out = run(&[
            "ar-seq",
            "-w",
            ws.to_str().unwrap(),
            "--seq",
            seq.to_str().unwrap(),
            "--variant",
            variant,
            "--json",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "variant {variant}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let again = run(&[
            "ar-seq",
            "-w",
            ws.to_str().unwrap(),
            "--seq",
            seq.to_str().unwrap(),
            "--variant",
            variant,
            "--json",
        ]);
        assert_eq!(out.stdout, again.stdout, "variant {variant} output drifted");
    }
    let bad = run(&[
        "ar-seq",
        "-w",
        ws.to_str().unwrap(),
        "--seq",
        seq.to_str().unwrap(),
        "--variant",
        "3x",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_ar_rejects_split_sequence_with_section() {
    let ws = workspace_file("a2.json");
    let split = serde_json::json!({
        "left":   {"a1": "S1", "a0": "S1", "f": {"1": [["1"]]}},
        "middle": {"a1": "S1", "a0": {"dims": {"1": 1, "2": 1}}, "f": {"1": [["1"]]}},
        "right":  {"a1": {"dims": {}}, "a0": "S2", "f": {}},
        "j": {"h1": {"1": [["1"]]}, "h0": {"1": [["1"]]}},
        "p": {"h0": {"2": [["1"]]}}
    });
    let tmp = std::env::temp_dir().join("matcat_split_seq.json");
    std::fs::write(&tmp, serde_json::to_string(&split).unwrap()).unwrap();
    let out = run(&[
        "verify-ar",
        "-w",
        ws.to_str().unwrap(),
        "--seq",
        tmp.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("section found"), "{}", stdout(&out));
}

#[test]
fn recollement_check_passes_for_sink() {
    let ws = workspace_file("a2.json");
    let out = run(&["recollement-check", "-w", ws.to_str().unwrap(), "--sub", "B"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("ok"));
    let induced = run(&[
        "recollement-check",
        "-w",
        ws.to_str().unwrap(),
        "--sub",
        "B",
        "--induced",
        "--json",
    ]);
    assert_eq!(induced.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&induced)).unwrap();
    assert_eq!(v["all_passed"], serde_json::Value::Bool(true));
}

#[test]
fn approx_addg_certifies_and_epi_runs() {
    let ws = workspace_file("a2.json");
    let out = run(&[
        "approx",
        "-w",
        ws.to_str().unwrap(),
        "--kind",
        "addg",
        "-m",
        "S1",
        "--sub",
        "projs",
        "--direction",
        "right",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("certified"));
    let maps = workspace_file("a2-maps.json");
    let epi = run(&[
        "approx",
        "-w",
        ws.to_str().unwrap(),
        "--kind",
        "epi-left",
        "--maps",
        maps.to_str().unwrap(),
        "--direction",
        "left",
    ]);
    assert_eq!(epi.status.code(), Some(0), "{}", String::from_utf8_lossy(&epi.stderr));
}

#[test]
fn malformed_json_reports_position_and_exits_2() {
    let tmp = std::env::temp_dir().join("matcat_broken.json");
    std::fs::write(&tmp, "{\n  \"field\": {\"kind\": \"Q\"},,\n}").unwrap();
    let out = run(&["tau", "-w", tmp.to_str().unwrap(), "-m", "S1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "{err}");
}

#[test]
fn unknown_module_reports_name_and_exits_2() {
    let ws = workspace_file("a2.json");
    let out = run(&["tau", "-w", ws.to_str().unwrap(), "-m", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NOPE"));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 12);
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == serde_json::Value::Bool(true)));
}
