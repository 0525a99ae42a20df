//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn canon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poly_eulerian_4() {
    let out = canon(&["poly", "eulerian", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 + 11t + 11t^2 + t^3\n");
}

#[test]
fn poly_json_has_sorted_terms() {
    let out = canon(&["poly", "narayana", "3", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["family"], "narayana");
    assert_eq!(value["terms"][0]["u"], 3);
    assert_eq!(value["terms"][0]["coeff"], "1");
    assert_eq!(value["text"], "u^3 + t + 2tu + t^2");
}

#[test]
fn map_symmetry_involutions() {
    let word = "228183175437954696";
    for (verb, expected) in [
        ("psi", "694573691457318822"),
        ("big-phi", "281372581347549966"),
        ("big-phi-bar", "282811337574956496"),
        ("psi-bar", "696944557371823182"),
        ("f-sigma", "889596576423741231"),
        ("phi-sigma", "112324354657896789"),
    ] {
        let out = canon(&["map", verb, word]);
        assert!(out.status.success(), "{verb}");
        assert_eq!(stdout(&out), format!("{expected}\n"), "{verb}");
    }
}

#[test]
fn map_inverse_needs_sigma() {
    let out = canon(&["map", "phi-sigma-inv", "112324354657896789"]);
    assert_eq!(out.status.code(), Some(2));
    let out = canon(&[
        "map",
        "phi-sigma-inv",
        "112324354657896789",
        "--sigma",
        "281375496",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "228183175437954696\n");
}

#[test]
fn map_path_verbs() {
    let out = canon(&["map", "rho", "ENEN"]);
    assert_eq!(stdout(&out), "EENN\n");
    let out = canon(&["map", "lk", "EEENNN"]);
    assert_eq!(stdout(&out), "ENENEN\n");
}

#[test]
fn stats_text_and_json() {
    let out = canon(&["stats", "3532521414"]);
    assert_eq!(stdout(&out), "des=5 plat=0 wdes=5 descent_set={2,3,5,6,8}\n");
    let out = canon(&["stats", "3532521414", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["des"], 5);
    assert_eq!(value["wdes"], 5);
    assert_eq!(value["descent_set"], serde_json::json!([2, 3, 5, 6, 8]));
}

#[test]
fn check_exit_codes() {
    let out = canon(&["check", "nonnesting", "3532521414"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");
    let out = canon(&["check", "nonnesting", "1221"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");
    let out = canon(&["check", "avoids", "4431152253", "--pattern", "1212"]);
    assert_eq!(out.status.code(), Some(0));
    let out = canon(&["check", "contains", "4431152253", "--pattern", "1221"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_pass_and_fail_exit_codes() {
    let out = canon(&["verify", "main", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("main n=4: PASS"), "{text}");
    assert!(text.contains("56t^3"), "{text}");

    // The asymmetry check fails for k = 2, where the distribution is
    // palindromic.
    let out = canon(&["verify", "b_asymmetry", "--n", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));

    let out = canon(&["verify", "no-such-identity", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_range_runs_each_size() {
    let out = canon(&["verify", "eq6", "--n", "1..5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn cap_is_enforced() {
    let out = canon(&["verify", "main", "--n", "6", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the cap"), "{err}");
}

#[test]
fn enumerate_dyck_lexicographic() {
    let out = canon(&["enumerate", "dyck", "3"]);
    assert_eq!(stdout(&out), "EEENNN\nEENENN\nEENNEN\nENEENN\nENENEN\n");
}

#[test]
fn enumerate_canon_class() {
    let out = canon(&["enumerate", "canon-class", "2", "--k", "3", "--sigma", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"112212"));
}

#[test]
fn parse_errors_carry_positions() {
    let out = canon(&["stats", "12x"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 2"), "{err}");
}

#[test]
fn deterministic_output() {
    let a = canon(&["poly", "c", "4"]);
    let b = canon(&["poly", "c", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = canon(&["verify", "refined", "--n", "1..4", "--json"]);
    let b = canon(&["verify", "refined", "--n", "1..4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_writes_self_contained_svg() {
    let dir = std::env::temp_dir().join("canon-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("grid.svg");
    let out = canon(&[
        "render",
        "2531674",
        "EENNEEENEENNNN",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<svg xmlns="));
    assert!(svg.contains("stroke=\"red\""));
    assert!(svg.contains("stroke=\"blue\""));
    assert!(!svg.contains("magenta"));

    // With a companion path, the reflected magenta copy appears.
    let out_path2 = dir.join("grid2.svg");
    let out = canon(&[
        "render",
        "1234",
        "EENENN",
        "ENENEN",
        "--out",
        out_path2.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "length mismatch rejected");
    let out = canon(&[
        "render",
        "1234",
        "EENENENN",
        "ENENENEN",
        "--out",
        out_path2.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&out_path2).unwrap();
    assert!(svg.contains("magenta"));
}

#[test]
fn g_s_inverse_roundtrip_via_cli() {
    let out = canon(&["map", "g-s", "889596576423741231"]);
    assert_eq!(stdout(&out), "112324354657896789\n");
    let out = canon(&[
        "map",
        "g-s-inv",
        "112324354657896789",
        "--set",
        "2,5,6,8",
    ]);
    assert_eq!(stdout(&out), "889596576423741231\n");
}
