use std::path::PathBuf;

use ncquad::cli::run;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ncquad").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = call(&full);
    (code, serde_json::from_str(&out).expect("JSON output"))
}

#[test]
fn smooth_quadric_has_two_rulings() {
    let (code, v) = json(&["smooth", &data("comm4.json"), "--z", "x0*x3-x1*x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["smooth"], true);
    assert_eq!(v["ruling_count"], 2);
}

#[test]
fn cone_is_singular() {
    let (code, v) = json(&["smooth", &data("comm4.json"), "--z", "x0^2 + x1^2 - 3*x2^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["smooth"], false);
    assert_eq!(v["ruling_count"], 1);
}

#[test]
fn k0_suite_passes() {
    let (code, v) = json(&["k0", "suite"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["displayed_variant"]["vanishes"], false);
}

#[test]
fn k0_fat_point() {
    let (code, v) = json(&["k0", "fat", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["class"], serde_json::json!([0, 1, -1, 3]));
    assert_eq!(v["self_intersection"], -2);
}

#[test]
fn k0_projective_space_class() {
    let (code, v) = json(&["k0", "projn", "3", "line"]);
    assert_eq!(code, 0);
    assert_eq!(v["t_coeffs"], serde_json::json!([1, -2, 1, 0]));
    let (code, _, err) = call(&["k0", "projn", "3", "curve"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown class kind"));
}

#[test]
fn sklyanin_singular_labels() {
    let (code, v) = json(&["sklyanin", "--curve", "5,-5", "--tau", "-4,6", "singular"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 4);
    let (code, v) = json(&["sklyanin", "--curve", "5,-5", "--tau", "-4,6", "label", "-4,-6"]);
    assert_eq!(code, 0);
    assert_eq!(v["singular"], true);
}

#[test]
fn sklyanin_rulings() {
    let (_, v) = json(&["sklyanin", "--curve", "5,-5", "--tau", "-4,6", "ruling", "-4,6"]);
    assert_eq!(v["rulings"], 2);
    let (_, v) = json(&["sklyanin", "--curve", "5,-5", "--tau", "-4,6", "coplanar", "-4,6;-4,-6;0,0;0,0"]);
    assert_eq!(v["coplanar"], true);
}

#[test]
fn hilbert_and_center() {
    let (code, v) = json(&["hilbert", &data("sklyanin_3_5.json"), "--degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!([1, 4, 10, 20, 35, 56]));
    let (_, v) = json(&["center", &data("sklyanin_2_3.json")]);
    assert_eq!(v["dim"], 2);
}

#[test]
fn dual_output_round_trips() {
    let (code, out, _) = call(&["dual", &data("comm4.json")]);
    assert_eq!(code, 0);
    let d = ncquad::qalg::QuadraticPresentation::from_json(&out).unwrap();
    assert_eq!(d.relations().len(), 10);
}

#[test]
fn central_index_spec() {
    // #0 on the Sklyanin algebra picks a central element; it is regular
    let (code, v) = json(&["clifford", &data("sklyanin_2_3.json"), "--z", "#0"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 8);
    assert_eq!(v["associative"], true);
    let (code, _, _) = call(&["smooth", &data("sklyanin_2_3.json"), "--z", "#5"]);
    assert_eq!(code, 2);
}

#[test]
fn matrix_factorization_verdicts() {
    let (code, v) = json(&[
        "mf-verify",
        &data("comm4.json"),
        "--phi",
        &data("mf_phi.json"),
        "--psi",
        &data("mf_psi.json"),
        "--z",
        "x0*x3-x1*x2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
    assert_eq!(v["cokernel_series"], "2(1-t)^-3");
    let (_, v) = json(&[
        "mf-verify",
        &data("comm4.json"),
        "--phi",
        &data("mf_phi.json"),
        "--psi",
        &data("mf_psi_bad.json"),
        "--z",
        "x0*x3-x1*x2",
    ]);
    assert_eq!(v["verified"], false);
    assert_eq!(v["witness"]["product"], "phi*psi");
}

#[test]
fn exit_codes() {
    // z = 0 in S: hypothesis failure
    let (code, v) = json(&["smooth", &data("comm4.json"), "--z", "x0*x1 - x1*x0"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "hypothesis");
    // z not central in the free algebra
    let free = std::env::temp_dir().join("ncquad_free2.json");
    std::fs::write(&free, ncquad::qalg::QuadraticPresentation::free(2).to_json()).unwrap();
    let (code, _, err) = call(&["smooth", free.to_str().unwrap(), "--z", "x0*x1"]);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("central"));
    // parse and validation errors
    assert_eq!(call(&["smooth", &data("comm4.json"), "--z", "x0*"]).0, 2);
    assert_eq!(call(&["smooth", &data("comm4.json"), "--z", "x0", "--degree", "2"]).0, 2);
    assert_eq!(call(&["hilbert", "/nonexistent.json"]).0, 2);
    assert_eq!(call(&["sklyanin", "--curve", "5,5", "--tau", "O", "singular"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn deterministic_output() {
    let a = call(&["--json", "k0", "table"]);
    let b = call(&["--json", "k0", "table"]);
    assert_eq!(a, b);
}
