use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carrier-nerve")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn gen_to(dir: &Path, id: &str, name: &str) -> String {
    let out = run(&["gen", id]);
    assert_eq!(code(&out), 0);
    let p = dir.join(name);
    fs::write(&p, &out.stdout).unwrap();
    p.to_str().unwrap().to_owned()
}

fn assert_error(out: &Output) {
    assert_eq!(code(out), 3, "stdout: {}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(out);
    assert!(v["error"]["kind"].is_string());
    assert!(v["error"]["message"].is_string());
    assert!(!out.stderr.is_empty());
}

fn bettis(v: &Value) -> Vec<u64> {
    v["degrees"].as_array().unwrap().iter().map(|d| d["betti"].as_u64().unwrap()).collect()
}

#[test]
fn verify_three_arcs_holds() {
    let out = run(&["verify", "three_arcs"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "Holds");
    assert_eq!(v["quasi_iso"], "Yes");
    assert_eq!(bettis(&v["nerve_homology"]), vec![1, 1]);
}

#[test]
fn verify_two_arcs_fails() {
    let out = run(&["verify", "two_arcs", "--format", "compact"]);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "Fails");
    assert_eq!(v["quasi_iso"], "No");
    assert_eq!(bettis(&v["nerve_homology"]), vec![1, 0]);
}

#[test]
fn verify_with_degree_bound() {
    let out = run(&["verify", "bst_cover:torus7", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["degree_bound"], 1);
    assert!(v["simple_connectivity"].is_object());
}

#[test]
fn homology_of_generated_sphere() {
    let dir = TempDir::new().unwrap();
    let path = gen_to(dir.path(), "bd_delta3", "sphere.json");
    let out = run(&["homology", &path]);
    assert_eq!(code(&out), 0);
    assert_eq!(bettis(&stdout_json(&out)), vec![1, 0, 1]);

    let out = run(&["homology", &path, "--reduced", "--debug-matrices"]);
    let v = stdout_json(&out);
    assert_eq!(v["reduced"], true);
    assert_eq!(bettis(&v), vec![0, 0, 0, 1]);
    let m = &v["boundary_matrices"];
    assert!(m.as_array().unwrap().iter().any(|b| b["degree"] == 1 && b["rows"] == 4 && b["cols"] == 6));
}

#[test]
fn rp2_has_two_torsion() {
    let out = run(&["homology", "rp2_6", "--format", "compact"]);
    let v = stdout_json(&out);
    assert_eq!(v["degrees"][1]["torsion"], json!([2]));
    assert_eq!(bettis(&v), vec![1, 0, 0]);
}

#[test]
fn nerve_of_face_cover() {
    let out = run(&["nerve", "face_cover_bd_delta3"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);
    assert_eq!(v["witnesses"]["[f1,f2,f3]"], json!(["v0"]));

    let capped = stdout_json(&run(&["nerve", "face_cover_bd_delta3", "--max-dim", "1"]));
    assert_eq!(capped["dimension_cap"], 1);
    assert!(capped["facets"].as_array().unwrap().iter().all(|f| f.as_array().unwrap().len() <= 2));
}

#[test]
fn star_covers_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    for kind in ["open", "barycentric"] {
        let out = run(&["stars", "--type", kind, "cycle5"]);
        assert_eq!(code(&out), 0);
        let path = dir.path().join(format!("{kind}.json"));
        fs::write(&path, &out.stdout).unwrap();
        let nerve = run(&["nerve", path.to_str().unwrap()]);
        let iso = {
            let mut v = stdout_json(&nerve);
            v.as_object_mut().unwrap().remove("witnesses");
            let p = write(dir.path(), &format!("{kind}-nerve.json"), &v);
            run(&["iso", &p, "cycle5"])
        };
        assert_eq!(code(&iso), 0);
        assert_eq!(stdout_json(&iso)["isomorphic"], true);
    }
}

#[test]
fn check_cover_modes() {
    let regular = run(&["check-cover", "--mode", "regular", "three_arcs"]);
    assert_eq!(code(&regular), 0);
    assert_eq!(stdout_json(&regular)["overall"], "Holds");

    let fails = run(&["check-cover", "--mode", "weak", "two_arcs"]);
    assert_eq!(code(&fails), 1);

    let bounded = run(&["check-cover", "--mode", "n", "--n", "1", "three_arcs"]);
    assert_eq!(code(&bounded), 0);

    assert_error(&run(&["check-cover", "--mode", "n", "three_arcs"]));
}

#[test]
fn iso_distinguishes_cycles() {
    let out = run(&["iso", "cycle5", "cycle6"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["isomorphic"], false);
}

fn carrier_fixtures(dir: &Path) -> (String, String) {
    gen_to(dir, "three_arcs", "arcs.json");
    write(
        dir,
        "points.json",
        &json!({
            "complex": { "vertices": ["a", "b"], "facets": [["a"], ["b"]] },
            "kind": "closed",
            "pieces": { "A": { "facets": [["a"]] }, "B": { "facets": [["b"]] } }
        }),
    );
    let identity = write(
        dir,
        "identity.json",
        &json!({
            "domain": "arcs.json",
            "codomain": "arcs.json",
            "assignment": { "arc0": "arc0", "arc1": "arc1", "arc2": "arc2" }
        }),
    );
    let split = write(
        dir,
        "split.json",
        &json!({
            "domain": "arcs.json",
            "codomain": "points.json",
            "assignment": { "arc0": "A", "arc1": "B", "arc2": "A" }
        }),
    );
    (identity, split)
}

#[test]
fn carrier_validate_compose_invert() {
    let dir = TempDir::new().unwrap();
    let (identity, split) = carrier_fixtures(dir.path());

    let ok = run(&["carrier", "validate", &identity]);
    assert_eq!(code(&ok), 0);

    let bad = run(&["carrier", "validate", &split]);
    assert_eq!(code(&bad), 1);
    assert_eq!(stdout_json(&bad)["witness"], json!(["arc0", "arc1"]));

    let composed = run(&["carrier", "compose", &identity, &split]);
    assert_eq!(code(&composed), 0);
    let v = stdout_json(&composed);
    assert_eq!(v["assignment"]["arc1"], "B");
    assert_eq!(v["codomain"]["pieces"]["A"], json!({ "facets": [["a"]] }));

    let inverse = run(&["carrier", "invert", &identity]);
    assert_eq!(code(&inverse), 0);
    assert_eq!(stdout_json(&inverse)["assignment"]["arc2"], "arc2");
    assert_eq!(code(&run(&["carrier", "invert", &split])), 1);
}

#[test]
fn map_canonical_and_carried() {
    let dir = TempDir::new().unwrap();
    let (identity, _) = carrier_fixtures(dir.path());

    let canonical = run(&["map", "canonical", "three_arcs"]);
    assert_eq!(code(&canonical), 0);
    let h = stdout_json(&canonical);
    assert_eq!(h["vertex_map"]["b(v0,v1)"], "arc0");
    assert_eq!(h["vertex_map"]["b(v4)"], "arc0");

    let base = stdout_json(&run(&["gen", "three_arcs"]))["complex"].clone();
    let vertex_map: serde_json::Map<String, Value> =
        base["vertices"].as_array().unwrap().iter().map(|v| (v.as_str().unwrap().to_owned(), v.clone())).collect();
    let id_map = write(dir.path(), "id_map.json", &json!({ "source": base, "target": base, "vertex_map": vertex_map }));

    let carried = run(&["map", "check-carried", &id_map, &identity]);
    assert_eq!(code(&carried), 0);
    let v = stdout_json(&carried);
    assert_eq!(v["proxy_notes"], json!([]));

    let weak = run(&["map", "check-carried", &id_map, &identity, "--weak"]);
    assert_eq!(code(&weak), 0);
    assert_eq!(stdout_json(&weak)["proxy_notes"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["verify", "bst_cover:rp2_6"][..],
        &["nerve", "random_subcomplex_cover:7:4", "--format", "compact"],
        &["gen", "random_complex:3:7:0.5"],
        &["homology", "torus7", "--debug-matrices"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn generated_files_round_trip() {
    let dir = TempDir::new().unwrap();
    for id in ["torus7", "two_arcs", "random_subcomplex_cover:11:3", "st_cover:cycle4"] {
        let first = run(&["gen", id, "--format", "compact"]);
        let path = dir.path().join("x.json");
        fs::write(&path, &first.stdout).unwrap();
        let cmd = if stdout_json(&first).get("pieces").is_some() { "nerve" } else { "homology" };
        assert_eq!(code(&run(&[cmd, path.to_str().unwrap()])), 0, "{id}");
        let v = stdout_json(&first);
        assert_eq!(serde_json::to_string(&v).unwrap().into_bytes(), first.stdout.trim_ascii_end());
    }
}

#[test]
fn timestamps_are_opt_in() {
    assert!(stdout_json(&run(&["gen", "cycle3"])).get("generated_at").is_none());
    assert!(stdout_json(&run(&["gen", "cycle3", "--timestamps"]))["generated_at"].is_u64());
}

#[test]
fn malformed_inputs_exit_with_code_three() {
    let dir = TempDir::new().unwrap();
    assert_error(&run(&["gen", "torus7", "--bogus"]));
    assert_error(&run(&["frobnicate"]));
    assert_error(&run(&["gen", "no_such_instance"]));
    assert_error(&run(&["homology", dir.path().join("missing.json").to_str().unwrap()]));

    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{ \"vertices\": [").unwrap();
    assert_error(&run(&["homology", broken.to_str().unwrap()]));

    let unknown = write(dir.path(), "unknown.json", &json!({ "vertices": ["a"], "facets": [["a", "b"]] }));
    let out = run(&["homology", &unknown]);
    assert_error(&out);

    let extra = write(dir.path(), "extra.json", &json!({ "vertices": [], "facets": [], "oops": 1 }));
    assert_error(&run(&["homology", &extra]));

    assert_error(&run(&["nerve", "torus7"]));
    assert_error(&run(&["homology", "three_arcs"]));
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(String::from_utf8_lossy(&help.stdout).contains("check-cover"));
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["map", "--help"])), 0);
}
