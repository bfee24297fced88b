use std::path::PathBuf;
use std::process::{Command, Output};

use jjrb_core::catalog::{instantiate_named, nilpotent_module_instance};
use jjrb_core::{InstanceFile, Matrix, RbRepresentation};
use serde_json::Value;

fn jjrb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jjrb")).args(args).output().expect("binary runs")
}

fn write(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn named_file(id: &str, name: &str) -> String {
    let entry = jjrb_core::catalog::get(id).unwrap();
    let inst = entry.instances.iter().find(|i| i.name == name).unwrap();
    write(&format!("{name}.json"), &InstanceFile::from_rb(&instantiate_named(inst, id).unwrap()).to_json())
}

fn statuses(v: &Value) -> Vec<String> {
    v["results"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn valid_operator_passes() {
    let out = jjrb(&["catalog", "instantiate", "dim2", "--family", "antiderivation-example", "--params", "b=1,d=1"]);
    assert!(out.status.success());
    let path = write("dim2-family.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = jjrb(&["check", "--input", &path, "--what", "rb"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(statuses(&json(&out)).iter().all(|s| s == "PASS"));
}

#[test]
fn strict_mode_rejects_asymmetric_constants() {
    let path = write(
        "asym.json",
        r#"{"algebra": {"dim": 2, "products": [
            {"i": 1, "j": 2, "result": [{"k": 2, "c": "1"}]},
            {"i": 2, "j": 1, "result": [{"k": 1, "c": "1"}]}]}}"#,
    );
    assert_eq!(jjrb(&["check", "--input", &path, "--what", "algebra", "--strict"]).status.code(), Some(2));
    assert_ne!(jjrb(&["check", "--input", &path, "--what", "algebra"]).status.code(), Some(2));
}

#[test]
fn corrupted_module_operator_fails_with_witness() {
    let rb = instantiate_named(&jjrb_core::catalog::get("dim2").unwrap().instances[0], "dim2").unwrap();
    let good = RbRepresentation::adjoint(&rb).unwrap();
    let bad = RbRepresentation::new(good.rep().clone(), rb, Matrix::from_ints(&[&[1, 0], &[0, 1]])).unwrap();
    let path = write("corrupt-t.json", &InstanceFile::from_rb_rep(&bad).to_json());
    let out = jjrb(&["check", "--input", &path, "--what", "rbrep"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let compat = v["results"].as_array().unwrap().iter().find(|r| r["claim"] == "compatibility identity").unwrap();
    assert_eq!(compat["status"], "FAIL");
    assert_eq!(compat["witness"], "(e1, u1)");
    let out = jjrb(&["check", "--input", &path, "--what", "paired"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cohomology_degrees() {
    let path = named_file("dim3", "dim3-main");
    let out = jjrb(&["cohomology", "--input", &path, "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["dim_cocycles"], 4);
    assert_eq!(v["data"]["dim_coboundaries"], 3);
    assert_eq!(v["data"]["dim_cohomology"], 1);
    let out = jjrb(&["cohomology", "--input", &path, "--degree", "0"]);
    assert_eq!(json(&out)["data"]["dim_cohomology"], 0);
    let out = jjrb(&["cohomology", "--input", &path, "--degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degrees 0 and 1"));
}

#[test]
fn derived_construction() {
    let path = write(
        "derived.json",
        r#"{"algebra": {"dim": 2, "products": [{"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]}]},
            "weight": "0", "rb_operator": [["2", "0"], ["3", "1"]]}"#,
    );
    let out = jjrb(&["construct", "--input", &path, "--kind", "derived"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let products = &v["data"]["instance"]["algebra"]["products"];
    assert_eq!(products.as_array().unwrap().len(), 1);
    assert_eq!(products[0]["result"][0]["k"], 2);
    assert_eq!(products[0]["result"][0]["c"], "4");
}

#[test]
fn semidirect_and_hat_constructions() {
    let path = named_file("dim2", "dim2-antiderivation");
    let out = jjrb(&["construct", "--input", &path, "--kind", "semidirect"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"]["instance"]["algebra"]["dim"], 4);

    let path = write("nilpotent.json", &InstanceFile::from_rb_rep(&nilpotent_module_instance()).to_json());
    assert_eq!(jjrb(&["construct", "--input", &path, "--kind", "hat", "--sign", "1"]).status.code(), Some(0));
    let out = jjrb(&["construct", "--input", &path, "--kind", "hat", "--sign", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let rep = v["results"].as_array().unwrap().iter().find(|r| r["claim"] == "representation identity").unwrap();
    assert_eq!(rep["status"], "FAIL");
    assert_eq!(rep["witness"], "(e1, e1)");
}

#[test]
fn conjugate_and_scale() {
    let path = named_file("dim2", "dim2-antiderivation");
    assert_eq!(jjrb(&["construct", "--input", &path, "--kind", "scale", "--mu", "-1/2"]).status.code(), Some(0));
    assert_eq!(
        jjrb(&["construct", "--input", &path, "--kind", "conjugate", "--matrix", "2,0;0,4"]).status.code(),
        Some(0)
    );
    // Not multiplicative.
    assert_eq!(
        jjrb(&["construct", "--input", &path, "--kind", "conjugate", "--matrix", "1,0;0,2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        jjrb(&["construct", "--input", &path, "--kind", "conjugate", "--matrix", "1,x;0,2"]).status.code(),
        Some(2)
    );
    // Dual needs weight zero; this instance has it.
    assert_eq!(jjrb(&["construct", "--input", &path, "--kind", "dual"]).status.code(), Some(0));
}

#[test]
fn constraints_text() {
    let path = write(
        "dim2-alg.json",
        r#"{"algebra": {"dim": 2, "products": [{"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]}]}}"#,
    );
    let out = jjrb(&["constraints", "--input", &path, "--weight", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "1*x_{0,0}*x_{0,0} + -2*x_{0,0}*x_{1,1} + -1*x_{1,1}"), "{text}");
    assert_eq!(jjrb(&["constraints", "--input", &path]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let path = write("broken.json", "{\"algebra\": {\"dim\": 2,\n  \"products\": [}");
    let out = jjrb(&["check", "--input", &path, "--what", "algebra"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let alg = write("only-alg.json", r#"{"algebra": {"dim": 1}}"#);
    assert_eq!(jjrb(&["check", "--input", &alg, "--what", "rb"]).status.code(), Some(2));
    assert_eq!(jjrb(&["check", "--input", "/nonexistent/file.json", "--what", "rb"]).status.code(), Some(2));
    assert_eq!(jjrb(&["catalog", "show", "nope"]).status.code(), Some(2));
    assert_eq!(jjrb(&["catalog", "instantiate", "dim2", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(
        jjrb(&["catalog", "instantiate", "dim2", "--family", "zero-weight-B", "--params", "a1=0,a2=1"]).status.code(),
        Some(2)
    );
    assert_eq!(jjrb(&["check", "--what", "rb"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_jjrb"))
        .args(["catalog", "list"])
        .env("JJRB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_listing_and_show() {
    let out = jjrb(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    let out = Command::new(env!("CARGO_BIN_EXE_jjrb"))
        .args(["catalog", "show", "dim2"])
        .env("JJRB_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["families"].as_array().unwrap().len(), 4);
    assert_eq!(v["instances"][0]["expected"]["dim_cohomology"], 1);
}
