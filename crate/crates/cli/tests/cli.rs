use assert_cmd::Command;
use predicates::prelude::*;

fn liecm() -> Command {
    Command::cargo_bin("liecm").unwrap()
}

#[test]
fn validate_identity_sl2_is_clean() {
    liecm()
        .args(["validate", "catalog:XM_ID_SL2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"valid\": true"))
        .stdout(predicate::str::contains("\"violations\": []"));
}

#[test]
fn exact_seq_ab1_dims_and_defects() {
    let out = liecm()
        .args(["exact-seq", "catalog:XM_AB1"])
        .assert()
        .success();
    let text = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let nodes = v["results"]["nodes"].as_array().unwrap();
    let dims: Vec<u64> = nodes.iter().map(|n| n["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 1, 0]);
    assert!(nodes.iter().all(|n| n["defect"].as_u64().unwrap() == 0));
    assert_eq!(v["results"]["exact"], serde_json::Value::Bool(true));
}

#[test]
fn mutated_model_reports_jacobi_violation() {
    // dump sl2, then corrupt one bracket so Jacobi fails
    let dump = liecm()
        .args(["catalog", "dump", "XM_ID_SL2"])
        .assert()
        .success();
    let text = String::from_utf8(dump.get_output().stdout.clone()).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = &mut v["L0"]["brackets"][0]["value"];
    *entry = serde_json::json!(["1", "1", "1"]);
    liecm()
        .args(["validate", "-"])
        .write_stdin(v.to_string())
        .assert()
        .code(1)
        .stdout(predicate::str::contains("\"valid\": false"))
        .stdout(predicate::str::contains("jacobi"));
}

#[test]
fn dump_validate_roundtrip_all_catalog_entries() {
    for name in liecm::catalog::NAMES {
        let dump = liecm().args(["catalog", "dump", name]).assert().success();
        let text = String::from_utf8(dump.get_output().stdout.clone()).unwrap();
        liecm()
            .args(["validate", "-"])
            .write_stdin(text)
            .assert()
            .success()
            .stdout(predicate::str::contains("\"valid\": true"));
    }
}

#[test]
fn unknown_catalog_name_is_an_input_error() {
    liecm()
        .args(["six-term", "catalog:NO_SUCH"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("NO_SUCH"));
}

#[test]
fn field_override_applies() {
    liecm()
        .args(["homotopy", "catalog:XM_AB1", "--field", "Fp:2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("characteristic 2"));
    liecm()
        .args(["report", "catalog:XM_HEIS", "--field", "Fp:5"])
        .assert()
        .success();
}

#[test]
fn text_mode_renders_flat_keys() {
    liecm()
        .args(["six-term", "catalog:XM_ID_SL2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("exact: true"));
}
