use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn fpg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fpg")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn certify_order_eight() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, _, _) = fpg(&["certify", "--p", "2", "--max-order", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = read(&out);
    let kinds: Vec<(String, String)> = r["body"]["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["name"].as_str().unwrap().to_string(), x["data"]["kind"].as_str().unwrap().to_string()))
        .collect();
    for (name, kind) in &kinds {
        match name.as_str() {
            "D8" | "Q8" => assert_ne!(kind, "none"),
            "C2xC4" | "C2^3" => assert_eq!(kind, "none"),
            _ => {}
        }
    }
    assert_eq!(r["body"]["format"], 1);
}

#[test]
fn lemmas_on_trivial_group() {
    let (code, stdout, _) = fpg(&["lemmas", "--catalog", "C1"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&stdout).unwrap();
    let ids = r["body"]["results"][0]["data"]["identities"].as_array().unwrap();
    assert!(ids.iter().all(|x| x["holds"] == true && x["left"] == 0 && x["right"] == 0));
}

#[test]
fn recover_emitted_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = dir.path().join("c4xd8.json");
    let out = dir.path().join("r.json");
    let (code, _, _) = fpg(&["catalog", "--emit-factorization", "C4,D8", "--out", fixture.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, err) = fpg(&["recover", "--input", fixture.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let r = read(&out);
    let d = &r["body"]["results"][0]["data"]["decomposition"];
    assert_eq!(d["b_invariants"], serde_json::json!([4]));
    assert_eq!(d["c_order"], 8);
    assert_eq!(d["verified"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"p": 2, "order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    assert_eq!(fpg(&["lemmas", "--input", bad.to_str().unwrap()]).0, 2);
    std::fs::write(&bad, "{\"p\": 2,\n \"order\": }").unwrap();
    let (code, _, err) = fpg(&["lemmas", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(fpg(&["oracle", "--catalog", "C2xD8", "--oracle-cap", "8"]).0, 3);
    assert_eq!(fpg(&["certify", "--p", "7"]).0, 2);

    // a factorization that is not a tensor factorization fails the check
    let not_fact = dir.path().join("c4.json");
    std::fs::write(
        &not_fact,
        r#"{"p": 2, "order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
            "factorization": {"B": [[1,0,0,0],[0,0,1,0]], "C": [[1,0,0,0],[0,0,1,0]]}}"#,
    )
    .unwrap();
    assert_eq!(fpg(&["recover", "--input", not_fact.to_str().unwrap()]).0, 1);
}

#[test]
fn catalog_listing() {
    let (code, stdout, _) = fpg(&["catalog", "--p", "3", "--max-order", "27"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(r["body"]["summary"]["groups"], 8);
    assert!(r["timing"]["total_ms"].is_number());
}
