use std::path::PathBuf;
use std::process::Command;

use klcat_cli::output::Payload;
use klcat_cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn klcat(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["klcat"];
    argv.extend_from_slice(args);
    let o = run(argv);
    (o.code, String::from_utf8(o.stdout).unwrap(), o.stderr)
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = klcat(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

#[test]
fn kl_pair_example() {
    let (code, v) = json(&["kl", "pair", "--type", "A3", "--x", "2", "--y", "2 1 3 2"]);
    assert_eq!(code, 0);
    let row = &v["payload"]["rows"][0];
    assert_eq!(row[2]["coeffs"], serde_json::json!([1, 1]));
    assert_eq!(row[3], 1);
    let (_, v) = json(&["kl", "pair", "--type", "A2", "--x", "e", "--y", "1,2,1"]);
    assert_eq!(v["payload"]["rows"][0][2]["coeffs"], serde_json::json!([1]));
}

#[test]
fn verify_thm4_a2() {
    let (code, v) = json(&["verify", "--suite", "thm4", "--type", "A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["passed"], true);
    let (code, _) = json(&["verify", "--type", "B2"]);
    assert_eq!(code, 0);
}

#[test]
fn algebra_analyze_sl2() {
    let f = data("sl2.json");
    let (code, v) = json(&["algebra", "analyze", "--file", &f, "--conjectures", "1,2,3,4,5"]);
    assert_eq!(code, 0);
    let statuses: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses, vec!["pass"; 5]);
    assert_eq!(v["info"]["dimension"], 5);
    assert_eq!(v["info"]["projectiveDimensions"], serde_json::json!([1, 2]));
}

#[test]
fn algebra_analyze_flags_truncation() {
    let (code, v) = json(&["algebra", "analyze", "--file", &data("loop_x2.json"), "--max-resolution", "6"]);
    assert_eq!(code, 3);
    assert_eq!(v["info"]["applicable"], false);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "inapplicable"));
    let (code, _) = json(&["algebra", "analyze", "--file", &data("semisimple.json")]);
    assert_eq!(code, 0);
}

#[test]
fn hc_eval_sample() {
    let (code, v) = json(&["hc", "eval", "--file", &data("klv_sl2r.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["warnings"], serde_json::json!([]));
    assert_eq!(v["payload"]["entries"][2][2], serde_json::json!({"minDeg": 0, "coeffs": [1, 0, 1]}));
}

#[test]
fn csv_and_json_encode_the_same_payload() {
    let sl2 = data("sl2.json");
    let klv = data("klv_sl2r.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["group", "enumerate", "--type", "B2"],
        vec!["kl", "table", "--type", "B3"],
        vec!["kl", "pair", "--type", "A3", "--x", "2", "--y", "2 1 3 2"],
        vec!["delorme", "table", "--type", "G2"],
        vec!["characters", "--type", "A3"],
        vec!["characters", "--inverse", "--type", "A3"],
        vec!["ext-ll", "--type", "A2"],
        vec!["verify", "--type", "A2"],
        vec!["algebra", "analyze", "--file", &sl2],
        vec!["hc", "eval", "--file", &klv],
    ];
    for args in cases {
        let (_, v) = json(&args);
        let mut csv_args = args.clone();
        csv_args.extend_from_slice(&["--format", "csv"]);
        let (_, csv, _) = klcat(&csv_args);
        let decoded = Payload::from_csv(&csv).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(decoded.to_json(), v["payload"], "{args:?}");
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for args in [
        vec!["kl", "table", "--type", "B3"],
        vec!["delorme", "table", "--type", "A3"],
        vec!["ext-ll", "--type", "G2"],
        vec!["characters", "--inverse", "--type", "A1xA1"],
        vec!["verify", "--type", "A3"],
    ] {
        let mut outs = Vec::new();
        for t in ["1", "4"] {
            for fmt in ["json", "csv"] {
                let mut a = args.clone();
                a.extend_from_slice(&["--threads", t, "--format", fmt]);
                outs.push(klcat(&a).1);
            }
        }
        assert_eq!(outs[0], outs[2], "{args:?}");
        assert_eq!(outs[1], outs[3], "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(klcat(&["kl", "table", "--type", "Q7"]).0, 2);
    assert_eq!(klcat(&["kl", "table"]).0, 2);
    assert_eq!(klcat(&["kl", "table", "--type", "A2", "--bogus"]).0, 2);
    assert_eq!(klcat(&["nonsense"]).0, 2);
    assert_eq!(klcat(&["kl", "table", "--type", "E8"]).0, 3);
    assert_eq!(klcat(&["kl", "table", "--type", "A3", "--max-order", "10"]).0, 3);
    assert_eq!(klcat(&["hc", "eval", "--file", "/nonexistent.json"]).0, 2);
    assert_eq!(klcat(&["kl", "pair", "--type", "A2", "--x", "1", "--y", "7"]).0, 2);
    let (code, out, _) = klcat(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn out_flag_and_timing() {
    let dir = std::env::temp_dir().join(format!("klcat-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    let p = path.to_string_lossy().into_owned();
    let (code, out, _) = klcat(&["kl", "table", "--type", "A2", "--out", &p, "--timing"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["timing"]["seconds"].is_number());
    assert_eq!(v["order"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_klcat");
    let out = Command::new(bin)
        .args(["verify", "--suite", "thm4", "--type", "A2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["kl", "table", "--type", "X9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
