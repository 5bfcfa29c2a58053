use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn linkhom(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linkhom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn linkhom");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad stdout {:?}: {e}", String::from_utf8_lossy(&out.stdout)))
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn equiv_reports_failing_stage_with_exit_one() {
    let out = linkhom(&["equiv", &data("l1.json"), &data("l2.json")], None);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["stage"], "T_UNREACHABLE");
}

#[test]
fn equiv_certificate_replays_through_apply() {
    let out = linkhom(&["equiv", &data("l1.json"), &data("l3.json")], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equivalent"], true);
    let word = v["certificate"].to_string();
    let applied = linkhom(&["apply", &data("l1.json"), "--word", &word, "--check", &data("l3.json")], None);
    assert_eq!(applied.status.code(), Some(0));
    assert_eq!(json(&applied)["matches"], true);
}

#[test]
fn apply_check_mismatch_exits_one() {
    let word = r#"[{"i":2,"j":1,"power":1}]"#;
    let out = linkhom(&["apply", &data("l1.json"), "--word", word, "--check", &data("l3.json")], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["matches"], false);
}

#[test]
fn equal_milnor_profiles_separated_by_f_stage() {
    let (a, b) = (linkhom(&["milnor", &data("h1.json")], None), linkhom(&["milnor", &data("h2.json")], None));
    assert_eq!(json(&a), json(&b));
    assert_eq!(json(&a)["delta4"], 1);
    let out = linkhom(&["equiv", &data("h1.json"), &data("h2.json")], None);
    assert_eq!(json(&out)["stage"], "F_UNREACHABLE");
    let inv = json(&linkhom(&["invariants", "--family", "T41-4", &data("h1.json")], None));
    let inv2 = json(&linkhom(&["invariants", "--family", "t41-4", &data("h2.json")], None));
    assert_ne!(inv["values"]["theta"], inv2["values"]["theta"]);
}

#[test]
fn inapplicable_family_is_a_usage_error() {
    let out = linkhom(&["invariants", "--family", "T41-1", &data("h1.json")], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("T41-1"));
}

#[test]
fn canon_agrees_with_equiv() {
    let c1 = json(&linkhom(&["canon", &data("l1.json")], None));
    let c2 = json(&linkhom(&["canon", &data("l2.json")], None));
    let c3 = json(&linkhom(&["canon", &data("l3.json")], None));
    assert_eq!(c1, c3);
    assert_ne!(c1, c2);
}

#[test]
fn convert_round_trips_through_levine() {
    let lev = linkhom(&["convert", "--to", "levine", &data("l2.json")], None);
    assert_eq!(lev.status.code(), Some(0));
    let mut doc = json(&lev);
    assert_eq!(doc["form"], "levine");
    doc.as_object_mut().unwrap().remove("word");
    let back = linkhom(&["convert", "--to", "clasper", "-"], Some(&doc.to_string()));
    let back = json(&back);
    assert_eq!(back["form"], "clasper");
    let verdict = linkhom(&["equiv", &back.to_string(), &data("l2.json")], None);
    assert_eq!(verdict.status.code(), Some(0));
}

#[test]
fn sublink_keeps_remaining_components() {
    let v = json(&linkhom(&["sublink", "--drop", "4", &data("l2.json")], None));
    assert_eq!(v["components"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["linking"].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_finds_short_words() {
    let out = linkhom(&["oracle", &data("l1.json"), &data("l3.json"), "--depth", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["found"], true);
    let word = v["word"].to_string();
    let check = linkhom(&["apply", &data("l1.json"), "--word", &word, "--check", &data("l3.json")], None);
    assert_eq!(check.status.code(), Some(0));
    let miss = linkhom(&["oracle", &data("l1.json"), &data("l2.json"), "--depth", "2"], None);
    assert_eq!(miss.status.code(), Some(1));
    assert_eq!(json(&miss)["found"], false);
}

#[test]
fn snf_prints_divisors() {
    let v = json(&linkhom(&["snf", "--matrix", "[[2,4],[6,8]]"], None));
    assert_eq!(v["elementary_divisors"], serde_json::json!([2, 4]));
    assert_eq!(v["rank"], 2);
}

#[test]
fn jsonl_batch_keeps_line_order() {
    let text = std::fs::read_to_string(data("pairs.jsonl")).unwrap();
    let out = linkhom(&["equiv", "--jsonl", "-"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
    let results = lines(&out);
    let stages: Vec<_> = results.iter().map(|r| r["stage"].as_str().unwrap_or("")).collect();
    assert_eq!(stages, ["T_UNREACHABLE", "", "F_UNREACHABLE", ""]);
    for (n, r) in results.iter().enumerate() {
        assert_eq!(r["line"], n + 1);
    }
}

#[test]
fn jsonl_batch_with_bad_line_exits_two() {
    let good = r#"[{"form":"clasper","c":[0,0,0,0,0,0],"f":[0,0,0,0],"t":[0,0]},{"form":"clasper","c":[0,0,0,0,0,0],"f":[0,0,0,0],"t":[0,1]}]"#;
    let out = linkhom(&["equiv", "--jsonl", "-"], Some(&format!("{good}\nnot json\n")));
    assert_eq!(out.status.code(), Some(2));
    let results = lines(&out);
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["stage"], "T_UNREACHABLE");
    assert!(results[1].get("error").is_some());
}

#[test]
fn malformed_input_names_the_field() {
    let bad = r#"{"form":"clasper","c":[1,2,2,4,2,"x"],"f":[0,0,0,0],"t":[0,0]}"#;
    let out = linkhom(&["equiv", bad, &data("l1.json")], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("c[5]"));
    let missing = linkhom(&["milnor", &data("does-not-exist.json")], None);
    assert_eq!(missing.status.code(), Some(2));
    let usage = linkhom(&["equiv"], None);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn large_integers_survive_as_strings() {
    let big = r#"{"form":"clasper","c":[1,0,0,0,0,0],"f":["123456789012345678901234567890",0,0,0],"t":[0,0]}"#;
    let v = json(&linkhom(&["convert", "--to", "clasper", big], None));
    assert_eq!(v["f"][0], "123456789012345678901234567890");
}
