use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horikawa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn hj_examples() {
    assert_eq!(ok(&["hj", "expand", "4", "1"]), "[4]  T δ=1 m=2 a=1  2-Gorenstein\n");
    assert_eq!(ok(&["hj", "discrepancies", "3", "2", "3"]), "-1/2 -1/2 -1/2\n");
    assert_eq!(ok(&["hj", "eval", "2", "5"]), "9/5\n");
    assert_eq!(ok(&["hj", "classify", "9/5"]), "[2, 5]  T δ=1 m=3 a=2\n");
    assert_eq!(ok(&["hj", "classify", "3", "2"]), "[3, 2]  1/5(1,2)  NotT\n");
    assert_eq!(ok(&["hj", "grow", "--side", "left", "4"]), "[2, 5]\n");
    assert_eq!(ok(&["hj", "k2", "2", "5"]), "2\n");
    assert_eq!(ok(&["hj", "enum", "--max-len", "2"]), "[4]\n[2, 5]\n[3, 3]\n[5, 2]\n");
    assert_eq!(ok(&["hj", "enum", "--max-len", "2", "--two-gorenstein"]), "[4]\n[3, 3]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hj", "eval", "2", "x"]).status.code(), Some(2));
    assert_eq!(run(&["hj", "classify", "9/x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["hj", "eval", "3", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(">= 2"));
    assert_eq!(run(&["hj", "expand", "4", "2"]).status.code(), Some(1));
    assert_eq!(run(&["hj", "grow", "--side", "left", "3", "2"]).status.code(), Some(1));
    assert_eq!(run(&["table", "T1", "--n", "13"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "all", "--n-max", "13"]).status.code(), Some(1));
}

#[test]
fn t2_single_cell() {
    let out = ok(&["table", "T2", "--n", "20", "--d", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["table"], "T2");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let cell = rows.iter().find(|r| r["column"] == "dim|L_00|").expect("L_00 column");
    assert_eq!(cell["value"], "161");
    assert_eq!(cell["formula"], "7n+21");
    assert!(cell["anchor"].as_str().unwrap().starts_with("T2"));
}

fn rows(args: &[&str]) -> Vec<serde_json::Value> {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&ok(&a)).unwrap();
    v["rows"].as_array().unwrap().clone()
}

#[test]
fn t1_symbolic_and_evaluated() {
    let sym = rows(&["table", "T1", "--n", "20", "--d", "7"]);
    assert_eq!(sym[0]["formula"], "7n+19-d");
    assert_eq!(sym[0]["value"], "152");
    assert!(sym[0]["anchor"].as_str().unwrap().starts_with("T1 row"));
    for r in rows(&["table", "T1", "--n-min", "20", "--n-max", "21"]) {
        assert!(r["formula"].is_null(), "{r}");
    }
    for r in rows(&["table", "T1", "--n", "20", "--d", "7", "--eval"]) {
        assert!(r["formula"].is_null(), "{r}");
    }
    let csv = ok(&["table", "T1", "--n", "20", "--format", "csv"]);
    assert!(csv.starts_with("n,d,regime,column,value,formula,component,anchor\n"));
}

#[test]
fn empty_style_flag() {
    let sym = ok(&["table", "T1", "--n-min", "14", "--n-max", "17", "--format", "csv"]);
    let minus = ok(&["table", "T1", "--n-min", "14", "--n-max", "17", "--format", "csv", "--empty-as", "-1"]);
    assert!(sym.contains('∅'));
    assert!(!minus.contains('∅'));
    assert_eq!(sym.replace('∅', "-1"), minus);
}

#[test]
fn empty_table_is_not_an_error() {
    let o = run(&["table", "T1", "--n", "20", "--d", "200", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("note"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["rows"].as_array().unwrap().is_empty());
}

#[test]
fn topology_first_kind_13() {
    let out = ok(&["table", "topology", "--n", "13", "--kind", "first", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let b = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["component"] == "1b")
        .expect("component 1b");
    assert_eq!(b["parity"], "even");
    assert_eq!(b["signature"], -96);
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "strata", "--n-min", "14", "--n-max", "16", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
    let text = ["table", "T3", "--n", "18"];
    assert_eq!(ok(&text), ok(&text));
}

#[test]
fn record_commands() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["tangent", "14", "1", "D'"])).unwrap();
    assert_eq!(v["h1"].as_i64().unwrap() + v["nu"].as_i64().unwrap(), 7 * 14 + 18);
    let v: serde_json::Value = serde_json::from_str(&ok(&["components", "second", "16"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    let v: serde_json::Value = serde_json::from_str(&ok(&["strata", "20", "3"])).unwrap();
    assert!(!v.as_array().unwrap().is_empty());
    assert_eq!(run(&["topology", "first", "13", "2b"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_lists_every_check() {
    let out = ok(&["verify", "all", "--n-max", "30", "--hj-n-max", "60"]);
    assert_eq!(out.lines().count(), 14, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    let out = ok(&["verify", "hj", "--n-max", "20"]);
    assert!(out.lines().any(|l| l.starts_with("SKIP")));
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_hj_round_trip_counts_coprime_pairs() {
    let out = ok(&["verify", "hj", "--n-max", "14", "--hj-n-max", "100"]);
    let line = out.lines().find(|l| l.contains("hj_round_trip")).unwrap();
    // Sum of Euler's totient over 2..=100.
    assert!(line.contains("passed=3043 failed=0"), "{line}");
}

#[test]
fn tampered_gram_fails_with_named_cell() {
    let o = run(&["verify", "systems", "--n-max", "20", "--tamper-gram", "0,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL"));
    let json = &s[s.find('{').unwrap()..];
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["all_passed"], false);
    let f = &v["first_failure"];
    assert!(f["n"].is_i64() && f["d"].is_i64(), "{f}");
    assert_eq!(f["check"], "table2_two_path");
    assert!(f["expected"].is_string() && f["got"].is_string());
}
