use std::process::{Command, Output};

fn lieform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieform")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn roots_table_golden() {
    let o = lieform(&["roots", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "\
G2: 6 positive roots (12 total)
index  height  root
    1       1  1 0
    2       1  0 1
    3       2  1 1
    4       3  2 1
    5       4  3 1
    6       5  3 2
"
    );
}

#[test]
fn roots_json_schema() {
    let o = lieform(&["roots", "A2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"type": "A2", "cartan": [[2, -1], [-1, 2]], "positive_roots": [[1, 0], [0, 1], [1, 1]]}));
}

#[test]
fn roots_parse_failure() {
    let o = lieform(&["roots", "Z9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(stdout(&lieform(&["roots", "E8", "--count-only"])), "120\n");
}

#[test]
fn weyl_e6() {
    let o = lieform(&["weyl", "E6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["length"], 36);
    assert_eq!(v["minus_w0"], serde_json::json!([6, 2, 5, 4, 3, 1]));
    assert_eq!(v["reduced_word"].as_array().unwrap().len(), 36);
}

#[test]
fn constants_a2_golden() {
    let o = lieform(&["constants", "A2", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "\
alpha_coords,beta_coords,N
1 0,0 1,1
1 0,-1 -1,-1
0 1,-1 -1,1
1 1,-1 0,-1
1 1,0 -1,1
-1 0,0 -1,-1
"
    );
    let o = lieform(&["constants", "A1"]);
    assert_eq!(stdout(&o), "A1: 0 structure constants\nalpha  beta    N\n");
}

#[test]
fn certify_codes() {
    let o = lieform(&["certify", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "\
G2: compact form of dimension 14
closure            pass
negative definite  pass
antilinear fixed   pass
Killing diagonal   -48 -48 -16 -16 -48 -48 -48 -48 ...
"
    );
    let o = lieform(&["certify", "A2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    let o = lieform(&["certify", "A1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"type": "A1", "closure": true, "negative_definite": true, "antilinear_fixed": true, "gram_diagonal_sample": ["-8", "-8", "-8"]})
    );
    assert_eq!(lieform(&["certify", "D4^3"]).status.code(), Some(3));
}

#[test]
fn classify_table_golden() {
    let o = lieform(&["classify", "--all", "--max-rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "\
type   twist  (v)   cartan-type compact-inner compact-cartan discrete-series witness note
A1         1  yes   yes         yes           yes            yes             pass
A2         1  no    no          no            no             no              -
A2         2  yes   yes         yes           yes            yes             pass
B2         1  yes   yes         yes           yes            yes             pass
G2         1  yes   yes         yes           yes            yes             pass
"
    );
}

#[test]
fn classify_json_and_check() {
    let o = lieform(&["classify", "E6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["condition_v"], false);
    assert_eq!(v["witness"], serde_json::Value::Null);

    let o = lieform(&["classify", "--all", "--max-rank", "4", "--check-paper", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("agree"));
    let text = stdout(&o);
    assert!(text.contains("D4,3,false,false,false,false,false,none,extension"));
    assert!(text.contains("D3,1,false"));

    assert_eq!(lieform(&["classify", "B3^2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = lieform(&["classify", "--all", "--max-rank", "6", "--format", "json"]);
    let b = lieform(&["classify", "--all", "--max-rank", "6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = lieform(&["constants", "F4", "--format", "json"]);
    let b = lieform(&["constants", "F4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
