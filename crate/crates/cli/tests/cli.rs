use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckecliff")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn relations_suite_at_eighth_root() {
    let o = run(&["relations", "--l", "2", "--suite", "s5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).lines().any(|l| l == "L001: pass"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn builders_suite() {
    let o = run(&["relations", "--l", "4", "--suite", "builders"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("L(12) (1,2): pass"));
}

#[test]
fn blambda_dot() {
    let o = run(&["crystal", "blambda", "--l", "2", "--lambda", "1,0", "--depth", "6", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.starts_with("digraph crystal {"));
    assert!(s.contains("0 -> 1 [label=0];"));
    assert!(s.lines().filter(|l| l.contains("->")).all(|l| l.contains("[label=")));
}

#[test]
fn binfty_json_schema() {
    let o = run(&["crystal", "binfty", "--l", "3", "--depth", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 1 + 3 + 8);
    let n0 = &nodes[0];
    assert_eq!(n0["id"], 0);
    assert_eq!(n0["wt"]["lam"], serde_json::json!([0, 0, 0]));
    assert_eq!(n0["eps"], serde_json::json!([0, 0, 0]));
    let e0 = &v["edges"][0];
    assert_eq!((e0["from"].as_u64(), e0["to"].as_u64(), e0["color"].as_u64()), (Some(0), Some(1), Some(0)));
}

#[test]
fn serre_exit_zero() {
    let o = run(&["serre", "--l", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn char_report() {
    let o = run(&["char", "--l", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["library"].as_array().unwrap().iter().all(|e| e["integral"] == true));
}

#[test]
fn output_is_deterministic() {
    let args = ["crystal", "blambda", "--l", "3", "--lambda", "1,0,1", "--depth", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["relations", "--l", "3"]);
    let b = run(&["relations", "--l", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("heckecliff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("serre.json");
    let o = run(&["serre", "--l", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["l"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["serre", "--l", "1"][..],
        &["crystal", "binfty", "--l", "2"],
        &["crystal", "blambda", "--l", "2", "--depth", "2"],
        &["crystal", "blambda", "--l", "2", "--depth", "2", "--lambda", "1"],
        &["crystal", "blambda", "--l", "2", "--depth", "2", "--lambda", "-1,0"],
        &["relations", "--l", "3", "--suite", "nope"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn all_at_rank_two() {
    let o = run(&["all", "--l", "2", "--depth", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["builders", "char", "crystal", "serre", "suite"] {
        assert!(v.get(k).is_some(), "{k}");
    }
}
