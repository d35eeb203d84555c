use std::path::PathBuf;
use std::process::{Command, Output};

use akblocks_core::blocks::{weight, ResidueParams};
use serde_json::Value;

const LAMBDA: &str = "3,3,2|2,1|1,1,1,1,1,1|2,2,1";

fn akblocks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akblocks")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("akblocks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn weight_prints_decimal_values() {
    let o = akblocks(&["weight", "--e", "9", "--a", "1,1,5,2", LAMBDA]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1\n");
    let o = akblocks(&["weight", "--e", "9", "--a", "1,1,5,2", "--conjugate", LAMBDA]);
    assert_eq!(stdout(&o), "6\n");
    let o = akblocks(&["weight", "--e", "2", "--a", "0,1", "-|-"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        vec!["weight", "--e", "2", "--a", "0,1", "2,x|-"],
        vec!["weight", "--e", "2", "--a", "0,1", "1,2|-"],
        vec!["weight", "--e", "2", "--a", "0,1", "1|1|1"],
        vec!["verify", "--p", "7", "--q", "2", "--a", "0,one", "--n", "2", "--content", "1,1,0"],
        vec!["frobnicate"],
    ] {
        let o = akblocks(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn blocks_reports_contents_weights_and_members() {
    let v = json(&akblocks(&["blocks", "--e", "2", "--a", "0,0", "--n", "1"]));
    assert_eq!(v["params"], serde_json::json!({"e": 2, "r": 2, "a": [0, 0], "n": 1}));
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0]["weight"], 1);
    assert_eq!(blocks[0]["members"], serde_json::json!(["1|-", "-|1"]));
    assert_eq!(blocks[0]["is_chain"], true);

    let v = json(&akblocks(&["blocks", "--e", "3", "--a", "0,1", "--n", "2"]));
    let weights: Vec<i64> = v["blocks"].as_array().unwrap().iter().map(|b| b["weight"].as_i64().unwrap()).collect();
    assert_eq!(weights, [1, 0, 0]);

    let v = json(&akblocks(&["blocks", "--e", "3", "--a", "0,1", "--n", "0"]));
    assert_eq!(v["blocks"], serde_json::json!([{"content": [0, 0, 0], "weight": 0, "members": ["-|-"], "is_chain": true}]));
}

#[test]
fn blocks_output_is_byte_for_byte_deterministic() {
    let args = ["blocks", "--e", "3", "--a", "0,1,1", "--n", "4"];
    let first = akblocks(&args).stdout;
    assert!(!first.is_empty());
    assert_eq!(akblocks(&args).stdout, first);
    let path = scratch("blocks.json");
    let o = akblocks(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(o.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn verify_writes_a_passing_verdict() {
    let path = scratch("verdict-a.json");
    let o = akblocks(&["verify", "--p", "7", "--q", "2", "--a", "0,1", "--n", "2", "--content", "1,1,0", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim_radB"], 4);
    assert_eq!(v["radB_cube_dim"], 0);
    assert_eq!(v["all_passed"], true);

    let v = json(&akblocks(&["verify", "--p", "5", "--q", "4", "--a", "0,0", "--n", "1", "--content", "1,0"]));
    assert_eq!(v["radB_square_dim"], 0);
    assert_eq!(v["all_passed"], true);
}

#[test]
fn verify_exit_codes_follow_the_contract() {
    let base = ["verify", "--p", "7", "--q", "2", "--a", "0,1", "--n", "2"];
    let run = |extra: &[&str]| akblocks(&[&base[..], extra].concat());

    let o = run(&["--content", "0,1,1"]);
    assert_eq!(o.status.code(), Some(3), "weight-zero content: {}", stderr(&o));

    let o = run(&["--content", "1,1,0", "--cap", "4"]);
    assert_eq!(o.status.code(), Some(4), "cap: {}", stderr(&o));

    let o = run(&["--content", "1,1,0", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(5), "fault: {}", stderr(&o));
    assert!(stderr(&o).contains("Gram product identity"), "{}", stderr(&o));

    let o = run(&["--content", "1,1,0", "--e", "4"]);
    assert_eq!(o.status.code(), Some(2), "order mismatch: {}", stderr(&o));
}

#[test]
fn search_finds_known_weight_one_blocks() {
    let v = json(&akblocks(&["search", "--n", "2", "--e", "2-3", "--r", "2"]));
    let hits = v.as_array().unwrap();
    let has = |e: u64, a: [u64; 2], n: u64, s: u64| {
        hits.iter().any(|h| h["e"] == e && h["a"] == serde_json::json!(a) && h["n"] == n && h["s"] == s)
    };
    assert!(has(3, [0, 1], 2, 3));
    assert!(has(2, [0, 0], 1, 2));
    // Replay the weight of every reported member.
    for h in hits {
        let a: Vec<i64> = h["a"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        let params = ResidueParams::new(h["e"].as_u64().unwrap() as u32, &a).unwrap();
        for m in h["members"].as_array().unwrap() {
            let lam = m.as_str().unwrap().parse().unwrap();
            assert_eq!(weight(&lam, &params).unwrap(), 1, "{h}");
        }
    }
}

#[test]
fn search_over_an_empty_range_is_empty() {
    let o = akblocks(&["search", "--n", "2", "--e", "3-2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(json(&o), serde_json::json!([]));
}

#[test]
fn quick_selftest_passes() {
    let o = akblocks(&["selftest", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l.starts_with("PASS")));
}

#[test]
fn selftest_with_injected_fault_names_the_gram_identity() {
    let o = akblocks(&["selftest", "--inject-fault"]);
    assert_ne!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FAIL") && l.contains("Gram product identity")), "{out}");
    // Combinatorial criteria do not read Gram data.
    assert!(out.lines().take(6).all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn flags_override_config_values() {
    let path = scratch("params.conf");
    std::fs::write(&path, "# weight example\ne = 9\na = 1,1,5,2\n").unwrap();
    let cfg = path.to_str().unwrap();
    let o = akblocks(&["--config", cfg, "weight", LAMBDA]);
    assert_eq!(stdout(&o), "1\n", "{}", stderr(&o));
    let o = akblocks(&["--config", cfg, "weight", "--e", "2", "--a", "0,1", "-|-"]);
    assert_eq!(stdout(&o), "0\n", "{}", stderr(&o));

    std::fs::write(&path, "colour = red\n").unwrap();
    let o = akblocks(&["--config", cfg, "weight", "--e", "2", "--a", "0,1", "-|-"]);
    assert_eq!(o.status.code(), Some(2));
}
