use std::fs;
use std::process::{Command, Output};

fn aegame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aegame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("run{i}.csv"))).collect();
    for p in &paths {
        let o = aegame(&[
            "sweep", "--n", "6..14", "--step", "4", "--trials", "3", "--avoider", "random", "--enforcer",
            "jumbleg:0.1", "--property", "subgraph:K3", "--seed", "17", "--out", p.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let a = fs::read(&paths[0]).unwrap();
    assert_eq!(a, fs::read(&paths[1]).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().next(), Some("n,trial,seed,hit_round,lower,upper_main,violations"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn sweep_edge_rows_hit_in_round_one() {
    let o = aegame(&["sweep", "--n", "3..6", "--trials", "2", "--property", "edge", "--avoider", "random"]);
    assert!(o.status.success());
    for line in stdout(&o).lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!((cols[3], cols[4]), ("1", "0"), "{line}");
    }
}

#[test]
fn solve_reports_json_and_budget_exit() {
    let o = aegame(&["solve", "--n", "4", "--property", "edge"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["value"], 1);
    assert_eq!(v["first_mover"], "avoider");
    let keys: Vec<&str> = ["\"n\"", "\"property\"", "\"convention\"", "\"first_mover\"", "\"value\"", "\"nodes\"", "\"elapsed_ms\""]
        .into_iter()
        .collect();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");

    let o = aegame(&["solve", "--n", "3", "--property", "subgraph:K3"]);
    assert!(stdout(&o).contains("\"never\""));
    let o = aegame(&["solve", "--n", "6", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = aegame(&["solve", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn play_writes_a_replayable_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.jsonl");
    let o = aegame(&[
        "play", "--n", "6", "--avoider", "turan:2", "--enforcer", "first", "--out", path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let t = aegame::game::Transcript::from_jsonl(&text, aegame::harness::parse_property).unwrap();
    assert_eq!(t.rules.n, 6);
    assert_eq!(t.to_jsonl(), text);
    match t.outcome {
        aegame::game::Outcome::HitAtRound(r) => assert!(r >= 5),
        aegame::game::Outcome::NeverHit => {}
    }
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["play", "--n", "5", "--property", "bogus"][..],
        &["play", "--n", "1", "--property", "edge"],
        &["play", "--n", "5", "--avoider", "turan:0"],
        &["bounds", "--n", "10", "--k", "1"],
        &["sweep", "--n", "9..3"],
    ] {
        assert_eq!(aegame(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn constants_flags_the_violated_inequality() {
    let base = ["constants", "--delta", "0.05", "--f", "3", "--gamma", "1e-3", "--s1", "100", "--s0", "1000", "--eps", "1e-5"];
    let mut ok = base.to_vec();
    ok.extend(["--e0", "9e-6"]);
    let o = aegame(&ok);
    assert!(o.status.success());
    let mut bad = base.to_vec();
    bad.extend(["--e0", "1.01e-5"]);
    let o = aegame(&bad);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"], serde_json::json!(["(5)"]));
}

#[test]
fn bounds_examples() {
    let o = aegame(&["bounds", "--n", "100", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][0]["lower"], 1250);
    assert_eq!(v["rows"][0]["upper_main"], 1250.0);
    let o = aegame(&["bounds", "--n", "100", "--k", "1", "--variant", "nc"]);
    assert!(stdout(&o).contains("trivial"));
}

#[test]
fn verify_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = dir.path().join("c4.txt");
    fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let g = c4.to_str().unwrap();

    let o = aegame(&["verify", "p1", "--graph", g, "--eps", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["passed"].clone(), v["min_degree"].clone()), (true.into(), 2.into()));

    let o = aegame(&["verify", "p2", "--graph", g, "--eps", "1/4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mode"], "exact");

    let o = aegame(&["verify", "regular-pair", "--graph", g, "--a", "0,2", "--b", "1,3", "--alpha", "1/2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["deviation_num"], 0);

    let o = aegame(&["verify", "regular-pair", "--graph", g, "--a", "0,1", "--b", "1,3", "--alpha", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = aegame(&["verify", "p1", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
}
