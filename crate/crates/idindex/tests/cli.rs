use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idindex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn compute_petersen() {
    let cert = json(&["compute", "--family", "petersen"]);
    assert_eq!(cert["k"], 3);
    assert_eq!(cert["exhausted_k_minus_1"], true);
    assert_eq!(cert["partition"].as_array().unwrap().len(), 10);
    assert!(cert["ranks"][0].is_string());
    let keys: Vec<&str> = cert
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys[..7],
        [
            "k",
            "partition",
            "ranks",
            "strings",
            "lower_bound",
            "exhausted_k_minus_1",
            "nodes_searched"
        ]
    );
    let parallel = json(&["compute", "--family", "petersen", "--deterministic=false"]);
    assert_eq!(parallel["k"], 3);
}

#[test]
fn compute_variants() {
    let single = json(&["compute", "--family", "path:1"]);
    assert_eq!(single["k"], 1);
    assert_eq!(single["by_convention"], true);

    let idn = json(&["compute", "--family", "path:4", "--id-number"]);
    assert_eq!(idn["is_id_graph"], true);
    assert_eq!(idn["id_number"], 1);

    let greedy = json(&[
        "compute",
        "--family",
        "cycle:8",
        "--heuristic",
        "--seed",
        "5",
    ]);
    assert!(greedy["k"].as_u64().unwrap() >= 2);
    assert_eq!(greedy["witness"], "unproven");
}

#[test]
fn verify_construction_and_files() {
    let report = json(&[
        "verify",
        "--family",
        "caterpillar:2,4,2,2,4,2",
        "--construct",
    ]);
    assert_eq!(report["distinguishing"], true);
    assert_eq!(
        report["strings"][2],
        serde_json::json!(["5", "16", "14", "3", "0", "0", "0"])
    );
    assert_eq!(report["distinct_ranks"], 4);

    let dir = tempfile::tempdir().unwrap();
    let ranks = write(dir.path(), "r.json", r#"{"ranks": ["1", "1", "1", "1"]}"#);
    let report = json(&["verify", "--family", "cycle:4", "--ranks", &ranks]);
    assert_eq!(report["distinguishing"], false);
    assert_eq!(report["collision"], serde_json::json!([0, 1]));

    let coloring = write(dir.path(), "c.json", r#"{"red": [0]}"#);
    let report = json(&["verify", "--family", "path:3", "--coloring", &coloring]);
    assert_eq!(report["codes"], serde_json::json!([[0, 0], [1, 0], [0, 1]]));
    assert_eq!(report["id_coloring"], true);

    let universal = json(&["verify", "--family", "cycle:4", "--universal"]);
    assert_eq!(universal["ranks"], serde_json::json!(["2", "4", "8", "16"]));
    assert_eq!(universal["distinguishing"], true);
}

#[test]
fn analyze_and_construct() {
    let a = json(&["analyze", "--family", "prism:5"]);
    assert_eq!(a["T"], 1);
    assert_eq!(a["distance_profile"], serde_json::json!([3, 4, 2]));
    assert_eq!(a["expected_id_index"], 3);

    let a = json(&["analyze", "--family", "complete:4"]);
    assert_eq!(a["tuplets"][0]["kind"], "clique");

    let c = json(&["construct", "--family", "multipartite:2,2"]);
    assert_eq!(c["ranks"], serde_json::json!(["1", "2", "2", "3"]));
    let c = json(&["construct", "--family", "cycle:4", "--universal"]);
    assert_eq!(c["ranks"].as_array().unwrap().len(), 4);
}

#[test]
fn sweep_output() {
    let out = run(&["sweep", "--family", "cycle", "--from", "3", "--to", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let idi: Vec<&str> = text
        .lines()
        .skip(2)
        .map(|l| l.split(',').nth(6).unwrap())
        .collect();
    assert_eq!(idi, ["3", "3", "3", "2", "2", "2", "2", "2", "2", "2"]);

    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let out = run(&[
        "sweep",
        "--family",
        "grid:2",
        "--from",
        "2",
        "--to",
        "4",
        "--csv",
        csv.to_str().unwrap(),
        "--timing",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(csv).unwrap();
    assert!(text
        .lines()
        .nth(2)
        .unwrap()
        .starts_with("grid,2x2,4,2,2,2,3,3,yes,"));
    assert!(!text.lines().nth(2).unwrap().ends_with(','));
}

#[test]
fn deterministic_output_is_byte_identical() {
    for args in [
        &["compute", "--family", "prism:5"][..],
        &["analyze", "--family", "caterpillar:3,1,1,3"],
        &["sweep", "--random", "n=4..6,count=10,seed=11"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.stdout.ends_with(b"\n"));
    }
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let disconnected = write(d, "disc.el", "0 1\n2 3\n");
    let isolated = write(d, "iso.el", "# n=4\n0 1\n1 2\n");
    let self_loop = write(d, "loop.el", "0 0\n");
    let duplicate = write(d, "dup.el", "0 1\n1 0\n");
    let three_tokens = write(d, "three.el", "0 1 2\n");
    let negative = write(d, "neg.el", "0 -1\n");
    let empty = write(d, "empty.el", "");
    let good = write(d, "good.el", "0 1\n1 2\n");
    let bad_json = write(d, "bad.json", "{\"ranks\": [");
    let short_ranks = write(d, "short.json", r#"{"ranks": ["1"]}"#);
    let empty_red = write(d, "red.json", r#"{"red": []}"#);

    let cases: &[(&[&str], i32)] = &[
        (&["compute", "--input", &disconnected], 2),
        (&["compute", "--input", &isolated], 2),
        (&["compute", "--input", &self_loop], 2),
        (&["compute", "--input", &duplicate], 2),
        (&["compute", "--input", &three_tokens], 2),
        (&["compute", "--input", &negative], 2),
        (&["compute", "--input", &empty], 2),
        (&["compute", "--input", "/nonexistent/g.el"], 2),
        (&["compute", "--input", &good], 0),
        (&["compute"], 2),
        (&["compute", "--family", "cycle:2"], 2),
        (&["compute", "--family", "dodecahedron"], 2),
        (&["compute", "--family", "path:3", "--input", &good], 2),
        (
            &[
                "compute",
                "--family",
                "path:3",
                "--id-number",
                "--heuristic",
            ],
            2,
        ),
        (
            &["compute", "--family", "path:3", "--budget-nodes", "lots"],
            2,
        ),
        (
            &["compute", "--family", "prism:6", "--budget-nodes", "5"],
            3,
        ),
        (&["compute", "--family", "grid:5x5", "--id-number"], 3),
        (&["verify", "--family", "path:3"], 2),
        (&["verify", "--input", &good, "--construct"], 2),
        (&["verify", "--family", "path:3", "--ranks", &bad_json], 2),
        (
            &["verify", "--family", "path:3", "--ranks", &short_ranks],
            2,
        ),
        (
            &["verify", "--family", "path:3", "--coloring", &empty_red],
            2,
        ),
        (&["construct", "--family", "caterpillar:1,2"], 2),
        (&["construct", "--family", "multipartite:3,2"], 2),
        (
            &["sweep", "--family", "petersen", "--from", "1", "--to", "2"],
            2,
        ),
        (&["sweep", "--family", "cycle", "--from", "5"], 2),
        (
            &["sweep", "--family", "cycle", "--from", "6", "--to", "5"],
            2,
        ),
        (&["sweep", "--random", "n=3"], 2),
        (
            &[
                "sweep",
                "--family",
                "prism",
                "--from",
                "6",
                "--to",
                "6",
                "--budget-nodes",
                "3",
            ],
            3,
        ),
        (&["frobnicate"], 2),
    ];
    for &(args, expected) in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(expected),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        if expected != 0 {
            assert!(!out.stderr.is_empty(), "{args:?} gave no message");
        }
    }
    let out = run(&["compute", "--input", &disconnected]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
    let out = run(&["compute", "--family", "prism:6", "--budget-nodes", "5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("answer lies in [1, "));
    assert_eq!(code(&["--version"]), 0);
}
