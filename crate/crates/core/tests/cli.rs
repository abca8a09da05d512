use std::io::Write;
use std::process::{Command, Stdio};

use pathpair::io::{from_dot, from_edge_list, from_json};
use pathpair::{build, generate, FamilySpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pathpair"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn route_pipes_into_verify() {
    let (code, plan) = run(&["route", "--m", "2", "--random", "7"]);
    assert_eq!(code, 0);
    let mut child = bin()
        .arg("verify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(plan.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("{\"ok\":true"));
}

#[test]
fn same_seed_same_bytes() {
    assert_eq!(
        run(&["route", "--m", "3", "--random", "11"]),
        run(&["route", "--m", "3", "--random", "11"])
    );
}

#[test]
fn tampered_plan_fails_verification() {
    let (_, plan) = run(&["route", "--m", "2", "--random", "1"]);
    let mut doc: serde_json::Value = serde_json::from_str(&plan).unwrap();
    let first = doc["routes"][0]["path"].clone();
    doc["routes"][0]["path"] = doc["routes"][1]["path"].clone();
    doc["routes"][1]["path"] = first;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plan.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let (code, report) = run(&["verify", "--plan", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{report}");
}

#[test]
fn generate_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = generate(FamilySpec::Hypercube { dim: 3 }).unwrap();
    for format in ["json", "dot", "edgelist"] {
        let path = dir.path().join(format!("q3.{format}"));
        let (code, _) = run(&[
            "generate",
            "--family",
            "hypercube",
            "--dim",
            "3",
            "--format",
            format,
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let loaded = match format {
            "json" => from_json(&text).unwrap().0,
            "dot" => from_dot(&text).unwrap(),
            _ => from_edge_list(&text).unwrap(),
        };
        assert_eq!(loaded, q3, "{format}");
        // Files load back through --graph as well.
        let (code, stats) = run(&["stats", "--graph", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(stats.contains("edges: 12"));
    }
}

#[test]
fn annotated_graph_file_routes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    let (code, _) = run(&["generate", "--m", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (graph, tag) = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(&graph, build(2).unwrap().graph());
    assert_eq!(tag.map(|t| (t.m, t.q)), Some((2, 11)));
    let (code, plan) = run(&["route", "--graph", path.to_str().unwrap(), "--random", "3"]);
    assert_eq!(code, 0);
    assert!(plan.contains("\"blown_cycle\":{\"m\":2,\"q\":11}"));
}

#[test]
fn decide_exit_codes() {
    let (code, out) = run(&["decide", "--family", "hypercube", "--dim", "2"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"status\":\"not-path-pairable\""));
    assert_eq!(
        run(&["decide", "--family", "petersen", "--workers", "2"]).0,
        0
    );
    assert_eq!(
        run(&[
            "decide",
            "--family",
            "hypercube",
            "--dim",
            "3",
            "--budget",
            "1"
        ])
        .0,
        3
    );
    assert_eq!(run(&["decide", "--family", "cycle", "--n", "14"]).0, 2);
}

#[test]
fn witness_file_feeds_single_pairing_check() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.json");
    let (code, _) = run(&[
        "decide",
        "--family",
        "cycle",
        "--n",
        "4",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        std::fs::read_to_string(&witness).unwrap().trim(),
        r#"{"pairs":[[0,2],[1,3]]}"#
    );
    let (code, out) = run(&[
        "decide",
        "--family",
        "cycle",
        "--n",
        "4",
        "--pairing",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("infeasible"));
}

#[test]
fn stats_reports_ratio() {
    let (code, out) = run(&["stats", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("n: 90\n")
            && out.contains("diameter: 3\n")
            && out.contains("max_degree: 30\n")
    );
}
