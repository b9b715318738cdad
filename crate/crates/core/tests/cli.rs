use std::process::{Command, Output};

use serde_json::Value;

fn corona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_writes_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.txt");
    let out = corona(&[
        "construct",
        "--op",
        "svnc",
        "--g1",
        "gen:path:4",
        "--g2",
        "gen:path:2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n=15 m=22"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("15 22\n"));

    // the written file is a valid operand
    let out = corona(&[
        "construct",
        "--op",
        "senc",
        "--g1",
        path.to_str().unwrap(),
        "--g2",
        "gen:empty:1",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn construct_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n").unwrap();
    let out = corona(&[
        "construct",
        "--op",
        "svnc",
        "--g1",
        bad.to_str().unwrap(),
        "--g2",
        "gen:path:2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    let out = corona(&[
        "construct",
        "--op",
        "senc",
        "--g1",
        "gen:empty:4",
        "--g2",
        "gen:path:2",
    ]);
    assert_eq!(code(&out), 2);
    let out = corona(&[
        "construct",
        "--op",
        "svnc",
        "--g1",
        "gen:nonsense:3",
        "--g2",
        "gen:path:2",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn spectrum_report_is_verified_and_deterministic() {
    let args = [
        "spectrum",
        "--op",
        "senc",
        "--kind",
        "Q",
        "--method",
        "both",
        "--g1",
        "gen:petersen",
        "--g2",
        "gen:complete:3",
    ];
    let first = json(&corona(&args));
    assert_eq!(first["schema"], 1);
    assert_eq!(first["order"], "70");
    assert_eq!(first["verification"]["passed"], true);
    let total: u64 = first["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 70);

    let mut second = json(&corona(&args));
    let mut first = first;
    first.as_object_mut().unwrap().remove("timing_ms");
    second.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(first, second);
}

#[test]
fn spectrum_json_file_and_preconditions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = corona(&[
        "spectrum",
        "--op",
        "svnc",
        "--kind",
        "L",
        "--method",
        "closed",
        "--g1",
        "gen:complete:3",
        "--g2",
        "gen:complete:1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.get("verification").is_none());
    assert_eq!(report["eigenvalues"][0]["value"], 0.0);

    let irregular = corona(&[
        "spectrum",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--g1",
        "gen:path:4",
        "--g2",
        "gen:path:2",
    ]);
    assert_eq!(code(&irregular), 4);
    let no_form = corona(&[
        "spectrum",
        "--op",
        "svnc",
        "--kind",
        "Q",
        "--g1",
        "gen:cycle:4",
        "--g2",
        "gen:path:3",
    ]);
    assert_eq!(code(&no_form), 4);
    let direct_only = corona(&[
        "spectrum",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--method",
        "direct",
        "--g1",
        "gen:path:4",
        "--g2",
        "gen:path:2",
    ]);
    assert_eq!(code(&direct_only), 0);
}

#[test]
fn treecount_matches_matrix_tree() {
    let out = corona(&[
        "treecount",
        "--op",
        "svnc",
        "--g1",
        "gen:complete:3",
        "--g2",
        "gen:complete:1",
        "--verify",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "192\nmatrix-tree: 192\n");
    let out = corona(&[
        "treecount",
        "--op",
        "senc",
        "--g1",
        "gen:path:3",
        "--g2",
        "gen:complete:1",
    ]);
    assert_eq!(code(&out), 4);
    let out = corona(&[
        "treecount",
        "--op",
        "senc",
        "--g1",
        "gen:cycle:3+cycle:3",
        "--g2",
        "gen:complete:1",
    ]);
    assert_eq!(code(&out), 4);
}

#[test]
fn cospectral_variants() {
    let out = corona(&[
        "cospectral",
        "--variant",
        "a",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:shrikhande",
        "gen:rook:4",
        "gen:complete:1",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["certificate"]["verdict"], true);
    assert_eq!(report["identical"], false);
    assert_eq!(report["first"]["n"], 80);

    let out = corona(&[
        "cospectral",
        "--variant",
        "b",
        "--op",
        "senc",
        "--kind",
        "L",
        "--inputs",
        "gen:cycle:5",
        "--search",
        "6",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["certificate"]["verdict"], true);

    // the only A-cospectral pair on five vertices has different coronals
    let out = corona(&[
        "cospectral",
        "--variant",
        "b",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:4",
        "--search",
        "5",
    ]);
    assert_eq!(code(&out), 6);
    let out = corona(&[
        "cospectral",
        "--variant",
        "b",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:4",
        "--search",
        "7",
    ]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["coronal_witness"]["equal"].as_bool().unwrap());

    let out = corona(&[
        "cospectral",
        "--variant",
        "a",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:6",
        "gen:cycle:3+cycle:3",
        "gen:complete:1",
    ]);
    assert_eq!(code(&out), 6, "C6 and 2C3 are not A-cospectral");
    let out = corona(&[
        "cospectral",
        "--variant",
        "a",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:6",
        "gen:petersen",
        "gen:complete:1",
    ]);
    assert_eq!(code(&out), 6);
    let out = corona(&[
        "cospectral",
        "--variant",
        "c",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:6",
        "gen:cycle:3+cycle:3",
        "gen:path:2",
        "gen:path:2",
    ]);
    assert_eq!(code(&out), 6);
    let out = corona(&[
        "cospectral",
        "--variant",
        "a",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:6",
    ]);
    assert_eq!(code(&out), 2);
    let out = corona(&[
        "cospectral",
        "--variant",
        "b",
        "--op",
        "svnc",
        "--kind",
        "A",
        "--inputs",
        "gen:cycle:4",
        "--search",
        "9",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn expander_family() {
    let out = corona(&["expander", "--g", "gen:circulant:6,1,2", "--j", "3"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["passed"], true);
    let sizes: Vec<u64> = report["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["n"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [24, 96, 384]);

    assert_eq!(
        code(&corona(&["expander", "--g", "gen:petersen", "--j", "1"])),
        4
    );
    assert_eq!(
        code(&corona(&["expander", "--g", "gen:path:4", "--j", "1"])),
        4
    );
    let complete = corona(&["expander", "--g", "gen:complete:5", "--j", "1"]);
    assert_eq!(code(&complete), 0);
    assert!(String::from_utf8_lossy(&complete.stderr).contains("warning"));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&corona(&[])), 2);
    assert_eq!(
        code(&corona(&[
            "spectrum", "--op", "svnc", "--kind", "X", "--g1", "a", "--g2", "b"
        ])),
        2
    );
    assert_eq!(code(&corona(&["--version"])), 0);
}
