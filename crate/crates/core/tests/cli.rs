use std::io::Write;
use std::process::{Command, Output, Stdio};

use ltq::cli::{
    cmd_construct, cmd_oracle, cmd_simulate, cmd_topology, cmd_verify, CyclesDocument, Kind,
    OracleMode, OutputFormat, SimulateMode, Tampering,
};

fn ltq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ltq_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ltq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn topology_edgelist() {
    let two = ltq(&["topology", "--dim", "2"]);
    assert_eq!(two.status.code(), Some(0));
    assert_eq!(stdout(&two), "00 01\n00 10\n01 11\n10 11\n");

    let four = ltq(&["topology", "--dim", "4", "--format", "edgelist"]);
    let text = stdout(&four);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 32);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert!(lines.iter().all(|l| l.len() == 9));
}

#[test]
fn topology_dot_and_bad_dim() {
    let dot = cmd_topology(3, OutputFormat::Dot).unwrap().text;
    assert!(dot.starts_with("graph LTQ_3 {\n"));
    assert_eq!(dot.matches(" -- ").count(), 12);
    assert!(dot.contains("\"011\" -- \"101\";"));

    for bad in ["1", "31"] {
        let o = ltq(&["topology", "--dim", bad]);
        assert_eq!(o.status.code(), Some(2));
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn exporters_are_deterministic() {
    for args in [
        &["topology", "--dim", "6", "--format", "dot"][..],
        &["construct", "--dim", "7"][..],
        &["simulate", "--dim", "5", "--format", "report-json"][..],
        &["oracle", "--dim", "4", "--mode", "enumerate"][..],
    ] {
        let a = ltq(args);
        let b = ltq(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn construct_outputs() {
    let doc = CyclesDocument::parse(
        &cmd_construct(4, Kind::Cycles, OutputFormat::CyclesJson)
            .unwrap()
            .text,
    )
    .unwrap();
    assert_eq!(doc.dim, 4);
    assert_eq!(doc.kind, Kind::Cycles);
    assert_eq!(doc.cycles.len(), 2);
    assert!(doc.cycles.iter().all(|c| c.len() == 16));

    let paths = ltq(&[
        "construct",
        "--dim",
        "5",
        "--kind",
        "paths",
        "--format",
        "report-text",
    ]);
    let text = stdout(&paths);
    let starts: Vec<&str> = text.lines().map(|l| &l[..5]).collect();
    assert_eq!(starts, ["00010", "00110"]);

    let json = ltq(&["construct", "--dim", "5", "--kind", "paths"]);
    let doc = CyclesDocument::parse(&stdout(&json)).unwrap();
    assert_eq!(doc.cycles[0][0], "00010");
    assert_eq!(doc.cycles[1][0], "00110");

    let three = ltq(&["construct", "--dim", "3"]);
    assert_eq!(three.status.code(), Some(2));
    let err = String::from_utf8(three.stderr).unwrap();
    assert!(err.contains("LTQ_3"), "{err}");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ltq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let o = ltq(&[
        "construct",
        "--dim",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v = ltq(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn construct_verify_round_trip() {
    for dim in 4..=12u32 {
        for kind in ["cycles", "paths"] {
            let c = ltq(&["construct", "--dim", &dim.to_string(), "--kind", kind]);
            assert_eq!(c.status.code(), Some(0));
            let v = ltq_stdin(&["verify"], &stdout(&c));
            assert_eq!(v.status.code(), Some(0), "dim {dim} {kind}: {}", stdout(&v));
        }
    }
}

#[test]
fn tampered_documents_exit_1() {
    let doc = cmd_construct(6, Kind::Cycles, OutputFormat::CyclesJson)
        .unwrap()
        .text;
    let parsed = CyclesDocument::parse(&doc).unwrap();
    for t in Tampering::ALL {
        let bad = t.apply(&parsed).to_json();
        let v = ltq_stdin(&["verify", "--format", "report-json"], &bad);
        assert_eq!(v.status.code(), Some(1), "{t:?}");
        let report: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
        assert_eq!(report["passed"], false);
    }
    // Hand-swap two labels in the text itself.
    let mut swapped = parsed.clone();
    swapped.cycles[1].swap(3, 9);
    assert_eq!(
        cmd_verify(&swapped.to_json(), OutputFormat::ReportText)
            .unwrap()
            .code,
        1
    );
}

#[test]
fn malformed_documents_exit_3() {
    let doc = cmd_construct(4, Kind::Cycles, OutputFormat::CyclesJson)
        .unwrap()
        .text;
    let truncated = &doc[..doc.len() / 2];
    let cases = [
        truncated.to_string(),
        String::new(),
        doc.replacen("\"0000\"", "\"00x0\"", 1),
        doc.replacen("\"0000\"", "\"000\"", 1),
        doc.replace("\"version\": 1", "\"version\": 9"),
        doc.replace("\"cycles\",", "\"rings\","),
    ];
    for (i, input) in cases.iter().enumerate() {
        let v = ltq_stdin(&["verify"], input);
        assert_eq!(v.status.code(), Some(3), "case {i}");
    }
}

#[test]
fn verify_reads_unverified_dimension_as_failure() {
    let doc = r#"{"version":1,"dim":3,"kind":"cycles","cycles":[["000","001","011","010","110","111","101","100"],["000","001","111","101","011","010","110","100"]]}"#;
    let out = cmd_verify(doc, OutputFormat::ReportText).unwrap();
    assert_eq!(out.code, 1);
    assert!(out.text.contains("FAIL dimension"));
    assert!(out.text.contains("FAIL disjoint"));
}

#[test]
fn oracle_commands() {
    let three = ltq(&["oracle", "--dim", "3", "--mode", "pair-existence"]);
    assert_eq!(three.status.code(), Some(0));
    let text = stdout(&three);
    assert_eq!(text.lines().next(), Some("false"));
    assert!(text.contains("degree argument"));

    let four = ltq(&["oracle", "--dim", "4", "--mode", "pair-existence"]);
    let text = stdout(&four);
    assert_eq!(text.lines().next(), Some("true"));
    assert!(text.contains("witness:"));

    let five = ltq(&["oracle", "--dim", "5", "--mode", "enumerate"]);
    assert_eq!(five.status.code(), Some(2));
    let limited = ltq(&[
        "oracle",
        "--dim",
        "5",
        "--mode",
        "enumerate",
        "--limit",
        "2",
    ]);
    assert_eq!(limited.status.code(), Some(0));
    assert_eq!(stdout(&limited).lines().next(), Some("2"));

    let json = cmd_oracle(3, OracleMode::Enumerate, None, OutputFormat::ReportJson).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json.text).unwrap();
    assert_eq!(v["count"], 5);
}

#[test]
fn simulate_commands() {
    let four = cmd_simulate(4, SimulateMode::Split, OutputFormat::ReportText)
        .unwrap()
        .text;
    assert!(four.contains("contention_events: 0\n"));
    assert!(four.contains("steps: 15\n"));

    let six = cmd_simulate(6, SimulateMode::Split, OutputFormat::ReportJson)
        .unwrap()
        .text;
    let v: serde_json::Value = serde_json::from_str(&six).unwrap();
    assert_eq!(v["report"]["contention_events"], 0);
    assert_eq!(v["report"]["per_edge_load"].as_array().unwrap().len(), 128);

    let single = ltq(&["simulate", "--dim", "4", "--mode", "single"]);
    assert!(stdout(&single).contains("used_edges: 16 of 32"));

    assert_eq!(ltq(&["simulate", "--dim", "3"]).status.code(), Some(2));
}

#[test]
fn residual_command() {
    let o = ltq(&["residual", "--dim", "6", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("unused_edges: 64\n"));
    assert!(text.contains("residual_degree 2: 64 nodes"));
}

#[test]
fn unsupported_format_is_refused() {
    let o = ltq(&["topology", "--dim", "4", "--format", "cycles-json"]);
    assert_eq!(o.status.code(), Some(2));
}
