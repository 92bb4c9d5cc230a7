use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const PERFECT_12: &str = "12,13,11,6,7,5,10,8,9,6,5,7,12,11,13,8,10,9,4,2,3,2,4,3";
const EXTENDED_12: &str = "7,4,6,3,5,4,3,7,6,5,11,9,12,10,8,2,0,2,1,1,9,11,8,10,12";

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_langford-forge"));
    cmd.args(args)
        .env_remove("LANGFORD_FORGE_GUARD")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_with(args, stdin, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const PERFECT_TABLE: &str = r#"{"1,5":{"n":3,"index":0},"2,4":{"n":3,"index":0},"3,6":{"n":3,"index":1},"7,8":{"n":3,"index":1}}"#;

#[test]
fn verify_prints_order_and_defect() {
    let o = run(
        &["verify", "--kind", "langford", "--defect", "2"],
        PERFECT_12,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"valid\":true,\"m\":12,\"d\":2}\n"
    );
}

#[test]
fn verify_extended_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "seqs.txt", "1,1,2,0,2\n2,0,2,1,1\n\n");
    let o = run(&["verify", "--kind", "extended", "--in", &f], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"valid\":true,\"m\":2,\"zero_pos\":4,\"hooked\":true,\"trivial\":false}\n\
         {\"format\":1,\"valid\":true,\"m\":2,\"zero_pos\":2,\"hooked\":false,\"trivial\":false}\n"
    );
    let o = run(
        &["verify", "--kind", "skolem", "--in", "/nonexistent/x"],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "Io");
}

#[test]
fn verify_failure_is_machine_readable() {
    let o = run(
        &["verify", "--kind", "langford", "--defect", "1"],
        PERFECT_12,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let e = stderr_json(&o);
    assert_eq!(e["error"], "BadSymbol");
    assert!(e["detail"].is_object());
    let o = run(&["verify", "--kind", "skolem"], "1,1,x\n");
    assert_eq!(stderr_json(&o)["error"], "Parse");
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--kind", "langford", "--extra"][..],
        &["verify"],
        &["enumerate", "--family", "Tn", "--n", "3"],
        &["count", "--bound", "skolem-exponential"],
        &[
            "count",
            "--bound",
            "skolem-exponential",
            "--m",
            "4",
            "--n",
            "3",
        ],
        &["census", "--m", "4", "--n", "3", "--include-trivial"],
        &["expand", "--n", "3"],
    ] {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn enumerate_s3_in_canonical_order() {
    let o = run(&["enumerate", "--family", "Sn", "--n", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0]["arcs"],
        serde_json::json!([[1, 2], [2, 3], [3, 1]])
    );
    assert_eq!(
        lines[1]["arcs"],
        serde_json::json!([[1, 3], [2, 1], [3, 2]])
    );

    let o = run(
        &["enumerate", "--family", "RSn", "--n", "3", "--index", "1"],
        "",
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["arcs"], serde_json::json!([[1, 2], [2, 1], [3, 3]]));
    let o = run(
        &["enumerate", "--family", "RSn", "--n", "3", "--index", "2"],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "IndexOutOfRange");
    assert_eq!(
        stdout(&run(&["enumerate", "--family", "Sn", "--n", "7"], ""))
            .lines()
            .count(),
        28
    );
}

#[test]
fn expand_with_table_reproduces_the_perfect_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "h.json", PERFECT_TABLE);
    let spec = format!("table:{t}");
    let o = run(
        &["expand", "--n", "3", "--defect", "1", "--h", &spec],
        "4,2,3,2,4,3,1,1\n",
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o), format!("{PERFECT_12}\n"));
    let seq = write(dir.path(), "s.txt", "4,2,3,2,4,3,1,1");
    let o = run(&["expand", "--in", &seq, "--n", "3", "--h", &spec], "");
    assert_eq!(stdout(&o), format!("{PERFECT_12}\n"));
}

#[test]
fn expand_extended_with_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = r#"{
        "1,2": {"order":5,"arcs":[[1,3],[3,4],[4,2],[2,1],[5,5]]},
        "3,5": {"order":5,"arcs":[[1,2],[2,1],[3,5],[4,4],[5,3]]},
        "L": {"choice":1}
    }"#;
    let spec = format!("table:{}", write(dir.path(), "h.json", table));
    let o = run(&["expand", "--n", "5", "--h", &spec], "1,1,2,0,2\n");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o), format!("{EXTENDED_12}\n"));
    let check = run(&["verify", "--kind", "extended"], &stdout(&o));
    assert!(stdout(&check).contains("\"zero_pos\":17"));

    // the flag overrides the table, moving the zero to the other loop vertex
    let o = run(
        &["expand", "--n", "5", "--h", &spec, "--loop-choice", "2"],
        "1,1,2,0,2\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<u32> = stdout(&o)
        .trim()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(v.iter().position(|&x| x == 0), Some(15 + 4 - 1));
}

#[test]
fn loop_image_policy() {
    let dir = tempfile::tempdir().unwrap();
    // a loop-plus-digons member of RS_7 other than the two cycle rotations
    let other = r#"{"1,2":{"n":7,"index":0},
                    "L":{"order":7,"arcs":[[1,2],[2,1],[3,5],[4,7],[5,3],[6,6],[7,4]]}}"#;
    let spec = format!("table:{}", write(dir.path(), "h.json", other));
    let strict = run(&["expand", "--n", "7", "--h", &spec], "1,1,0\n");
    assert_eq!(strict.status.code(), Some(1));
    assert_eq!(stderr_json(&strict)["error"], "NonCanonicalLoop");
    let loose = run(
        &["expand", "--n", "7", "--h", &spec, "--permissive-loop"],
        "1,1,0\n",
    );
    assert_eq!(loose.status.code(), Some(0));
    let check = run(&["verify", "--kind", "extended"], &stdout(&loose));
    assert!(stdout(&check).contains("\"m\":10,\"zero_pos\":20"));

    // a rotation family member without the loop-plus-digons shape
    let shapeless = r#"{"1,2":{"n":7,"index":0},"L":{"n":7,"index":1}}"#;
    let spec = format!("table:{}", write(dir.path(), "h2.json", shapeless));
    for extra in [None, Some("--permissive-loop")] {
        let mut args = vec!["expand", "--n", "7", "--h", &spec];
        args.extend(extra);
        let o = run(&args, "1,1,0\n");
        assert_eq!(stderr_json(&o)["error"], "NotLoopDigon");
    }
}

#[test]
fn table_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = format!("table:{}", write(dir.path(), "empty.json", ""));
    let o = run(&["expand", "--n", "3", "--h", &empty], "4,2,3,2,4,3,1,1\n");
    assert_eq!(o.status.code(), Some(1));
    let e = stderr_json(&o);
    assert_eq!(e["error"], "MissingArc");
    assert_eq!(e["detail"], serde_json::json!({"u":1,"v":5}));

    let stray = format!(
        "table:{}",
        write(
            dir.path(),
            "l.json",
            r#"{"1,2":{"n":3,"index":0},"L":{"choice":1}}"#
        )
    );
    let o = run(&["expand", "--n", "3", "--h", &stray], "1,1\n");
    assert_eq!(stderr_json(&o)["error"], "BadIndex");

    let o = run(&["expand", "--n", "3", "--h", "bogus"], "1,1\n");
    assert_eq!(stderr_json(&o)["error"], "BadHSpec");
    let o = run(&["expand", "--n", "4", "--h", "constant:0"], "1,1\n");
    assert_eq!(stderr_json(&o)["error"], "EvenOrder");
    let o = run(&["expand", "--n", "3", "--h", "constant:2"], "1,1\n");
    assert_eq!(stderr_json(&o)["error"], "IndexOutOfRange");
}

#[test]
fn random_assignments_are_reproducible() {
    let args = ["expand", "--n", "5", "--defect", "1", "--h", "random:2024"];
    let a = run(&args, "4,2,3,2,4,3,1,1\n");
    let b = run(&args, "4,2,3,2,4,3,1,1\n");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let check = run(
        &["verify", "--kind", "langford", "--defect", "3"],
        &stdout(&a),
    );
    assert_eq!(check.status.code(), Some(0));
    let seeds: std::collections::BTreeSet<Vec<u8>> = (0..20)
        .map(|s| {
            run(
                &["expand", "--n", "5", "--h", &format!("random:{s}")],
                "4,2,3,2,4,3,1,1\n",
            )
            .stdout
        })
        .collect();
    assert!(seeds.len() > 1);
}

#[test]
fn every_command_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let base = write(
        dir.path(),
        "base.json",
        r#"{"order":3,"arcs":[[1,2],[3,3]]}"#,
    );
    let cases: Vec<Vec<String>> = [
        "enumerate --family RSn --n 7",
        "rotations --n 9",
        "count --bound langford-product --m 4 --n 3 --defect 1",
        "census --m 2 --n 3 --extended --include-trivial --list",
    ]
    .iter()
    .map(|s| s.split(' ').map(String::from).collect())
    .chain(std::iter::once(
        ["product", "--base", &base, "--n", "3", "--h", "random:9"]
            .map(String::from)
            .to_vec(),
    ))
    .collect();
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args, "");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, run(&args, "").stdout, "{args:?}");
    }
}

#[test]
fn rotations_lines() {
    let o = run(&["rotations", "--n", "3"], "");
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"name\":\"R1\",\"n\":3,\"loop\":3,\"labeling\":[1,3,2],\"order\":3,\"arcs\":[[1,2],[2,1],[3,3]]}\n\
         {\"format\":1,\"name\":\"R2\",\"n\":3,\"loop\":1,\"labeling\":[1,3,2],\"order\":3,\"arcs\":[[1,1],[2,3],[3,2]]}\n"
    );
    assert_eq!(run(&["rotations", "--n", "4"], "").status.code(), Some(1));
}

#[test]
fn product_command() {
    let dir = tempfile::tempdir().unwrap();
    let base = write(dir.path(), "base.json", r#"{"order":2,"arcs":[[1,2]]}"#);
    let o = run(
        &["product", "--base", &base, "--n", "3", "--h", "constant:0"],
        "",
    );
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"order\":6,\"arcs\":[[1,4],[2,6],[3,5]]}\n"
    );
    let t = write(
        dir.path(),
        "t.json",
        r#"{"1,2":{"order":3,"arcs":[[1,3],[3,1]]}}"#,
    );
    let o = run(
        &[
            "product",
            "--base",
            &base,
            "--n",
            "3",
            "--h",
            &format!("table:{t}"),
        ],
        "",
    );
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"order\":6,\"arcs\":[[1,6],[3,4]]}\n"
    );
    let bad = write(dir.path(), "bad.json", r#"{"order":2,"arcs":[[1,5]]}"#);
    let o = run(
        &["product", "--base", &bad, "--n", "3", "--h", "constant:0"],
        "",
    );
    assert_eq!(stderr_json(&o)["error"], "BadDigraph");
}

#[test]
fn count_reports() {
    let o = run(&["count", "--bound", "skolem-exponential", "--m", "4"], "");
    assert_eq!(
        stdout(&o),
        "{\"format\":1,\"params\":{\"m\":4,\"d\":1,\"output_order\":4},\"exact\":\"6\",\"bound\":\"2\",\"bound_name\":\"skolem-exponential\",\"satisfied\":true,\"in_range\":true}\n"
    );
    let o = run(&["count", "--bound", "cycle-labelings", "--n", "9"], "");
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["exact"], "31");
    assert_eq!(v["in_range"], false);
    let o = run(&["count", "--bound", "skolem-exponential", "--m", "6"], "");
    assert_eq!(stderr_json(&o)["error"], "BadResidue");
    let o = run(
        &[
            "count",
            "--bound",
            "extended-product",
            "--m",
            "2",
            "--n",
            "3",
        ],
        "",
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["factors"]["epsilon_m_nontrivial"], "2");
    assert_eq!(v["params"]["output_order"], 7);
}

#[test]
fn census_report_and_guard() {
    let o = run(&["census", "--m", "4", "--n", "3"], "");
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["generated"], 96);
    assert_eq!(v["distinct"], 96);
    assert_eq!(v["injective"], true);
    assert_eq!(v["bound"], "96");

    let o = run(&["census", "--m", "4", "--n", "3", "--list"], "");
    assert_eq!(stdout(&o).lines().count(), 96);

    let o = run_with(
        &["census", "--m", "4", "--n", "3"],
        "",
        &[("LANGFORD_FORGE_GUARD", "50")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "TooLarge");
    let o = run_with(
        &["census", "--m", "4", "--n", "3"],
        "",
        &[("LANGFORD_FORGE_GUARD", "lots")],
    );
    assert_eq!(stderr_json(&o)["error"], "BadGuard");
}
