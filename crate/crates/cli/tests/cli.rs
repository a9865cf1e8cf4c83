use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn spiderstar(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_spiderstar"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    let doc: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&doc).expect("schema compiles")
}

fn assert_valid(schema: &jsonschema::JSONSchema, doc: &Value) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{doc} fails schema: {msgs:?}");
    }
}

#[test]
fn stars_tsv_matches_path_values() {
    let r = spiderstar(&["stars", "--spider", "2,1", "--t", "2", "--format", "tsv"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "vertex\tcoord\tcount\n0\thead\t1\n1\t(1,1)\t1\n2\t(1,2)\t2\n3\t(2,1)\t2\n"
    );
}

#[test]
fn stars_json_validates() {
    let s = schema("star_table.schema.json");
    let r = spiderstar(&["stars", "--spider", "1,1,1", "--t", "2", "--format", "json"]);
    assert_eq!(r.code, 0);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_valid(&s, &doc);
    assert_eq!(doc["vertices"][0]["count"], 0);
    assert_eq!(doc["total"], 3);

    let r = spiderstar(&["stars", "--spider", "2,1", "--t", "9", "--format", "json"]);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_valid(&s, &doc);
    assert_eq!(doc["total"], 0);
}

#[test]
fn stars_from_tree_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("p4.txt");
    fs::write(&tree, "n 4\n0 1\n1 2\n2 3\n").unwrap();
    let out = dir.path().join("out.tsv");
    let r = spiderstar(&[
        "stars",
        "--tree",
        tree.to_str().unwrap(),
        "--t",
        "2",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(out).unwrap(),
        "vertex\tcoord\tcount\n0\t-\t2\n1\t-\t1\n2\t-\t1\n3\t-\t2\n"
    );
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["stars", "--spider", "2,0", "--t", "1"][..],
        &["stars", "--spider", "x", "--t", "1"],
        &["stars", "--spider", "2", "--t", "0"],
        &["stars", "--t", "1"],
        &["stars", "--spider", "2", "--tree", "f", "--t", "1"],
        &["stars", "--tree", "/nonexistent/tree.txt", "--t", "1"],
        &["verify", "--theorem", "4", "--spider", "2"],
        &["verify", "--theorem", "1", "--spider", "2", "--t", "5"],
        &["verify", "--theorem", "1", "--spider", "2", "--t", "3..1"],
        &["ekr", "--spider", "1,1,1", "--t", "4"],
        &["order", "--spider", ""],
    ] {
        let r = spiderstar(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn overflow_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("star.txt");
    let mut text = String::from("n 140\n");
    for v in 1..140 {
        text.push_str(&format!("0 {v}\n"));
    }
    fs::write(&tree, text).unwrap();
    let r = spiderstar(&["stars", "--tree", tree.to_str().unwrap(), "--t", "70"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn verify_examples_pass() {
    let r = spiderstar(&[
        "verify",
        "--theorem",
        "all",
        "--spider",
        "3,1,2,4",
        "--t",
        "1..4",
    ]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("# theorem 3 uses spider order 1,3,4,2\n"));
    assert!(r
        .stdout
        .lines()
        .filter(|l| !l.starts_with('#'))
        .all(|l| l.starts_with("PASS ")));
    assert!(r.stdout.ends_with("0 failed\n"));

    let r = spiderstar(&["verify", "--theorem", "3", "--spider", "1,2", "--t", "2"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("PASS theorem=3 spider=1,2 t=2 i=1 j=2 domain=2 image=2 target=2"));

    let r = spiderstar(&["verify", "--theorem", "1", "--spider", "1", "--t", "1"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("PASS theorem=1 spider=1 t=1 vacuous\n"));
}

#[test]
fn verify_json_and_report_file_validate() {
    let s = schema("injection_reports.schema.json");
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let r = spiderstar(&[
        "verify",
        "--theorem",
        "all",
        "--spider",
        "2,3,1",
        "--format",
        "json",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_valid(&s, &doc);
    assert_eq!(fs::read_to_string(report).unwrap(), r.stdout);
    let reports = doc.as_array().unwrap();
    assert!(reports
        .iter()
        .any(|r| r["theorem"] == 2 && r["j"].is_null()));
    assert!(reports
        .iter()
        .any(|r| r["theorem"] == 3 && r["spider"] == "1,3,2"));
}

#[test]
fn ekr_examples() {
    let r = spiderstar(&["ekr", "--spider", "2,1", "--t", "2"]);
    assert_eq!(r.code, 0);
    let row: Vec<&str> = r.stdout.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[0], "spider:2,1");
    assert_eq!(row[7], "true");

    let s = schema("verdict_line.schema.json");
    let r = spiderstar(&["ekr", "--spider", "1,1,1", "--t", "2", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.stdout.trim()).unwrap();
    assert_valid(&s, &v);
    assert_eq!(v["is_t_ekr"], false);
    assert_eq!(v["in_conjecture_range"], false);
    assert_eq!(v["max_intersecting"], 3);
    assert_eq!(v["max_star"], 2);
}

#[test]
fn ekr_budget_is_recorded_not_fatal() {
    let r = spiderstar(&[
        "ekr",
        "--spider",
        "2,2,2",
        "--t",
        "1..3",
        "--budget-family",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 0);
    let s = schema("verdict_line.schema.json");
    let lines: Vec<Value> = r
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    for l in &lines {
        assert_valid(&s, l);
    }
    assert!(lines.iter().any(|l| l["status"] == "budget-exceeded"));
}

#[test]
fn scan_json_lines_validate() {
    let s = schema("verdict_line.schema.json");
    let r = spiderstar(&["scan", "--max-n", "8", "--format", "json"]);
    assert_eq!(r.code, 0);
    let lines: Vec<Value> = r
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    for l in &lines {
        assert_valid(&s, l);
    }
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["trees"], 1 + 2 + 3 + 5 + 7 + 11 + 15);
    assert_eq!(summary["verdicts"], lines.len() - 1);
    assert_eq!(summary["reportable"], 0);
}

#[test]
fn scan_directory_of_tree_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a_p4.txt"), "n 4\n0 1\n1 2\n2 3\n").unwrap();
    fs::write(dir.path().join("b_bad.txt"), "n 3\n0 1\n").unwrap();
    fs::write(dir.path().join("c_k13.txt"), "n 4\n0 1\n0 2\n0 3\n").unwrap();
    let r = spiderstar(&["scan", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].contains("a_p4.txt\t1\t2\t2\t1\t1"));
    assert!(lines[2].contains("b_bad.txt") && lines[2].contains("\tinvalid\t"));
    assert_eq!(
        lines[3],
        "# summary trees=3 verdicts=1 verified=1 reportable=0 budget_exceeded=0 invalid=1"
    );
}

#[test]
fn order_prints_normalised_descriptor() {
    let r = spiderstar(&["order", "--spider", "3,1,2,4"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1,3,4,2\n"));
    let r = spiderstar(&["order", "--spider", "2,2,3"]);
    assert_eq!(r.stdout, "3,2,2\n");
}
