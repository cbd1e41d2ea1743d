use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mics"))
        .args(args)
        .env_remove("MICS_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = mics(&full);
    assert!(
        matches!(out.status.code(), Some(0 | 1)),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn tsv_rows(args: &[&str]) -> usize {
    let mut full = args.to_vec();
    full.extend(["--format", "tsv"]);
    let out = mics(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().expect("header");
    let cols = header.split('\t').count();
    lines
        .inspect(|l| assert_eq!(l.split('\t').count(), cols, "ragged row {l:?}"))
        .count()
}

fn schema(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "schema"]
        .iter()
        .collect::<PathBuf>()
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let validator = jsonschema::validator_for(&schema(name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn strs(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn show_reports_match_known_systems() {
    let a3 = json(&["show", "--type", "A", "--rank", "3"]);
    assert_eq!(a3["roots"].as_array().unwrap().len(), 6);
    assert_eq!(a3["highest_root"], "[1 1 1]");
    assert_eq!(a3["coxeter_number"], 4);

    let f4 = json(&["show", "--type", "F", "--rank", "4"]);
    assert_eq!(f4["roots"].as_array().unwrap().len(), 24);
    assert_eq!(f4["highest_root"], "[2 4 3 2]");
    assert_eq!(f4["coxeter_number"], 12);
    // θ = ϖ1 in vo labels, so H is the roots with positive α1 coefficient
    let in_h = f4["roots"].as_array().unwrap().iter().filter(|r| r["in_h"] == true).count();
    assert_eq!(in_h, 15);

    let e6 = json(&["show", "--type", "E", "--rank", "6"]);
    let levi1 = &e6["levi"][0]["components"];
    assert_eq!(levi1.as_array().unwrap().len(), 1);
    assert_eq!(levi1[0]["type"], "D5");
    assert_eq!(levi1[0]["coxeter_number"], 8);
}

#[test]
fn labelings_only_relabel() {
    let vo = json(&["show", "--type", "E", "--rank", "7"]);
    let bo = json(&["show", "--type", "E", "--rank", "7", "--labeling", "bourbaki"]);
    assert_eq!(vo["roots"].as_array().unwrap().len(), 63);
    assert_eq!(bo["roots"].as_array().unwrap().len(), 63);
    assert_eq!(bo["labeling"], "bourbaki");
    assert_eq!(bo["highest_root"], "[2 2 3 4 3 2 1]");
}

#[test]
fn ideals_reports() {
    let a2 = json(&["ideals", "--type", "A", "--rank", "2"]);
    assert_eq!(a2["count"], 4);

    let f4 = json(&["ideals", "--type", "F", "--rank", "4"]);
    assert_eq!(f4["count"], 16);
    let mut sizes: Vec<u64> = f4["maximal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["size"].as_u64().unwrap())
        .collect();
    sizes.sort();
    assert_eq!(sizes, [8, 9]);

    let e6 = json(&["ideals", "--type", "E", "--rank", "6"]);
    assert_eq!(e6["count"], 64);
    assert_eq!(e6["maximal"].as_array().unwrap().len(), 6);
    // fibres are indexed by the roots of H; the zero ideal has none
    let fibred = e6["ideals"].as_array().unwrap().iter().filter(|i| !i["fiber"].is_null()).count();
    assert_eq!(fibred, 63);
}

#[test]
fn mics_reports() {
    let a4 = json(&["mics", "--type", "A", "--rank", "4", "--alpha", "1"]);
    assert_eq!(a4["construction"], "canonical-ade");
    assert_eq!(strs(&a4["words"]), ["s1", "s1 s2", "s1 s2 s3", "s1 s2 s3 s4"]);
    assert_eq!(a4["essential"].as_array().unwrap().len(), 10);
    assert_eq!(a4["defect"], 6);
    assert_eq!(a4["checks"]["complete"], true);
    assert_eq!(a4["checks"]["minimal"], true);
    assert_eq!(a4["checks"]["thm41"], true);
    assert!(a4["checks"]["conj51"].is_null());

    let e6 = json(&["mics", "--type", "E", "--rank", "6", "--alpha", "6"]);
    assert_eq!(e6["size"], 11);
    assert_eq!(e6["defect"], 10);
    assert_eq!(e6["checks"]["thm45"], true);
    assert_eq!(e6["checks"]["conj52"], true);

    let f4 = json(&["mics", "--type", "F", "--rank", "4", "--f4", "1,4"]);
    assert_eq!(f4["construction"], "f4-adhoc");
    assert_eq!(f4["alpha"], "1,4");
    assert_eq!(f4["size"], 6);
    assert_eq!(
        strs(&f4["essential"]),
        [
            "[0 0 0 1]", "[1 0 0 0]", "[1 2 1 1]", "[1 2 2 1]", "[1 3 2 1]", "[2 2 2 1]",
            "[2 3 2 1]", "[2 4 2 1]", "[2 4 3 1]", "[2 4 3 2]"
        ]
    );
    let total: u64 = f4["multiplicities"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    let lengths: u64 = f4["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["length"].as_u64().unwrap())
        .sum();
    assert_eq!(total, lengths);
}

#[test]
fn outputs_validate_against_schemas() {
    let cases: [(&str, &[&str]); 8] = [
        ("show", &["show", "--type", "G", "--rank", "2"]),
        ("show", &["show", "--type", "C", "--rank", "3", "--labeling", "bourbaki"]),
        ("ideals", &["ideals", "--type", "B", "--rank", "3"]),
        ("ideals", &["ideals", "--type", "A", "--rank", "1"]),
        ("mics", &["mics", "--type", "D", "--rank", "5", "--alpha", "3"]),
        ("mics", &["mics", "--type", "F", "--rank", "4", "--f4", "2,3"]),
        ("conjectures", &["conjectures", "--type", "D", "--rank", "4..6"]),
        ("conjectures", &["conjectures", "--type", "A", "--rank", "3"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &json(args));
    }
}

#[test]
fn tsv_rows_match_json_arrays() {
    let show = ["show", "--type", "E", "--rank", "6"];
    assert_eq!(tsv_rows(&show), json(&show)["roots"].as_array().unwrap().len());

    let ideals = ["ideals", "--type", "D", "--rank", "5"];
    assert_eq!(tsv_rows(&ideals), json(&ideals)["ideals"].as_array().unwrap().len());

    let fam = ["mics", "--type", "E", "--rank", "6", "--alpha", "3"];
    assert_eq!(tsv_rows(&fam), json(&fam)["members"].as_array().unwrap().len());

    let sweep = ["conjectures", "--type", "D", "--rank", "4..7"];
    let rows: usize = json(&sweep)["systems"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["rows"].as_array().unwrap().len())
        .sum();
    assert_eq!(tsv_rows(&sweep), rows);
}

#[test]
fn identical_runs_are_byte_identical() {
    for format in ["json", "tsv", "pretty"] {
        let args = ["conjectures", "--type", "E", "--rank", "6..7", "--format", format];
        let a = mics(&args);
        let b = mics(&args);
        assert_eq!(a.stdout, b.stdout, "{format}");
        assert_eq!(a.status.code(), b.status.code());
    }
    let serial = Command::new(env!("CARGO_BIN_EXE_mics"))
        .args(["conjectures", "--type", "D", "--format", "json"])
        .env("MICS_THREADS", "1")
        .output()
        .unwrap();
    let parallel = Command::new(env!("CARGO_BIN_EXE_mics"))
        .args(["conjectures", "--type", "D", "--format", "json"])
        .env("MICS_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn out_flag_writes_the_same_report() {
    let dir = std::env::temp_dir().join(format!("mics-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.json");
    let out = mics(&["show", "--type", "A", "--rank", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, mics(&["show", "--type", "A", "--rank", "3", "--format", "json"]).stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| mics(args).status.code().unwrap();

    assert_eq!(code(&["show", "--type", "A", "--rank", "3"]), 0);
    assert_eq!(code(&["conjectures", "--type", "D", "--rank", "4..6"]), 0);
    assert_eq!(code(&["conjectures", "--type", "A", "--rank", "5"]), 0);
    // E6 contains a family whose essential set leaves I(α)_max ∪ H
    assert_eq!(code(&["conjectures", "--type", "E", "--rank", "6"]), 1);

    assert_eq!(code(&["show", "--type", "E", "--rank", "9"]), 2);
    assert_eq!(code(&["show", "--type", "Q", "--rank", "3"]), 2);
    assert_eq!(code(&["show", "--type", "D", "--rank", "2"]), 2);
    assert_eq!(code(&["show", "--type", "A", "--rank", "2..4"]), 2);
    assert_eq!(code(&["mics", "--type", "A", "--rank", "3", "--alpha", "4"]), 2);
    assert_eq!(code(&["mics", "--type", "A", "--rank", "3", "--alpha", "0"]), 2);
    assert_eq!(code(&["mics", "--type", "A", "--rank", "3"]), 2);
    assert_eq!(code(&["mics", "--type", "F", "--rank", "4", "--f4", "3,4"]), 2);
    assert_eq!(code(&["show", "--type", "A", "--rank", "3", "--format", "xml"]), 2);
    assert_eq!(code(&["conjectures", "--type", "B"]), 2);
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_mics"))
        .args(["show", "--type", "A", "--rank", "2"])
        .env("MICS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));

    assert_eq!(code(&["mics", "--type", "B", "--rank", "3", "--alpha", "1"]), 3);
    assert_eq!(code(&["mics", "--type", "G", "--rank", "2", "--alpha", "2"]), 3);
    assert_eq!(code(&["mics", "--type", "E", "--rank", "6", "--f4", "1,3"]), 3);
    assert_eq!(code(&["ideals", "--type", "A", "--rank", "11"]), 3);
    assert_eq!(code(&["conjectures", "--type", "B", "--rank", "3"]), 3);
}

#[test]
fn errors_go_to_stderr() {
    let out = mics(&["mics", "--type", "C", "--rank", "3", "--alpha", "3"]);
    assert!(out.stdout.is_empty());
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.starts_with("mics: "), "{msg}");
}
