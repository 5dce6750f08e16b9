use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn semitop(args: &[&str], cwd: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semitop"))
        .args(args)
        .current_dir(cwd)
        .env_remove("SEMITOP_COLOR")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check(kind: &str, file: &str) -> Output {
    let dir = tempfile::tempdir().unwrap();
    semitop(&["check", kind, data(file).to_str().unwrap()], dir.path())
}

#[test]
fn catalog_lists_every_family() {
    let dir = tempfile::tempdir().unwrap();
    let o = semitop(&["catalog"], dir.path());
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for id in ["exB", "odd_chain", "right_simple_zero", "brandt", "luke"] {
        assert!(out.contains(id), "{id} missing from\n{out}");
    }
    let o = semitop(&["--format", "json", "catalog", "luke"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["families"].as_array().unwrap().len(), 1);
    assert_eq!(v["default_window"], 6);
}

#[test]
fn unknown_instance_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = semitop(&["catalog", "nope"], dir.path());
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(code(&semitop(&["obstruct", "nope"], dir.path())), 1);
}

#[test]
fn bad_arguments_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&semitop(&["frobnicate"], dir.path())), 1);
    assert_eq!(code(&semitop(&["obstruct", "exB", "--window", "3"], dir.path())), 1);
    assert_eq!(code(&semitop(&["obstruct", "exB", "--window", "6", "--guard", "6"], dir.path())), 1);
    assert_eq!(code(&semitop(&["--help"], dir.path())), 0);
}

#[test]
fn obstruct_writes_a_certificate_and_controls_fail() {
    let dir = tempfile::tempdir().unwrap();
    let o = semitop(&["obstruct", "exB"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("PASS obstruction certified"));
    let written = std::fs::read_to_string(dir.path().join("exB-w6.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["verdict"], "obstruction");
    assert_eq!(v["instance"], "exB");

    let o = semitop(&["obstruct", "exB-discrete", "--out", "-"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("FAIL no obstruction"));
    assert!(!dir.path().join("exB-discrete-w6.json").exists());
}

#[test]
fn every_family_certifies_from_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    for (id, group) in [("odd_chain", "Z2"), ("brandt", "Z2"), ("luke", "Z2"), ("right_simple_zero", "S3"), ("right_simple_zero", "R2")] {
        let o = semitop(&["obstruct", id, "--group", group, "--window", "5", "--out", "-"], dir.path());
        assert_eq!(code(&o), 0, "{id} {group}");
    }
}

#[test]
fn instance_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let o = semitop(&["--format", "json", "obstruct", data("exB-w6.instance.json").to_str().unwrap(), "--out", "-"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "obstruction");
}

#[test]
fn obstruct_json_is_byte_stable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for id in ["exB", "luke", "brandt-discrete"] {
        let oa = semitop(&["--format", "json", "obstruct", id, "--out", "cert.json"], a.path());
        let ob = semitop(&["--format", "json", "obstruct", id, "--out", "cert.json"], b.path());
        assert_eq!(oa.stdout, ob.stdout, "{id}");
        let fa = std::fs::read(a.path().join("cert.json")).unwrap();
        let fb = std::fs::read(b.path().join("cert.json")).unwrap();
        assert_eq!(fa, fb, "{id}");
    }
}

#[test]
fn checks_report_holds_and_fails() {
    let o = check("assoc", "bad_table.json");
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(code(&check("assoc", "z2.json")), 0);
    assert_eq!(code(&check("inverse", "i2.json")), 0);
    assert_eq!(code(&check("clifford", "i2.json")), 2);
    assert_eq!(code(&check("clifford", "z2.json")), 0);
    assert_eq!(code(&check("ditop", "brandt.json")), 2);
    assert_eq!(code(&check("ditop", "z2.json")), 0);
    assert_eq!(code(&check("cong-basis", "brandt.json")), 2);
    assert_eq!(code(&check("chain-finite", "chain3.json")), 0);
    assert_eq!(code(&check("u2", "chain3.json")), 0);
    assert_eq!(code(&check("chain-finite", "i3.json")), 1);
    let o = check("vp", "g0_diag.json");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("group_with_zero"));
}

#[test]
fn malformed_inputs_exit_one() {
    assert_eq!(code(&check("inverse", "nonassoc.json")), 1);
    assert_eq!(code(&check("u", "i2.json")), 1);
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&semitop(&["check", "assoc", "missing.json"], dir.path())), 1);
    assert_eq!(code(&semitop(&["embed", "cayley", data("nonassoc.json").to_str().unwrap()], dir.path())), 1);
}

#[test]
fn embeddings_verify() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = data("z2.json");
    let i2 = data("i2.json");
    let z3r = data("z3_retract.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["embed", "cayley", z2.to_str().unwrap()],
        vec!["embed", "wp", i2.to_str().unwrap()],
        vec!["embed", "product", z2.to_str().unwrap(), i2.to_str().unwrap()],
        vec!["embed", "adjoin", z2.to_str().unwrap(), "--with", "identity"],
        vec!["embed", "embcl", i2.to_str().unwrap()],
        vec!["embed", "clifford-product", z2.to_str().unwrap()],
        vec!["embed", "group-restrict", z3r.to_str().unwrap()],
    ];
    for args in &runs {
        let o = semitop(args, dir.path());
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!stdout(&o).contains("FAIL"), "{args:?}");
    }
    // I2 is not Clifford
    assert_eq!(code(&semitop(&["embed", "clifford-product", i2.to_str().unwrap()], dir.path())), 1);
}

#[test]
fn embedding_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("wp.json");
    let o = semitop(&["embed", "wp", data("i3.json").to_str().unwrap(), "--out", out.to_str().unwrap()], dir.path());
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["images"].as_array().unwrap().len(), 34);
    assert_eq!(v["target"], "in");
}
