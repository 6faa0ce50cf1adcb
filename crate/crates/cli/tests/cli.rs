use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nree8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nree8"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn row_dih6_16_json() {
    let o = nree8(&["row", "--name", "DIH6_16", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["row"], "DIH6(16)");
    assert_eq!(v["pass"], true);
    assert_eq!(v["computed"]["smith"], "1^8 3^8");
    assert_eq!(v["source"], "builder");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn row_with_mog_output() {
    let o = nree8(&["row", "--name", "DIH6(14)", "--mog"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("DIH6(14): PASS"));
    assert!(s.lines().any(|l| l.starts_with("M:")));
    assert!(s.lines().filter(|l| l.trim_start().starts_with('[')).count() >= 4 * 16);
}

#[test]
fn export_then_info_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ee8.json");
    let o = nree8(&["export", "EE8", "-o", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let info = json(&nree8(&["lattice", "info", path_str(&file), "--json"]));
    assert_eq!(info["det"], "256");
    assert_eq!(info["rootless"], true);
    assert_eq!(info["smith"], "2^8");
    let shown = json(&nree8(&["catalog", "show", "EE8"]));
    for key in ["rank", "det", "smith", "integral", "even", "rootless", "min_norm"] {
        assert_eq!(info[key], shown["certificate"][key], "{key}");
    }
    assert_eq!(shown["certificate"]["norm_counts"]["4"], 240);
}

#[test]
fn export_row_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("l.json");
    let o = nree8(&["export", "DIH6(16)", "--part", "l", "-o", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let info = json(&nree8(&["lattice", "info", path_str(&file), "--json"]));
    assert_eq!(info["rank"], 16);
    assert_eq!(info["smith"], "1^8 3^8");
}

#[test]
fn shortvec_profile() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("e8.json");
    assert!(nree8(&["export", "E8", "-o", path_str(&file)]).status.success());
    let v = json(&nree8(&["shortvec", path_str(&file), "--bound", "4", "--json"]));
    assert_eq!(v["2"], 240);
    assert_eq!(v["4"], 2160);
}

#[test]
fn matrix_text_basis_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a2.txt");
    std::fs::write(&file, "2 3\n1 -1 0\n0 1 -1\n").unwrap();
    let info = json(&nree8(&["lattice", "info", path_str(&file), "--json"]));
    assert_eq!(info["det"], "3");
    assert_eq!(info["rootless"], false);
    let gram = nree8(&["lattice", "gram", path_str(&file)]);
    assert_eq!(stdout(&gram), "2 2\n2 -1\n-1 2\n");
}

#[test]
fn malformed_files_exit_2_naming_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let txt = dir.path().join("bad.txt");
    std::fs::write(&txt, "2 2\n1 0\n0 x\n").unwrap();
    let o = nree8(&["lattice", "info", path_str(&txt)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let js = dir.path().join("bad.json");
    std::fs::write(&js, "{\n  \"ambient_dim\": 2,\n  \"scale_num\": 1,\n  \"scale_den\": 1,\n  \"basis\": [[1, 0], [0 1]]\n}\n").unwrap();
    let o = nree8(&["lattice", "info", path_str(&js)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nree8(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nree8(&["row"]).status.code(), Some(2));
    assert_eq!(nree8(&["row", "--name", "DIH7(3)"]).status.code(), Some(2));
    assert_eq!(nree8(&["catalog", "show", "E9"]).status.code(), Some(2));
}

#[test]
fn verify_table_without_witnesses_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = nree8(&["verify-table", "--fixtures", path_str(dir.path())]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("no witness"));
    assert!(s.lines().any(|l| l.starts_with("DIH6(16)") && l.contains("PASS")));
}

#[test]
fn verify_table_with_bundled_fixtures_passes() {
    let o = nree8(&["verify-table", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 11);
    assert_eq!(v["pass"], true);
}

#[test]
fn fixture_env_var_relocates_the_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nree8"))
        .args(["row", "--name", "DIH12(16)"])
        .env("NREE8_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no witness"));
}

#[test]
fn search_is_reproducible_and_writes_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["search", "--row", "DIH4(12)", "--seed", "3", "--budget", "300"];
    let a = nree8(&args);
    let b = nree8(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);

    let mut with_write = args.to_vec();
    with_write.extend(["--write", "--fixtures", path_str(dir.path())]);
    assert!(nree8(&with_write).status.success());
    let o = nree8(&["row", "--name", "DIH4(12)", "--fixtures", path_str(dir.path()), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["source"].as_str().unwrap().starts_with("fixture"));
}

#[test]
fn search_outside_leech_is_a_usage_error() {
    let o = nree8(&["search", "--row", "DIH4(15)", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not embed"));
}
