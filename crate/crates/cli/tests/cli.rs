//! The `invar` binary: output, exit codes and the on-disk cache.

use std::process::{Command, Output};

use serde_json::Value;

fn invar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invar"))
        .args(args)
        .env_remove("INVAR_CACHE_DIR")
        .env_remove("INVAR_CONFIG")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = invar(&all);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).expect("json output"))
}

#[test]
fn steenrod_square_of_d2_is_d3() {
    let (code, v) = json(&["steenrod", "1", "w^2+t*w+t^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["result"], "w^2*t+w*t^2");
    let (_, v) = json(&["steenrod", "2", "d2"]);
    // Sq^2 of a degree-2 class is its square.
    assert_eq!(v["data"]["result"], "w^4+w^2*t^2+t^4");
}

#[test]
fn exit_codes() {
    assert_eq!(invar(&["invariants", "nosuch"]).status.code(), Some(2));
    assert_eq!(invar(&["series", "nosuch"]).status.code(), Some(2));
    assert_eq!(invar(&["perm", "S8", "maximal-ea2", "--budget", "100"]).status.code(), Some(3));
    let mismatch = invar(&["intersect", "image_2S8", "dickson_d4d6d7", "--candidate", "squares_d4d6"]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&mismatch.stdout).contains("status: MISMATCH"));
    assert_eq!(invar(&["einfty", "symmetric"]).status.code(), Some(0));
    assert_eq!(invar(&["einfty", "literal"]).status.code(), Some(1));
    assert_eq!(invar(&["--config", "/nonexistent/invar.toml", "list"]).status.code(), Some(2));
}

#[test]
fn invariants_json_is_deterministic() {
    let a = invar(&["--format", "json", "invariants", "GL3_2"]);
    let b = invar(&["--format", "json", "invariants", "GL3_2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    // The Dickson algebra is polynomial.
    assert_eq!(v["data"]["primary_degrees"], serde_json::json!([4, 6, 7]));
    assert_eq!(v["data"]["expected_count"], 1);
}

#[test]
fn trivial_group_gives_polynomial_ring() {
    let out = invar(&["invariants", "trivial_1var", "--degrees", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("F2[x]"));
}

#[test]
fn cold_and_warm_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache", d, "--format", "json", "invariants", "L3_2_on_2^4"];
    let cold = invar(&args);
    assert!(cold.status.success());
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, 1);
    let warm = invar(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = invar(&args[2..]);
    assert_eq!(cold.stdout, uncached.stdout);
    // A different bound is a different entry.
    assert!(invar(&["--cache", d, "--bound", "20", "invariants", "L3_2_on_2^4"]).status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn corrupted_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache", d, "--format", "json", "detect", "2S8"];
    let first = invar(&args);
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, b"{ truncated").unwrap();
    let second = invar(&args);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
    let stored: Value = serde_json::from_slice(&std::fs::read(&entry).unwrap()).unwrap();
    assert_eq!(stored["value"]["command"], "detect");
}

#[test]
fn custom_config_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("small.toml");
    std::fs::write(
        &path,
        r#"
[defaults]
bound = 10

[symbols]
ambient = ["w", "t"]

[groups.swap]
generators = [["01", "10"]]
variables = ["w", "t"]
primaries = ["w + t", "w*t"]
degrees = 6
"#,
    )
    .unwrap();
    let out = invar(&["--config", path.to_str().unwrap(), "--format", "json", "invariants", "swap"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["data"]["group_order"], 2);
    assert_eq!(v["data"]["expected_count"], 1);

    std::fs::write(&path, "[defaults]\nbound = 0\n").unwrap();
    assert_eq!(invar(&["--config", path.to_str().unwrap(), "list"]).status.code(), Some(2));
    std::fs::write(&path, "[unknown_table]\nx = 1\n").unwrap();
    assert_eq!(invar(&["--config", path.to_str().unwrap(), "list"]).status.code(), Some(2));
}
