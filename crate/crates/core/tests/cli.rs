use std::fs;
use std::process::{Command, Output};

fn qseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qseries"))
        .args(args)
        .env_remove("QSERIES_CACHE_DIR")
        .output()
        .expect("run qseries")
}

#[test]
fn identical_config_gives_identical_bytes() {
    for args in [
        &["bounds", "--grid", "0.05:0.95:0.05"][..],
        &["--format", "json", "curve", "--samples", "12"],
        &["tau", "--max", "64", "--route", "exp"],
        &["sigma", "--max", "200"],
    ] {
        let a = qseries(args);
        let b = qseries(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn cache_dir_env_sets_default_location() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qseries"))
            .args(["tau", "--max", "25", "--route", "pentagonal", "--cache"])
            .env("QSERIES_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let cached = fs::read(dir.path().join("tau_cache.csv")).unwrap();
    assert_eq!(cached, first.stdout);

    let second = run();
    assert_eq!(second.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
}

#[test]
fn json_rows_mirror_csv_columns() {
    let out = qseries(&["--format", "json", "bounds", "--grid", "0.5:0.6:0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "x",
            "n_terms",
            "f_partial",
            "tail",
            "lower",
            "upper",
            "certified"
        ]
    );
    assert_eq!(rows[0]["certified"], true);
    assert_eq!(rows[0]["upper"].as_f64(), Some(-1.0));
}

#[test]
fn exit_codes() {
    assert_eq!(qseries(&["perfect", "--max", "100"]).status.code(), Some(0));
    assert_eq!(
        qseries(&["bounds", "--grid", "0.99:0.99:0.1", "--n-cap", "8"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(qseries(&["sigma"]).status.code(), Some(2));
    assert_eq!(qseries(&["nonsense"]).status.code(), Some(2));
    assert_eq!(qseries(&["curve", "--x-min", "0.0"]).status.code(), Some(2));
}

#[test]
fn verify_reports_each_check() {
    let out = qseries(&["verify", "--tau-n", "200", "--grid", "0.01:0.99:0.01"]);
    let diag = String::from_utf8_lossy(&out.stderr);
    assert_eq!(out.status.code(), Some(0), "{diag}");
    assert_eq!(diag.matches("[ok]").count(), 8, "{diag}");
    assert!(!diag.contains("[FAIL]"));
}
