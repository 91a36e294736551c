use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrightkit"))
        .args(args)
        .env_remove("WRIGHTKIT_TERM_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "--func", "wright", "--alpha", "1", "--beta", "2", "--z", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1.0 ± "));

    let o = run(&["eval", "--func", "wright", "--alpha", "1", "--beta", "1", "--z", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).split_whitespace().next().unwrap().parse().unwrap();
    assert!((v - 2.2795853023360673).abs() < 1e-14);

    let o = run(&["eval", "--func", "wright", "--alpha", "1", "--beta", "-1", "--z", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
}

#[test]
fn eval_rejects_foreign_parameters() {
    let o = run(&["eval", "--func", "wright", "--alpha", "1", "--beta", "2", "--sigma", "2", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--func", "gen-wright", "--alpha", "1", "--beta", "2", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--func", "ml", "--pairs", "1:x", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--func", "bessel", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_all_selectors() {
    let cases: [&[&str]; 5] = [
        &["--func", "wright", "--alpha", "1", "--beta", "1"],
        &["--func", "gen-wright", "--alpha", "1", "--beta", "1", "--gamma", "2", "--sigma", "2"],
        &["--func", "fox-wright", "--upper", "1:1", "--lower", "1:1,1:1"],
        &["--func", "ml", "--pairs", "1:1,1:1"],
        &["--func", "ml4", "--b1", "1", "--beta1", "1", "--b2", "1", "--beta2", "1"],
    ];
    for c in cases {
        let mut args = vec!["eval"];
        args.extend_from_slice(c);
        args.extend(["--z", "1", "--format", "json"]);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{c:?}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!((v["value"].as_f64().unwrap() - 2.2795853023360673).abs() < 1e-14, "{c:?}");
    }
}

#[test]
fn integral_method_agrees_with_series() {
    let base = ["eval", "--func", "wright", "--alpha", "1.5", "--beta", "2.5", "--z", "-0.7", "--format", "json"];
    let series: serde_json::Value = serde_json::from_slice(&run(&base).stdout).unwrap();
    let mut args = base.to_vec();
    args.extend(["--method", "integral"]);
    let integral: serde_json::Value = serde_json::from_slice(&run(&args).stdout).unwrap();
    assert_eq!(integral["method"], "integral");
    assert!((series["value"].as_f64().unwrap() - integral["value"].as_f64().unwrap()).abs() < 1e-12);
}

#[test]
fn table_examples() {
    let o = run(&[
        "table", "--func", "wright", "--alpha", "1", "--beta", "2", "--z-start", "0", "--z-end", "1", "--steps", "11",
        "--no-meta",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(text.lines().next(), Some("z,value,error_estimate"));
    assert_eq!(rows.len(), 11);
    assert!(rows[0].starts_with("0.0,1.0,"));

    let o = run(&[
        "table", "--func", "wright", "--alpha", "1.5", "--beta", "2", "--reflect", "--z-start", "0.1", "--z-end", "0.9",
        "--steps", "17",
    ]);
    let values: Vec<f64> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 17);
    assert!(values.windows(2).all(|w| w[1] < w[0]));

    for (start, end, steps) in [("1", "0", "5"), ("0", "1", "1")] {
        let o = run(&[
            "table", "--func", "wright", "--alpha", "1", "--beta", "2", "--z-start", start, "--z-end", end, "--steps",
            steps,
        ]);
        assert_eq!(o.status.code(), Some(2));
    }
}

#[test]
fn table_metadata_line_is_optional() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = [
        "table", "--func", "ml4", "--b1", "1", "--beta1", "1", "--b2", "0.5", "--beta2", "2", "--z-start", "-1",
        "--z-end", "1", "--steps", "3", "--output", path.to_str().unwrap(),
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let with_meta = fs::read_to_string(&path).unwrap();
    assert!(with_meta.starts_with("# wrightkit "));
    let mut args = args.to_vec();
    args.push("--no-meta");
    assert_eq!(run(&args).status.code(), Some(0));
    let without = fs::read_to_string(&path).unwrap();
    assert_eq!(with_meta.lines().skip(1).collect::<Vec<_>>(), without.lines().collect::<Vec<_>>());

    let bad_dir = dir.path().join("no/such/dir/t.csv");
    let mut args = args.clone();
    let i = args.iter().position(|a| *a == "--output").unwrap();
    let bad = bad_dir.to_str().unwrap().to_string();
    args[i + 1] = &bad;
    assert_eq!(run(&args).status.code(), Some(3));
}

#[test]
fn audit_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();

    let o = run(&["audit", "--ids", "LB_777", "--out-dir", out]);
    assert_eq!(o.status.code(), Some(0));
    let summary = fs::read_to_string(dir.path().join("audit_summary.csv")).unwrap();
    assert!(summary.lines().nth(1).unwrap().starts_with("LB_777,suspect,main,"));
    let records = fs::read_to_string(dir.path().join("audit_records.jsonl")).unwrap();
    let mut lines = records.lines();
    let meta: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(meta["meta"]["tool"], "wrightkit");
    assert!(lines.any(|l| l.contains("\"status\":\"violated\"")));

    assert_eq!(run(&["audit", "--ids", "NO_SUCH_ID", "--out-dir", out]).status.code(), Some(2));
    assert_eq!(
        run(&["audit", "--ids", "UB_6666", "--default-grid", "--out-dir", out]).status.code(),
        Some(0)
    );
    // violated on the default grid near z = 0
    assert_eq!(
        run(&["audit", "--ids", "TURAN_26", "--default-grid", "--out-dir", out]).status.code(),
        Some(4)
    );
}

#[test]
fn audit_grid_files() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    let out = dir.path().join("out");
    fs::write(&grid, r#"{"alpha": [1.5, 2.0], "z_unit": [0.2, 0.4]}"#).unwrap();
    let o = run(&["audit", "--ids", "UB_6666", "--grid", grid.to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.join("audit_records.jsonl").exists());

    fs::write(&grid, r#"{"alpha": [1.5], "no_such_axis": [1]}"#).unwrap();
    let o = run(&["audit", "--grid", grid.to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["audit", "--grid", grid.to_str().unwrap(), "--default-grid"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constants_examples() {
    let o = run(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x_star = 1.461632144968\n"));
    assert!(text.contains("gamma(x_star) = 0.885603"));

    let o = run(&["constants", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["x_star"].as_f64().unwrap() - 1.461632144968362).abs() < 1e-12);
    assert!((v["gamma_at_x_star"].as_f64().unwrap() - 0.8856031944108887).abs() < 1e-12);
}

#[test]
fn term_budget_from_environment() {
    let args = ["eval", "--func", "wright", "--alpha", "1", "--beta", "1", "--z", "1"];
    let o = Command::new(env!("CARGO_BIN_EXE_wrightkit"))
        .args(args)
        .env("WRIGHTKIT_TERM_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_wrightkit"))
        .args(args)
        .env("WRIGHTKIT_TERM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
