use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bateman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bateman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(line: &str, key: &str) -> f64 {
    line.split_whitespace()
        .find_map(|w| w.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {line}"))
        .parse()
        .unwrap()
}

#[test]
fn eval_examples() {
    let o = bateman(&["eval", "--fn", "k", "--nu", "0", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!((field(&s, "value") - 0.3678794412).abs() < 1e-10);
    assert!(s.contains("method=CLOSED"));

    let s = stdout(&bateman(&["eval", "--fn", "h", "--nu", "2", "--x", "0"]));
    assert!((field(&s, "value") + std::f64::consts::FRAC_2_PI).abs() < 1e-10);

    let s = stdout(&bateman(&["eval", "--fn", "ki", "--nu", "2", "--x", "1"]));
    assert!((field(&s, "value") + 0.7357588823).abs() < 1e-10);
}

#[test]
fn eval_json_keeps_key_order() {
    let o = bateman(&["eval", "--fn", "k", "--nu", "2", "--x", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let keys = [
        "\"function\"",
        "\"nu\"",
        "\"x\"",
        "\"value\"",
        "\"err_est\"",
        "\"method\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["method"], "CLOSED");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        bateman(&["eval", "--fn", "q", "--nu", "0", "--x", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        bateman(&["eval", "--fn", "ki", "--nu", "3", "--x", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(bateman(&["eval", "--fn", "k", "--nu", "0"]).status.code(), Some(1));
    assert_eq!(bateman(&["frobnicate"]).status.code(), Some(1));
    let bad_grid = [
        "table", "--fn", "k", "--nu", "0", "--x-min", "2", "--x-max", "0", "--x-step", "1",
    ];
    assert_eq!(bateman(&bad_grid).status.code(), Some(1));
    let bad_tol = ["eval", "--fn", "k", "--nu", "0", "--x", "1", "--tol", "0"];
    assert_eq!(bateman(&bad_tol).status.code(), Some(1));
    assert_eq!(bateman(&["laplace", "--id", "nope", "--s", "1"]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let o = bateman(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("figures"));
}

#[test]
fn table_rows_and_values() {
    let o = bateman(&[
        "table", "--fn", "k", "--nu", "0,2,4", "--x-min", "0", "--x-max", "2", "--x-step", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "nu,x,value,err_est,method");
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().any(|l| l.starts_with("0,1,0.367879441171442,")));
    assert!(lines.iter().any(|l| l.starts_with("2,0,0,")));
    let order: Vec<(&str, &str)> = lines[1..]
        .iter()
        .map(|l| {
            let mut c = l.split(',');
            (c.next().unwrap(), c.next().unwrap())
        })
        .collect();
    assert_eq!(order[0], ("0", "0"));
    assert_eq!(order[3], ("2", "0"));
    assert_eq!(order[8], ("4", "2"));
    assert!(!s.contains('\r'));
}

#[test]
fn table_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, format: &str| {
        let p = dir.path().join(name);
        let o = bateman(&[
            "table",
            "--fn",
            "h",
            "--nu",
            "-1.5,0,3",
            "--x-min",
            "-2",
            "--x-max",
            "3",
            "--x-step",
            "0.25",
            "--format",
            format,
            "--output",
            p.to_str().unwrap(),
            "--parallelism",
            "3",
        ]);
        assert_eq!(o.status.code(), Some(0));
        fs::read(p).unwrap()
    };
    assert_eq!(run("a.csv", "csv"), run("b.csv", "csv"));
    let j = run("a.json", "json");
    assert_eq!(j, run("b.json", "json"));
    let v: serde_json::Value = serde_json::from_slice(&j).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3 * 21);
}

#[test]
fn io_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain");
    fs::write(&file, "x").unwrap();
    let target = file.join("out.csv");
    let o = bateman(&[
        "table",
        "--fn",
        "k",
        "--nu",
        "0",
        "--x-min",
        "0",
        "--x-max",
        "1",
        "--x-step",
        "1",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let missing = dir.path().join("missing.conf");
    assert_eq!(
        bateman(&["eval", "--config", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn config_file_mirrors_flags() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("run.conf");
    fs::write(&p, "# point\ncommand = eval\nfn = ki\nnu = 2\nx = 1\n").unwrap();
    let o = bateman(&["--config", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!((field(&stdout(&o), "value") + 0.7357588823).abs() < 1e-10);
    let o = bateman(&["eval", "--config", p.to_str().unwrap(), "--fn", "k", "--nu", "0"]);
    assert!((field(&stdout(&o), "value") - 0.3678794412).abs() < 1e-10);
}

fn csv_value(text: &str, nu: &str, x: &str) -> String {
    text.lines()
        .find(|l| l.starts_with(&format!("{nu},{x},")))
        .unwrap_or_else(|| panic!("no row {nu},{x}"))
        .split(',')
        .nth(2)
        .unwrap()
        .to_string()
}

#[test]
fn figures_reflect_and_repeat() {
    let dir = tempfile::tempdir().unwrap();
    let gen = |sub: &str| {
        let out = dir.path().join(sub);
        let o = bateman(&["figures", "--out-dir", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let s = stdout(&o);
        assert!(s.contains("fig02 reflects fig01"));
        assert!(s.contains("fig04 reflects fig03"));
        out
    };
    let a = gen("a");
    let b = gen("b");
    for n in 1..=12 {
        let name = format!("fig{n:02}.csv");
        let x = fs::read(a.join(&name)).unwrap();
        assert_eq!(x, fs::read(b.join(&name)).unwrap(), "{name} differs between runs");
    }
    let read = |p: &Path, n: u32| fs::read_to_string(p.join(format!("fig{n:02}.csv"))).unwrap();
    let f1 = read(&a, 1);
    assert!(csv_value(&f1, "0", "1").starts_with("0.367879"));
    assert_eq!(csv_value(&read(&a, 3), "4", "0"), "0");
    assert_eq!(csv_value(&read(&a, 2), "-2", "-1"), csv_value(&f1, "2", "1"));
    assert_eq!(f1.lines().count(), 1 + 7 * 301);
    assert_eq!(read(&a, 9).lines().count(), 1 + 201 * 3);
    assert!(read(&a, 6).lines().nth(1).unwrap().starts_with("-5.5,-5,"));
}

#[test]
fn verify_filters() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = bateman(&["verify", "--filter", "ASSERT", "--output", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let last = s.lines().last().unwrap();
    assert!(last.ends_with("passed, 0 failed, 0 diagnosed"), "{last}");
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["totals"]["failed"], 0);

    let s = stdout(&bateman(&["verify", "--filter", "eq35"]));
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 3);
    assert_eq!(s.lines().last().unwrap(), "3 passed, 0 failed, 0 diagnosed");

    let s = stdout(&bateman(&["verify", "--filter", "(B."]));
    for id in ["B09_difference", "B10_sum", "B11_k_minus", "B12_k_plus"] {
        assert!(s.lines().any(|l| l.starts_with("DIAGNOSED") && l.contains(id)), "{id}");
    }
}

#[test]
fn laplace_examples() {
    let s = stdout(&bateman(&["laplace", "--id", "eq37_k0", "--s", "1"]));
    assert!((field(&s, "numeric") - 0.5).abs() < 1e-8);
    assert_eq!(field(&s, "closed"), 0.5);
    assert!(field(&s, "residual") < 1e-8);

    let s = stdout(&bateman(&["laplace", "--id", "eq53_h0", "--s", "2"]));
    let want = 2.0 * 2f64.ln() / (3.0 * std::f64::consts::PI);
    assert!((field(&s, "closed") - want).abs() < 1e-12);

    let s = stdout(&bateman(&["laplace", "--id", "eq87_ki0", "--s", "1"]));
    assert_eq!(field(&s, "closed"), 0.0);

    let o = bateman(&[
        "laplace",
        "--id",
        "eq37_k2n2",
        "--s",
        "1",
        "--params",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["closed"], 0.0);
}

#[test]
fn docs_are_generated() {
    let dir = tempfile::tempdir().unwrap();
    let o = bateman(&["docs", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for page in [
        "index.md",
        "catalog.md",
        "transforms.md",
        "schema.md",
        "discrepancies.md",
    ] {
        assert!(dir.path().join(page).exists(), "{page}");
    }
    let d = fs::read_to_string(dir.path().join("discrepancies.md")).unwrap();
    assert!(d.contains("## `B11_k_minus`"));
}
