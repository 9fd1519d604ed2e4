use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeffs_single_value() {
    let out = run(&["coeffs", "--seq", "A", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/15\n");
}

#[test]
fn coeffs_range_and_formats() {
    let out = run(&["coeffs", "--seq", "wilker5", "--k-max", "5", "--format", "csv"]);
    let s = stdout(&out);
    assert!(s.starts_with("k,magnitude\n"));
    assert!(s.contains("5,16/93555"));
    let out = run(&["coeffs", "--seq", "B", "--k", "4", "--format", "latex"]);
    assert_eq!(stdout(&out), "\\frac{1}{181440}\n");
}

#[test]
fn bounds_latex_theorem_1_order_2() {
    let out = run(&["bounds", "--theorem", "1", "--order", "2", "--format", "latex"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("-\\frac{1}{15}x^{4} + \\frac{23}{1890}x^{6} - \\frac{41}{37800}x^{8}"));
    assert!(s.contains("\\frac{53}{831600}x^{10}"));
    assert!(s.contains("\\cos x - \\frac{\\sin^{3} x}{x^{3}}"));
}

#[test]
fn remainder_table_theorem_6_printed_values() {
    let out = run(&["remainder-table", "--theorem", "6", "--from", "3", "--to", "6"]);
    assert!(out.status.success());
    let s = stdout(&out);
    for v in ["0.0320502", "0.00778176", "0.00195321", "0.000488251"] {
        assert!(s.contains(v), "missing {v} in:\n{s}");
    }
}

#[test]
fn bounds_json_round_trip_is_stable() {
    let out = run(&["bounds", "--theorem", "1", "--order", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let first = serde_json::to_string(&v).unwrap();
    let again: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(first, serde_json::to_string(&again).unwrap());
    assert_eq!(v["lower"]["terms"][0]["coeff"], "-1/15");
}

#[test]
fn bounds_csv_grid() {
    let out = run(&[
        "bounds", "--theorem", "5", "--order", "2", "--format", "csv", "--grid", "8",
    ]);
    assert!(out.status.success());
    let s = stdout(&out);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "x,lower,f,upper");
    assert_eq!(lines.len(), 9);
    for line in &lines[1..] {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 4);
        let (lo, f, up): (f64, f64, f64) =
            (cols[1].parse().unwrap(), cols[2].parse().unwrap(), cols[3].parse().unwrap());
        assert!(lo < f && f < up, "ordering violated: {line}");
    }
}

#[test]
fn deterministic_output() {
    let a = run(&["bounds", "--theorem", "4", "--order", "3"]);
    let b = run(&["bounds", "--theorem", "4", "--order", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--theorem", "2", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["bercu", "--m", "7"]);
    assert_eq!(out.status.code(), Some(0));
    // the order-2 rational refinement fails near pi/2
    let out = run(&["bercu", "--m", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("counterexample"));
}

#[test]
fn verify_all_order_max_3() {
    let out = run(&["verify", "--all", "--order-max", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let s = stdout(&out);
    assert_eq!(s.lines().count(), 12 + 6, "one line per certificate:\n{s}");
    assert!(s.lines().all(|l| l.contains("Proved")));
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["verify", "--theorem", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("theorem"));
    let out = run(&["coeffs", "--seq", "A"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["bounds", "--theorem", "1", "--order", "1", "--format", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bernoulli_values() {
    let out = run(&["bernoulli", "--n", "8"]);
    assert_eq!(stdout(&out), "-1/30\n");
    let out = run(&["bernoulli", "--n-max", "4", "--format", "csv"]);
    let s = stdout(&out);
    assert!(s.contains("2,1/6"));
    assert!(s.contains("3,0"));
    assert!(s.contains("4,-1/30"));
}

#[test]
fn fixed_epsilon_and_jobs_flags() {
    let out = run(&[
        "verify", "--theorem", "1", "--order", "1", "--epsilon", "1/1000", "--jobs", "1",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["status"], "Proved");
}
