use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use inellipse_core::{ConicCoeffs, Point};
use serde_json::Value;

const EXAMPLE: &str = r#"{"vertices": [[6,2],[0,0],[0,1],[8,4]], "label": "example"}"#;
const SQUARE: &str = r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]]}"#;
const GENERIC: &str = r#"{"vertices": [[0,0],[1,3],[4,4],[5,1]]}"#;

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_inellipse"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit on bad arguments before reading its input
    let _ = child.stdin.take().unwrap().write_all(input.as_bytes());
    child.wait_with_output().unwrap()
}

fn report(args: &[&str], input: &str) -> Value {
    let out = run_stdin(args, input);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str], input: &str) -> i32 {
    run_stdin(args, input).status.code().unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn point(v: &Value) -> Point {
    Point::new(num(&v[0]), num(&v[1]))
}

#[test]
fn classify_example() {
    let r = report(&["classify"], EXAMPLE);
    assert_eq!(r["label"], "example");
    assert_eq!(r["classification"]["mdq_type1"], true);
    assert_eq!(r["classification"]["mdq_type2"], false);
    assert_eq!(r["classification"]["parallelogram"], false);
    // canonical order, whatever the input order
    assert_eq!(r["vertices"], serde_json::json!([[0.0, 0.0], [0.0, 1.0], [8.0, 4.0], [6.0, 2.0]]));
}

#[test]
fn classify_square_sets_every_implied_flag() {
    let r = report(&["classify"], SQUARE);
    for flag in
        ["convex", "parallelogram", "trapezoid", "tangential", "orthodiagonal", "kite", "mdq_type1", "mdq_type2"]
    {
        assert_eq!(r["classification"][flag], true, "{flag}");
    }
}

#[test]
fn classify_reads_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quad.json");
    std::fs::write(&path, EXAMPLE).unwrap();
    let r = report(&["classify", path.to_str().unwrap()], "");
    assert_eq!(r["classification"]["mdq_type1"], true);
}

#[test]
fn input_errors_have_their_exit_codes() {
    assert_eq!(code(&["classify"], r#"{"vertices": [[0,0],[2,0],[1,0.2],[1,2]]}"#), 3);
    assert_eq!(code(&["classify"], r#"{"vertices": [[0,0],[1,0],[1,0],[0,1]]}"#), 3);
    assert_eq!(code(&["classify"], r#"{"vertices": [[0,0],[1,0],[1,1]]}"#), 2);
    assert_eq!(code(&["classify"], "vertices"), 2);
    assert_eq!(code(&["classify", "/nonexistent/quad.json"], ""), 2);
    assert_eq!(code(&["frobnicate"], EXAMPLE), 2);
}

#[test]
fn inscribe_example_at_three_sevenths() {
    let r = report(&["inscribe", "--param", "3/7"], EXAMPLE);
    let e = &r["ellipse"];
    let t = point(&e["tangency"][0]);
    assert!(t.distance(Point::new(0.0, 3.0 / 7.0)) < 1e-12);
    assert!(point(&e["center"]).distance(Point::new(3.5, 1.75)) < 1e-12);
    let coeffs: Vec<f64> = e["coefficients"].as_array().unwrap().iter().map(num).collect();
    let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    assert_eq!(max, 1.0);
    let expected = ConicCoeffs::new(33.0, -148.0, 196.0, 28.0, -168.0, 36.0).unwrap();
    let got = ConicCoeffs::from_array(coeffs.try_into().unwrap()).unwrap();
    assert!(got.proportionality_error(&expected) < 1e-9);
}

#[test]
fn inscribe_square_incircle() {
    let r = report(&["inscribe", "--param", "0.5"], SQUARE);
    assert!(num(&r["ellipse"]["eccentricity"]) < 1e-7);
    assert!(point(&r["ellipse"]["center"]).distance(Point::new(0.5, 0.5)) < 1e-12);
}

#[test]
fn inscribe_out_of_range_exits_4() {
    for bad in ["1", "0", "-0.3", "1.5"] {
        assert_eq!(code(&["inscribe", &format!("--param={bad}")], EXAMPLE), 4, "{bad}");
    }
}

#[test]
fn emitted_coefficients_reproduce_center_and_eccentricity() {
    for (input, args) in [
        (EXAMPLE, vec!["inscribe", "--param", "0.3"]),
        (GENERIC, vec!["inscribe", "--param", "0.7"]),
        (GENERIC, vec!["min-ecc"]),
        (EXAMPLE, vec!["min-ecc"]),
    ] {
        let r = report(&args, input);
        let e = &r["ellipse"];
        let coeffs: Vec<f64> = e["coefficients"].as_array().unwrap().iter().map(num).collect();
        let conic = ConicCoeffs::from_array(coeffs.try_into().unwrap()).unwrap();
        let g = conic.geometry().unwrap();
        assert!(g.center.distance(point(&e["center"])) <= 1e-12 * (1.0 + g.center.to_vector().norm()));
        assert!((g.eccentricity - num(&e["eccentricity"])).abs() <= 1e-12);
    }
}

#[test]
fn min_ecc_example() {
    let r = report(&["min-ecc"], EXAMPLE);
    let r_star = -1.5 + 27.0 / 82.0 * 41f64.sqrt();
    assert!((num(&r["min_ecc"]["r_star"]) - r_star).abs() < 1e-12);
    assert_eq!(r["min_ecc"]["method"], "alpha_closed_form");
    let len = 37.0 / 5.0 * (61.0 - 9.0 * 41f64.sqrt());
    for v in r["t3"]["len_sq"].as_array().unwrap() {
        assert!((num(v) - len).abs() < 1e-9 * len);
    }
    assert_eq!(r["t3"]["parallel"], true);
    assert_eq!(r["t3"]["equal_len"], true);
}

#[test]
fn min_ecc_square_is_the_incircle() {
    let r = report(&["min-ecc"], SQUARE);
    assert_eq!(num(&r["ellipse"]["eccentricity"]), 0.0);
    assert_eq!(r["min_ecc"]["method"], "incircle");
    assert!(r.get("equal_conjugate_diameters").is_none());
}

#[test]
fn min_ecc_generic_is_numeric_without_t3() {
    let r = report(&["min-ecc"], GENERIC);
    assert_eq!(r["classification"]["mdq_type1"], false);
    assert_eq!(r["classification"]["mdq_type2"], false);
    assert_eq!(r["min_ecc"]["method"], "quartic_numeric");
    assert!(r.get("t3").is_none());
    assert!(r["equal_conjugate_diameters"]["sin_to_diagonals"].is_array());
}

#[test]
fn verify_t2_on_example() {
    let r = report(&["verify", "--theorem", "t2", "--trials", "100", "--seed", "11"], EXAMPLE);
    let v = &r["verification"];
    assert_eq!(v["passes"], 100);
    assert!(num(&v["worst_margin"]) < 1e-9);
}

#[test]
fn verify_t1_and_t3_on_example() {
    for theorem in ["t1", "t3"] {
        let r = report(&["verify", "--theorem", theorem, "--trials", "50"], EXAMPLE);
        assert_eq!(r["verification"]["passes"], 50, "{theorem}");
    }
}

#[test]
fn verify_t1_fails_off_the_class() {
    let r = report(&["verify", "--theorem", "t1", "--trials", "40", "--seed", "3"], GENERIC);
    let v = &r["verification"];
    assert_eq!(v["passes"], 0);
    assert_eq!(v["mdq"], false);
    assert!(num(&v["best_margin"]) > 1e-4);
}

#[test]
fn verify_is_deterministic_and_replayable() {
    let args = ["verify", "--theorem", "t2", "--trials", "1", "--seed", "42"];
    let a = run_stdin(&args, GENERIC);
    let b = run_stdin(&args, GENERIC);
    assert_eq!(a.stdout, b.stdout);

    // trial i under seed s is trial 0 under seed s + i
    let many = report(&["verify", "--theorem", "t2", "--trials", "5", "--seed", "40"], GENERIC);
    let single = report(&["verify", "--theorem", "t2", "--trials", "1", "--seed", "42"], GENERIC);
    assert_eq!(many["verification"]["results"][2]["param"], single["verification"]["results"][0]["param"]);
}

#[test]
fn verify_rejects_zero_trials() {
    assert_eq!(code(&["verify", "--theorem", "t1", "--trials", "0"], EXAMPLE), 2);
}

#[test]
fn global_tolerance_is_accepted_on_either_side() {
    let before = report(&["--tol", "1e-6", "verify", "--theorem", "t2", "--trials", "2"], EXAMPLE);
    let after = report(&["verify", "--theorem", "t2", "--trials", "2", "--tol", "1e-6"], EXAMPLE);
    assert_eq!(num(&before["verification"]["tolerance"]), 1e-6);
    assert_eq!(before, after);
    assert_eq!(code(&["--tol", "-1", "classify"], EXAMPLE), 2);
}

fn plot(input: &str, params: &str, out: &Path) -> String {
    let r = report(&["plot", "--params", params, "--out", out.to_str().unwrap()], input);
    assert!(r["ellipses"].is_array());
    std::fs::read_to_string(out).unwrap()
}

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!("class=\"{class}\"")).count()
}

#[test]
fn plot_example_with_two_ellipses() {
    let dir = tempfile::tempdir().unwrap();
    let svg = plot(EXAMPLE, "3/7,r_star", &dir.path().join("example.svg"));
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(count(&svg, "ellipse"), 2);
    assert_eq!(count(&svg, "tangency"), 8);
    assert_eq!(count(&svg, "diagonal"), 2);
    assert_eq!(count(&svg, "newton"), 1);
    assert_eq!(count(&svg, "conjugate-diameter"), 2);
    for line in svg.lines().filter(|l| l.contains(r#"class="ellipse""#)) {
        let start = line.find("points=\"").unwrap() + 8;
        let points = line[start..].split('"').next().unwrap().split_whitespace().count();
        assert!(points > 256, "{points}");
    }
}

#[test]
fn plot_without_params_draws_the_frame_only() {
    let dir = tempfile::tempdir().unwrap();
    let svg = plot(GENERIC, "", &dir.path().join("bare.svg"));
    assert_eq!(count(&svg, "ellipse"), 0);
    assert_eq!(count(&svg, "tangency"), 0);
    assert_eq!(count(&svg, "diagonal"), 2);
    assert_eq!(count(&svg, "quad"), 1);
}

#[test]
fn plot_square_incircle() {
    let dir = tempfile::tempdir().unwrap();
    let svg = plot(SQUARE, "0.5", &dir.path().join("square.svg"));
    assert_eq!(count(&svg, "ellipse"), 1);
    assert_eq!(count(&svg, "tangency"), 4);
    // a square has no Newton line and its optimum is a circle
    assert_eq!(count(&svg, "newton"), 0);
    assert_eq!(count(&svg, "conjugate-diameter"), 0);
}

#[test]
fn plot_errors() {
    let dir = tempfile::tempdir().unwrap();
    let unwritable = dir.path().join("missing").join("figure.svg");
    assert_eq!(code(&["plot", "--params", "0.5", "--out", unwritable.to_str().unwrap()], EXAMPLE), 5);
    let out = dir.path().join("f.svg");
    assert_eq!(code(&["plot", "--params", "0.5,2", "--out", out.to_str().unwrap()], EXAMPLE), 4);
    assert_eq!(code(&["plot", "--params", "half", "--out", out.to_str().unwrap()], EXAMPLE), 2);
}
