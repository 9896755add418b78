use std::process::{Command, Output};

use riordan_core::format::{parse_matrix_json, parse_recurrence_json, parse_sequence_json};
use riordan_core::rational::int;

fn riordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = riordan(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pascal_block() {
    assert_eq!(
        stdout(&["array", "pascal", "--order", "4"]),
        "1 0 0 0 0\n1 1 0 0 0\n1 2 1 0 0\n1 3 3 1 0\n1 4 6 4 1\n"
    );
}

#[test]
fn gompertz_block_has_unit_diagonal() {
    let out = stdout(&["array", "gompertz", "--order", "6", "--format", "json"]);
    let (name, m) = parse_matrix_json(&out).unwrap();
    assert_eq!(name, "gompertz");
    assert_eq!(m.dim(), 7);
    assert!(m.has_unit_diagonal());
    assert_eq!(m.row(6)[..], [9, -98, 112, 35, -35, 0, 1].map(int)[..]);
}

#[test]
fn identity_from_coefficients() {
    assert_eq!(
        stdout(&["array", "--g", "1", "--f", "0,1", "--order", "3"]),
        "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
    );
}

#[test]
fn produce_examples() {
    let cos_sin = stdout(&["produce", "cos_sin", "--order", "6"]);
    let lines: Vec<&str> = cos_sin.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(
        lines[6].split_whitespace().collect::<Vec<_>>(),
        ["0", "-315", "0", "-105", "0", "-21", "0"]
    );
    assert_eq!(lines[7], "not tridiagonal");

    let tanh = stdout(&["produce", "tanh", "--order", "6"]);
    assert!(tanh.ends_with("tridiagonal: alpha = 0, beta = -2, gamma = 0, delta = -1\n"));
    assert!(stdout(&["produce", "algebraic", "--order", "6"]).ends_with("not tridiagonal\n"));

    let json = stdout(&["produce", "tanh2", "--order", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["params"]["beta"], "-8");
    assert_eq!(v["params"]["delta"], "-4");
}

#[test]
fn hankel_poly_cf_moments() {
    assert_eq!(
        stdout(&["hankel", "tanh", "--n", "5"]),
        "0, -1, 0, 144, 0, -1194393600\n"
    );
    assert_eq!(
        stdout(&["hankel", "tanh", "--n", "3", "--series", "g"]),
        "1, -2, -24, 3456\n"
    );
    let polys = stdout(&["poly", "algebraic", "--n", "6"]);
    assert_eq!(polys.lines().last(), Some("x^6 - 105x^4 + 1575x^2 - 1575"));
    assert_eq!(
        stdout(&["cf", "gompertz", "--depth", "4"]),
        "b = 0, -1, -2, -3\nlambda = -1, -2, -3, -4\n"
    );
    let r = parse_recurrence_json(&stdout(&[
        "cf", "gompertz", "--depth", "2", "--format", "json",
    ]));
    assert_eq!(r.unwrap().lambda(), &[int(-1), int(-2)]);
    let m = parse_sequence_json(&stdout(&[
        "moments", "arctan", "--n", "6", "--format", "json",
    ]));
    assert_eq!(m.unwrap(), [1, 0, 2, 0, 16, 0, 272].map(int));
}

#[test]
fn plotdata_examples() {
    let tanh = stdout(&["plotdata", "tanh", "--kind", "parametric", "--samples", "9"]);
    assert_eq!(tanh.lines().next(), Some("g,f"));
    assert_eq!(tanh.lines().nth(5), Some("1,0"));

    let circle = stdout(&["plotdata", "cos_sin", "--kind", "parametric"]);
    for line in circle.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!((v[0] * v[0] + v[1] * v[1] - 1.0).abs() < 1e-12, "{line}");
    }
    assert_eq!(circle.lines().count(), 201);

    let gomp = stdout(&[
        "plotdata",
        "gompertz",
        "--t-min",
        "0",
        "--t-max",
        "1",
        "--samples",
        "2",
    ]);
    assert_eq!(gomp.lines().nth(1), Some("0,0,1"));
}

#[test]
fn catalog_list_names_every_entry() {
    let out = stdout(&["catalog", "list"]);
    for id in [
        "tanh",
        "tanh2",
        "arctan",
        "algebraic",
        "quartic",
        "gudermann",
        "erf",
        "gompertz",
        "cos_sin",
        "pascal",
    ] {
        assert!(out.lines().any(|l| l.starts_with(id)), "{id}");
    }
    let csv = stdout(&["catalog", "list", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 11);
}

#[test]
fn output_is_deterministic() {
    let args = ["array", "erf", "--order", "10", "--format", "json"];
    assert_eq!(riordan(&args).stdout, riordan(&args).stdout);
}

#[test]
fn errors_exit_nonzero_with_one_line() {
    for args in [
        &["array", "nosuch"][..],
        &["array", "--g", "2", "--f", "0,1"],
        &["array", "--g", "1", "--f", "0,0,1"],
        &["hankel", "--seq", "1,0,1", "--n", "4"],
        &["plotdata", "erf", "--t-min", "1", "--t-max", "0"],
        &["cf", "algebraic"],
    ] {
        let out = riordan(args);
        assert!(!out.status.success(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "));
        assert!(out.stdout.is_empty());
    }
}
