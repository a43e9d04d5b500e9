use std::process::{Command, Output};

use nilorbit::classes::euler_factors;
use nilorbit::operators::TheoryContext;
use nilorbit::ring::{parse_poly, parse_ratfunc, Naming};

fn nilorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilorbit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn list_counts_orbits() {
    let o = nilorbit(&["list", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1 + 4);

    let o = nilorbit(&["list", "--n", "1"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].split_whitespace().eq(["id", "0", "0", "0", ".", "1", "-"]));
}

#[test]
fn list_shows_printed_dimension() {
    let o = nilorbit(&["list", "--n", "8", "--rank", "2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = rows.as_array().unwrap().iter().find(|r| r["involution"] == "(2,6)(4,7)").unwrap();
    assert_eq!(row["dim"], 8);
    assert_eq!(row["rank"], 2);
    assert!(rows.as_array().unwrap().iter().all(|r| r["rank"] == 2));
}

#[test]
fn bound_needs_force() {
    assert_eq!(code(&nilorbit(&["list", "--n", "10"])), 2);
    let o = nilorbit(&["list", "--n", "10", "--rank", "5", "--force"]);
    assert_eq!(code(&o), 0);
    // Rank-5 involutions of S_10 are the 945 perfect matchings.
    assert_eq!(stdout(&o).lines().count(), 1 + 945);
}

#[test]
fn class_of_the_zero_orbit() {
    let o = nilorbit(&["class", "--n", "2", "--w", "id", "--theory", "H", "--kind", "fund"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "u + t1 - t2");
}

#[test]
fn class_reproduces_printed_example() {
    let o = nilorbit(&["class", "--n", "4", "--w", "(1,2)(3,4)", "--theory", "H", "--kind", "fund"]);
    assert_eq!(code(&o), 0);
    let tc = TheoryContext::cohomology(4).unwrap();
    let printed = parse_ratfunc(
        "(t1-t4+2u)/((t1-t2+u)(t1-t3+u)(t1-t4+u)(t2-t4+u)(t3-t4+u))",
        tc.vars,
        &Naming::Standard,
    )
    .unwrap();
    let expected = printed.mul_factors_into_laurent(&euler_factors(&tc)).unwrap();
    let got = parse_poly(stdout(&o).trim(), tc.vars, &Naming::Standard).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn class_json_is_deterministic() {
    let args = ["class", "--n", "4", "--w", "(1, 3)(2,4)", "--theory", "K", "--kind", "mc", "--format", "json"];
    let a = nilorbit(&args);
    let b = nilorbit(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(doc["kind"], "mc");
    assert_eq!(doc["theory"], "K");
    assert_eq!(doc["involution"], serde_json::json!([[1, 3], [2, 4]]));
    assert_eq!(doc["dim"], 3);
    assert!(!doc["polynomial"].as_array().unwrap().is_empty());
}

#[test]
fn class_along_an_explicit_word() {
    let base = ["class", "--n", "7", "--w", "(1,6)(3,4)", "--theory", "H", "--u", "zero"];
    let printed = nilorbit(&[&base[..], &["--word", "2,6,4,5,6"]].concat());
    let default = nilorbit(&base);
    assert_eq!(code(&printed), 0);
    assert_eq!(printed.stdout, default.stdout);
    assert_eq!(code(&nilorbit(&[&base[..], &["--word", "2,6,4,5"]].concat())), 2);
}

#[test]
fn motivic_class_in_n7() {
    let o = nilorbit(&["class", "--n", "7", "--w", "(1,6)(3,4)", "--theory", "K", "--kind", "mc", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = doc["polynomial"].as_array().unwrap();
    let max_y = terms.iter().map(|t| t["exps"]["y"].as_i64().unwrap()).max().unwrap();
    assert_eq!(max_y, doc["dim"].as_i64().unwrap());
}

#[test]
fn usage_errors() {
    assert_eq!(code(&nilorbit(&["class", "--n", "3", "--w", "(1,2", "--theory", "H"])), 2);
    assert_eq!(code(&nilorbit(&["class", "--n", "3", "--w", "(1,3)", "--theory", "K", "--kind", "csm"])), 2);
    assert_eq!(code(&nilorbit(&["class", "--n", "3", "--w", "(1,3)", "--theory", "Q"])), 2);
    assert_eq!(code(&nilorbit(&["verify", "--suite", "unknown"])), 2);
    assert_eq!(code(&nilorbit(&["verify", "--suite", "dim", "--format", "latex"])), 2);
    assert_eq!(code(&nilorbit(&["verify", "--suite", "dim", "--threads", "0"])), 2);
}

#[test]
fn polynomials_by_permutation() {
    assert_eq!(stdout(&nilorbit(&["schubert", "--perm", "312"])).trim(), "x1^2 - x1*y1 - x1*y2 + y1*y2");
    assert_eq!(stdout(&nilorbit(&["schubert", "--perm", "123"])).trim(), "1");
    assert_eq!(stdout(&nilorbit(&["grothendieck", "--perm", "21"])).trim(), "1 - x1^-1*y1");
    let o = nilorbit(&["weight", "--tau", "12", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["tau"], serde_json::json!([1, 2]));
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_dim_passes() {
    let o = nilorbit(&["verify", "--suite", "dim", "--n-max", "8"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert!(lines.len() > 2 * 1115);
    assert!(lines.iter().all(|l| l["pass"] == true && l["suite"] == "dim"));
}

#[test]
fn verify_paper_examples_passes() {
    let o = nilorbit(&["verify", "--suite", "paper-examples", "--format", "text"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().ends_with("0 failed"));
}

#[test]
fn verify_output_does_not_depend_on_threads() {
    let one = nilorbit(&["--threads", "1", "verify", "--suite", "localization", "--n-max", "4"]);
    let many = nilorbit(&["verify", "--suite", "localization", "--n-max", "4", "--threads", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn every_suite_passes_at_small_sizes() {
    for suite in nilorbit::verify::SUITES {
        if suite == "paper-examples" {
            continue;
        }
        let o = nilorbit(&["verify", "--suite", suite, "--n-max", "3"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
    }
}
