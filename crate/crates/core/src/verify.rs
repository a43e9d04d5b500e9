//! Verification suites: each runs a family of independent cross-checks and
//! reports one line per case.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classes::{
    self, base_characteristic, base_fundamental, compute_class, compute_class_with_word, coordinate_weight,
    csm_lowest_part, euler_factors, euler_of_weight, localization_pushforward, Kind,
};
use crate::combin::{enumerate_involutions, minimal_involution, Involution, Permutation, ReducedWord};
use crate::error::{Error, Result};
use crate::operators::{OperatorKind, Theory, TheoryContext, UMode};
use crate::ring::{parse_poly, parse_ratfunc, Exps, Int, LaurentPoly, Naming, RatFunc, Var};
use crate::{schubert, weightfn};

/// Whether printed formulas with a known misprint are checked as printed
/// or in corrected form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Errata {
    AsPrinted,
    Corrected,
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Checks of one suite, in a deterministic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, case: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite.clone(), case: case.into(), pass, detail: detail.into() });
    }

    /// Records an equality, printing both sides on failure.
    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, case: impl Into<String>, left: &T, right: &T) {
        let pass = left == right;
        let detail = if pass { String::new() } else { format!("{left} != {right}") };
        self.check(case, pass, detail);
    }

    /// Records the outcome of a fallible check; errors count as failures.
    pub fn check_result(&mut self, case: impl Into<String>, outcome: Result<(bool, String)>) {
        match outcome {
            Ok((pass, detail)) => self.check(case, pass, detail),
            Err(e) => self.check(case, false, format!("error: {e}")),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {} {}", if c.pass { "PASS" } else { "FAIL" }, c.suite, c.case)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{}: {} checks, {} failed", self.suite, self.checks.len(), failed)
    }
}

/// Names accepted by [`suite_tasks`].
pub const SUITES: [&str; 9] =
    ["dim", "words", "localization", "paper-examples", "schubert", "grothendieck", "porteous", "weightfn", "properties"];

/// Largest size a suite runs at when no bound is given.
pub fn default_n_max(suite: &str) -> Result<usize> {
    Ok(match suite {
        "dim" => 8,
        "words" | "localization" | "properties" => 5,
        "schubert" => 4,
        "grothendieck" | "weightfn" => 3,
        "porteous" => 6,
        "paper-examples" => 8,
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    })
}

type Job = Box<dyn Fn() -> Report + Send + Sync>;

/// An independent unit of work of a suite. Tasks may run in any order or
/// in parallel; reports are merged in task order.
pub struct Task {
    pub name: String,
    job: Job,
}

impl Task {
    fn new(name: impl Into<String>, job: impl Fn() -> Report + Send + Sync + 'static) -> Self {
        Task { name: name.into(), job: Box::new(job) }
    }

    pub fn run(&self) -> Report {
        (self.job)()
    }
}

impl fmt::Debug for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Task").field("name", &self.name).finish()
    }
}

/// The tasks of a suite up to size `n_max` (the suite default if `None`).
pub fn suite_tasks(suite: &str, n_max: Option<usize>) -> Result<Vec<Task>> {
    let n_max = match n_max {
        Some(n) => n,
        None => default_n_max(suite)?,
    };
    let mut tasks = Vec::new();
    match suite {
        "dim" => {
            for n in 1..=n_max {
                tasks.push(Task::new(format!("dim n={n}"), move || dimension_checks(n)));
                tasks.push(Task::new(format!("conjugation n={n}"), move || conjugation_checks(n)));
            }
            tasks.push(Task::new("printed dimension and conjugators", printed_combinatorics));
        }
        "words" => {
            for n in 1..=n_max {
                tasks.push(Task::new(format!("words n={n}"), move || word_independence(n, 3)));
            }
        }
        "localization" => {
            for n in 1..=n_max {
                for theory in [Theory::Cohomology, Theory::KTheory] {
                    tasks.push(Task::new(format!("localization n={n} {theory}"), move || localization_checks(n, theory)));
                }
            }
        }
        "paper-examples" => {
            tasks.push(Task::new("n=4 example", n4_example));
            tasks.push(Task::new("n=7 example", n7_example));
            tasks.push(Task::new("printed dimension and conjugators", printed_combinatorics));
            tasks.push(Task::new("porteous determinant", porteous_printed));
            tasks.push(Task::new("walk words", schubert::verify_walk_words));
            tasks.push(Task::new("boundary identities", schubert::boundary_identity_checks));
            tasks.push(Task::new("schubert table", || schubert::verify_s3_table(Errata::Corrected)));
            tasks.push(Task::new("weight functions", || weightfn::verify_printed(Errata::Corrected)));
        }
        "schubert" => {
            for n in 1..=n_max {
                tasks.push(Task::new(format!("schubert block n={n}"), move || schubert::verify_schubert_block(n)));
            }
            for n in 2..=n_max {
                tasks.push(Task::new(format!("left recursion n={n}"), move || schubert::verify_left_recursion(n)));
            }
            tasks.push(Task::new("schubert table", || schubert::verify_s3_table(Errata::Corrected)));
        }
        "grothendieck" => {
            for n in 1..=n_max {
                tasks.push(Task::new(format!("grothendieck block n={n}"), move || {
                    schubert::verify_grothendieck_block(n, schubert::LongestConvention::Staircase)
                }));
            }
            tasks.push(Task::new("longest-element convention", move || longest_convention_check(n_max)));
        }
        "porteous" => {
            for n in 2..=n_max {
                tasks.push(Task::new(format!("porteous n={n}"), move || schubert::verify_porteous(n)));
            }
            tasks.push(Task::new("porteous determinant", porteous_printed));
            tasks.push(Task::new("walk words", schubert::verify_walk_words));
        }
        "weightfn" => {
            tasks.push(Task::new("printed weight functions", || weightfn::verify_printed(Errata::Corrected)));
            for n in 2..=n_max {
                tasks.push(Task::new(format!("recursion n={n}"), move || weightfn::verify_rtv_recursion(n)));
            }
            for n in 1..=n_max {
                tasks.push(Task::new(format!("y-degree n={n}"), move || weightfn::verify_y_degree(n)));
            }
        }
        "properties" => {
            for n in 2..=n_max.min(4) {
                tasks.push(Task::new(format!("operators n={n}"), move || operator_properties(n, 20, 0x5eed + n as u64)));
            }
            for n in 1..=n_max {
                tasks.push(Task::new(format!("orbit classes n={n}"), move || class_properties(n)));
            }
        }
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    }
    Ok(tasks)
}

/// Merges task reports, in order, under one suite name.
pub fn merge(suite: &str, reports: impl IntoIterator<Item = Report>) -> Report {
    let mut out = Report::new(suite);
    for r in reports {
        for mut c in r.checks {
            c.suite = suite.to_string();
            out.checks.push(c);
        }
    }
    out
}

/// Runs a suite on the current thread.
pub fn run_suite(suite: &str, n_max: Option<usize>) -> Result<Report> {
    let tasks = suite_tasks(suite, n_max)?;
    Ok(merge(suite, tasks.iter().map(Task::run)))
}

/// Number of involutions of `S_n` from `a(n) = a(n-1) + (n-1) a(n-2)`.
pub fn involution_count(n: usize) -> usize {
    let (mut a, mut b) = (1, 1);
    for k in 2..=n {
        (a, b) = (b, b + (k - 1) * a);
    }
    b
}

/// Dimension of the orbit as the rank of `X -> [X, N_w]` on upper-triangular
/// `X`, computed by fraction-free elimination.
pub fn tangent_dim(w: &Involution) -> usize {
    let n = w.n();
    let mut nw = vec![vec![0i64; n]; n];
    for &(i, j) in w.pairs() {
        nw[i - 1][j - 1] = 1;
    }
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a..n {
            // [E_ab, N] = E_ab N - N E_ab.
            let mut m = vec![0i64; n * n];
            for c in 0..n {
                m[a * n + c] += nw[b][c];
                m[c * n + b] -= nw[c][a];
            }
            rows.push(m);
        }
    }
    integer_rank(rows)
}

fn integer_rank(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col] as i128;
        for r in rank + 1..rows.len() {
            let (top, bottom) = rows.split_at_mut(r);
            let (pivot_row, row) = (&top[rank], &mut bottom[0]);
            let f = row[col] as i128;
            for (x, &p) in row.iter_mut().zip(pivot_row) {
                let v = (pivot * *x as i128 - f * p as i128) / prev;
                *x = i64::try_from(v).expect("minors of a 0/1 commutator matrix are small");
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// `P N P^{-1}` by dense matrix products, `P` the matrix of `σ`.
pub fn conjugate_dense(sigma: &Permutation, n_matrix: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = sigma.n();
    let mut p = vec![vec![0i64; n]; n];
    for j in 1..=n {
        p[sigma.apply(j) - 1][j - 1] = 1;
    }
    let mul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    };
    let pt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| p[j][i]).collect()).collect();
    mul(&mul(&p, n_matrix), &pt)
}

fn dense(w: &Involution) -> Vec<Vec<i64>> {
    let n = w.n();
    let mut m = vec![vec![0i64; n]; n];
    for &(i, j) in w.pairs() {
        m[i - 1][j - 1] = 1;
    }
    m
}

/// Orbit dimension by the closed formula, the arc diagram, `l(π_w) +
/// m(m+1)/2` and the tangent rank, for every involution of `S_n`.
pub fn dimension_checks(n: usize) -> Report {
    let mut report = Report::new("dim");
    let all = enumerate_involutions(n);
    report.check(
        format!("n={n} involution count"),
        all.len() == involution_count(n),
        format!("{} enumerated, {} expected", all.len(), involution_count(n)),
    );
    for w in &all {
        let m = w.rank();
        let formula = w.orbit_dim();
        let arcs = w.orbit_dim_arcs();
        let length = w.pi_w().length() + m * (m + 1) / 2;
        let tangent = tangent_dim(w);
        let pass = formula == arcs && arcs == length && length == tangent;
        report.check(
            format!("n={n} {w} dim"),
            pass,
            if pass { String::new() } else { format!("formula {formula}, arcs {arcs}, length {length}, tangent {tangent}") },
        );
    }
    report
}

/// `M_{π_w} N_{w_m} M_{π_w}^{-1} = N_w` for every involution of `S_n`.
pub fn conjugation_checks(n: usize) -> Report {
    let mut report = Report::new("dim");
    for w in enumerate_involutions(n) {
        let base = minimal_involution(n, w.rank()).expect("rank is at most n/2");
        let pass = conjugate_dense(&w.pi_w(), &dense(&base)) == dense(&w);
        report.check(format!("n={n} {w} conjugation"), pass, if pass { String::new() } else { format!("pi_w {}", w.pi_w()) });
    }
    report
}

/// The printed permutations conjugating `N_{w_3}` onto `N_{(15)(26)(34)}`.
pub const THREE_CONJUGATORS: [&str; 3] = ["123564", "132546", "312456"];

/// The printed dimension of `O_{(26)(47)}` and the three conjugators of
/// `(15)(26)(34)`.
pub fn printed_combinatorics() -> Report {
    let mut report = Report::new("dim");
    let w = Involution::parse(8, "(2,6)(4,7)").expect("valid");
    report.check_eq("n=8 (2,6)(4,7) has dimension 8", &w.orbit_dim(), &8);
    let w = Involution::parse(6, "(1,5)(2,6)(3,4)").expect("valid");
    let found: Vec<String> = w.minimal_conjugators().iter().map(|p| p.one_line().iter().map(|v| v.to_string()).collect()).collect();
    let expected: Vec<String> = THREE_CONJUGATORS.iter().map(|s| s.to_string()).collect();
    report.check(
        "n=6 (1,5)(2,6)(3,4) minimal conjugators",
        found == expected,
        if found == expected { String::new() } else { format!("found {found:?}") },
    );
    let base = minimal_involution(6, 3).expect("valid");
    for p in THREE_CONJUGATORS {
        let sigma: Permutation = p.parse().expect("valid");
        let pass = sigma.length() == 2 && conjugate_dense(&sigma, &dense(&base)) == dense(&w);
        report.check(format!("n=6 {p} conjugates N_w3 to (1,5)(2,6)(3,4) with length 2"), pass, "");
    }
    report
}

/// Reduced words of the minimal conjugators of `w` that carry the minimal
/// orbit onto `O_w` through upper-triangular steps, sorted.
pub fn valid_words(w: &Involution, limit: usize) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    for p in w.minimal_conjugators() {
        for word in p.reduced_words(limit) {
            if classes::check_word(w, &word).is_ok() && !out.contains(&word) {
                out.push(word);
            }
        }
    }
    out.sort();
    out
}

const WORD_KINDS: [(Theory, Kind); 4] = [
    (Theory::Cohomology, Kind::Fundamental),
    (Theory::Cohomology, Kind::Csm),
    (Theory::KTheory, Kind::Fundamental),
    (Theory::KTheory, Kind::Mc),
];

/// For every orbit of `S_n` with `l(π_w) >= 2`, computes each class along
/// up to `words` valid reduced words and compares them. Orbits with a
/// single valid word pass trivially; the case name carries the count.
pub fn word_independence(n: usize, words: usize) -> Report {
    let mut report = Report::new("words");
    for w in enumerate_involutions(n) {
        if w.pi_w().length() < 2 {
            continue;
        }
        let chosen: Vec<ReducedWord> = valid_words(&w, 256).into_iter().take(words).collect();
        for (theory, kind) in WORD_KINDS {
            let case = format!("n={n} {w} {theory} {kind} over {} words", chosen.len());
            report.check_result(
                case,
                (|| {
                    let tc = TheoryContext::new(theory, UMode::Keep, n)?;
                    let values = chosen
                        .iter()
                        .map(|word| compute_class_with_word(&w, word, &tc, kind).map(|r| r.value))
                        .collect::<Result<Vec<_>>>()?;
                    let same = values.windows(2).all(|p| p[0] == p[1]);
                    let words: Vec<String> = chosen.iter().map(|w| format!("[{w}]")).collect();
                    Ok((same, words.join(" ")))
                })(),
            );
        }
    }
    report
}

/// Fixed-point localization against the operator recursion for every
/// orbit of `S_n`.
pub fn localization_checks(n: usize, theory: Theory) -> Report {
    let mut report = Report::new("localization");
    for w in enumerate_involutions(n) {
        report.check_result(
            format!("n={n} {w} {theory}"),
            (|| {
                let tc = TheoryContext::new(theory, UMode::Keep, n)?;
                let r = compute_class(&w, &tc, Kind::Fundamental)?;
                let loc = localization_pushforward(&r.word, &tc, w.rank())?;
                let pass = loc == r.normalized;
                Ok((pass, if pass { String::new() } else { format!("{loc} != {}", r.normalized) }))
            })(),
        );
    }
    report
}

/// The printed classes of `O_{(12)(34)}` in `N_4`, each as `e(N)` times the
/// printed rational function.
pub const N4_PRINTED: [(Theory, Kind, &str); 4] = [
    (
        Theory::Cohomology,
        Kind::Fundamental,
        "(t1-t4+2u)/((t1-t2+u)(t1-t3+u)(t1-t4+u)(t2-t4+u)(t3-t4+u))",
    ),
    (
        Theory::Cohomology,
        Kind::Csm,
        "(1+t1-t4+u)(t1-t4+2u+(t1-t3+u)(t2-t4+u))/((t1-t2+u)(t1-t3+u)(t1-t4+u)(t2-t4+u)(t3-t4+u))",
    ),
    (
        Theory::KTheory,
        Kind::Fundamental,
        "(1-t4/(u^2 t1))/((1-t2/(u t1))(1-t3/(u t1))(1-t4/(u t1))(1-t4/(u t2))(1-t4/(u t3)))",
    ),
    (
        Theory::KTheory,
        Kind::Mc,
        "(1+y)^2 (t4/(u^2 t1)) (1+y t4/(u t1)) (1-t2/(u t1)+t2/t3-t4/(u t3)+y(1-t4/(u^2 t1))) \
         /((1-t2/(u t1))(1-t3/(u t1))(1-t4/(u t1))(1-t4/(u t2))(1-t4/(u t3)))",
    ),
];

/// The printed inputs of the first operator in the `n = 4` example: the
/// normalized classes of the minimal rank-2 orbit.
pub const N4_BASES: [(Theory, Kind, &str); 4] = [
    (Theory::Cohomology, Kind::Fundamental, "1/((t1-t3+u)(t1-t4+u)(t2-t4+u))"),
    (Theory::Cohomology, Kind::Csm, "(1+t1-t4+u)/((t1-t3+u)(t1-t4+u)(t2-t4+u))"),
    (Theory::KTheory, Kind::Fundamental, "1/((1-t3/(u t1))(1-t4/(u t1))(1-t4/(u t2)))"),
    (
        Theory::KTheory,
        Kind::Mc,
        "(1+y)^2 (t3/(u t1)) (t4/(u t2)) (1+y t4/(u t1))/((1-t3/(u t1))(1-t4/(u t1))(1-t4/(u t2)))",
    ),
];

fn base_for(tc: &TheoryContext, kind: Kind, m: usize) -> Result<RatFunc> {
    match kind {
        Kind::Fundamental => base_fundamental(tc, m),
        _ => base_characteristic(tc, m),
    }
}

/// `e(N)` times a rational function, as a Laurent polynomial.
fn times_euler(tc: &TheoryContext, r: &RatFunc) -> Result<LaurentPoly> {
    r.mul_factors_into_laurent(&euler_factors(tc))
}

/// The printed `n = 4` example: minimal-orbit inputs and the four classes
/// of `O_{(12)(34)}`.
pub fn n4_example() -> Report {
    let mut report = Report::new("paper-examples");
    let w = Involution::parse(4, "(1,2)(3,4)").expect("valid");
    for (theory, kind, printed) in N4_BASES {
        report.check_result(
            format!("n=4 {theory} {kind} minimal orbit input"),
            (|| {
                let tc = TheoryContext::new(theory, UMode::Keep, 4)?;
                let expected = parse_ratfunc(printed, tc.vars, &Naming::Standard)?;
                let base = base_for(&tc, kind, 2)?;
                Ok((base == expected, if base == expected { String::new() } else { base.to_string() }))
            })(),
        );
    }
    for (theory, kind, printed) in N4_PRINTED {
        report.check_result(
            format!("n=4 {w} {theory} {kind}"),
            (|| {
                let tc = TheoryContext::new(theory, UMode::Keep, 4)?;
                let expected = times_euler(&tc, &parse_ratfunc(printed, tc.vars, &Naming::Standard)?)?;
                let r = compute_class(&w, &tc, kind)?;
                let pass = r.value == expected && r.word == ReducedWord(vec![2]);
                Ok((pass, if pass { String::new() } else { Naming::Standard.poly(&r.value) }))
            })(),
        );
    }
    report
}

/// The printed inputs of the `n = 7` example, written without `u`: `u = 0`
/// in cohomology and `u = 1` in K-theory. The third factor of the motivic
/// input is printed as `(1+y)+t7/t2`; the minimal-orbit formula gives
/// `(1+y) t7/t2`, which is what is checked.
pub const N7_BASES: [(Theory, Kind, &str); 4] = [
    (Theory::Cohomology, Kind::Fundamental, "1/((t1-t6)(t1-t7)(t2-t7))"),
    (Theory::Cohomology, Kind::Csm, "(1+t1-t7)/((t1-t6)(t1-t7)(t2-t7))"),
    (Theory::KTheory, Kind::Fundamental, "1/((1-t7/t1)(1-t6/t1)(1-t7/t2))"),
    (
        Theory::KTheory,
        Kind::Mc,
        "(1+y t7/t1)((1+y)t6/t1)((1+y)t7/t2)/((1-t6/t1)(1-t7/t1)(1-t7/t2))",
    ),
];

/// The printed `n = 7` example: word, minimal-orbit inputs, and the
/// fundamental class along the printed word.
pub fn n7_example() -> Report {
    let mut report = Report::new("paper-examples");
    let w = Involution::parse(7, "(1,6)(3,4)").expect("valid");
    let word = ReducedWord(vec![2, 6, 4, 5, 6]);
    report.check_result(
        format!("n=7 {w} word {word} is valid"),
        classes::check_word(&w, &word).map(|p| (p.length() == 5, String::new())),
    );
    for (theory, kind, printed) in N7_BASES {
        let u_mode = if theory == Theory::Cohomology { UMode::Zero } else { UMode::One };
        report.check_result(
            format!("n=7 {theory} {kind} minimal orbit input"),
            (|| {
                let tc = TheoryContext::new(theory, u_mode, 7)?;
                let expected = parse_ratfunc(printed, tc.vars, &Naming::Standard)?;
                let base = base_for(&tc, kind, 2)?;
                Ok((base == expected, if base == expected { String::new() } else { base.to_string() }))
            })(),
        );
    }
    report.check_result(
        format!("n=7 {w} fundamental class along the printed word"),
        (|| {
            let tc = TheoryContext::cohomology(7)?;
            let printed = compute_class_with_word(&w, &word, &tc, Kind::Fundamental)?;
            let default = compute_class(&w, &tc, Kind::Fundamental)?;
            let degree_ok = printed.value.is_homogeneous() && printed.value.total_degree() == Some(w.codim() as i32);
            Ok((degree_ok && printed.value == default.value, String::new()))
        })(),
    );
    report
}

pub fn porteous_printed() -> Report {
    let mut report = Report::new("porteous");
    report.check_result(
        "n=8 (4,6) determinant is c3^2 - c2 c4",
        (|| {
            let d = schubert::porteous_symbolic(4, 6, 8)?;
            let expected = parse_poly("c3^2 - c2*c4", d.ctx(), &Naming::Chern)?;
            Ok((d == expected, Naming::Chern.poly(&d)))
        })(),
    );
    report
}

pub fn longest_convention_check(n_max: usize) -> Report {
    let mut report = Report::new("grothendieck");
    let sizes: Vec<usize> = (1..=n_max).collect();
    let (valid, runs) = schubert::adjudicate_longest_grothendieck(&sizes);
    let names: Vec<String> = valid.iter().map(|c| c.to_string()).collect();
    let failed = runs.failures().count();
    report.check(
        format!("longest-element convention for n<={n_max}"),
        valid.contains(&schubert::LongestConvention::Staircase),
        format!("consistent: {}; {failed} of {} comparisons fail overall", names.join(", "), runs.len()),
    );
    report
}

/// Random rational functions of the shape the operators see: a small
/// numerator over a product of Euler classes of coordinate weights.
pub fn random_ratfunc(rng: &mut impl Rng, tc: &TheoryContext) -> RatFunc {
    let n = tc.n();
    let ctx = tc.vars;
    let k = tc.theory == Theory::KTheory;
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let mut e = Exps::ZERO;
        for i in 1..=n {
            let p = if k { rng.gen_range(-1..=1) } else { rng.gen_range(0..=2) };
            e = e.add(&Exps::unit(ctx.slot(Var::T(i)), p));
        }
        if ctx.contains(Var::U) {
            let pu = if k { rng.gen_range(-1..=1) } else { rng.gen_range(0..=1) };
            e = e.add(&Exps::unit(ctx.slot(Var::U), pu));
        }
        if ctx.contains(Var::Y) {
            e = e.add(&Exps::unit(ctx.slot(Var::Y), rng.gen_range(0..=1)));
        }
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        (e, Int::from(c))
    });
    let mut num = LaurentPoly::from_terms(ctx, terms);
    if num.is_zero() {
        num = LaurentPoly::one(ctx);
    }
    let den = (0..rng.gen_range(0..=2)).map(|_| {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        (euler_of_weight(tc, &coordinate_weight(i, j)), 1)
    });
    RatFunc::from_factors(num, den).expect("Euler classes of coordinate weights are nonzero")
}

fn word_value(op: OperatorKind, letters: &[usize], x: &RatFunc) -> Result<RatFunc> {
    op.apply_word(&ReducedWord(letters.to_vec()), x)
}

/// Nilpotence, idempotence and braid relations of the four operators, and
/// their values on `1`, on `samples` random inputs per theory.
pub fn operator_properties(n: usize, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("properties");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for theory in [Theory::Cohomology, Theory::KTheory] {
        let tc = TheoryContext::new(theory, UMode::Keep, n).expect("small n");
        let (beta, a) = match theory {
            Theory::Cohomology => (OperatorKind::BetaH, OperatorKind::AH),
            Theory::KTheory => (OperatorKind::BetaK, OperatorKind::AK),
        };
        let one = RatFunc::one(tc.vars);
        report.check_result(
            format!("n={n} {a} of 1"),
            (|| {
                let expected = match theory {
                    Theory::Cohomology => one.clone(),
                    Theory::KTheory => RatFunc::var(tc.vars, Var::Y).neg(),
                };
                let all = (1..n).map(|i| a.apply(&one, i)).collect::<Result<Vec<_>>>()?;
                Ok((all.iter().all(|v| *v == expected), String::new()))
            })(),
        );
        for s in 0..samples {
            let x = random_ratfunc(&mut rng, &tc);
            report.check_result(
                format!("n={n} sample {s} {beta} squared"),
                (|| {
                    let mut ok = true;
                    for i in 1..n {
                        let twice = word_value(beta, &[i, i], &x)?;
                        ok &= match theory {
                            Theory::Cohomology => twice.is_zero(),
                            Theory::KTheory => twice == beta.apply(&x, i)?,
                        };
                    }
                    Ok((ok, String::new()))
                })(),
            );
            // Exploratory: A^2 = 1 and (A^K + 1)(A^K + y) = 0.
            report.check_result(
                format!("n={n} sample {s} {a} quadratic relation"),
                (|| {
                    let mut ok = true;
                    for i in 1..n {
                        let once = a.apply(&x, i)?;
                        let twice = a.apply(&once, i)?;
                        ok &= match theory {
                            Theory::Cohomology => twice == x,
                            Theory::KTheory => {
                                let y = RatFunc::var(tc.vars, Var::Y);
                                let lin = once.checked_mul(&y.checked_add(&one)?)?.checked_add(&x.checked_mul(&y)?)?;
                                twice.checked_add(&lin)?.is_zero()
                            }
                        };
                    }
                    Ok((ok, String::new()))
                })(),
            );
            for op in [beta, a] {
                report.check_result(
                    format!("n={n} sample {s} {op} braid relations"),
                    (|| {
                        let mut bad = Vec::new();
                        for i in 1..n {
                            for j in i + 1..n {
                                let (l, r) = if j == i + 1 {
                                    (word_value(op, &[i, j, i], &x)?, word_value(op, &[j, i, j], &x)?)
                                } else {
                                    (word_value(op, &[i, j], &x)?, word_value(op, &[j, i], &x)?)
                                };
                                if l != r {
                                    bad.push(format!("({i},{j})"));
                                }
                            }
                        }
                        Ok((bad.is_empty(), bad.join(" ")))
                    })(),
                );
            }
        }
    }
    report
}

/// The lowest-degree part of the CSM class is the fundamental class, and
/// the motivic Chern class has `y`-degree `dim O_w`, for every orbit of
/// `S_n`.
pub fn class_properties(n: usize) -> Report {
    let mut report = Report::new("properties");
    for w in enumerate_involutions(n) {
        report.check_result(
            format!("n={n} {w} CSM lowest part is the fundamental class"),
            (|| {
                let tc = TheoryContext::cohomology(n)?;
                let csm = compute_class(&w, &tc, Kind::Csm)?;
                let fund = compute_class(&w, &tc, Kind::Fundamental)?;
                Ok((csm_lowest_part(&csm)? == fund.value, String::new()))
            })(),
        );
        report.check_result(
            format!("n={n} {w} y-degree of mC is the orbit dimension"),
            (|| {
                let tc = TheoryContext::k_theory(n)?;
                let mc = compute_class(&w, &tc, Kind::Mc)?;
                let deg = classes::y_degree(&mc.value).unwrap_or(0);
                Ok((deg as usize == w.orbit_dim(), format!("deg {deg}, dim {}", w.orbit_dim())))
            })(),
        );
    }
    report
}
