//! Acceptance criteria 1 to 11, one line each.
//!
//! Runs without the libtest harness so the per-criterion lines are always
//! printed. A criterion whose only failing checks are listed in `KNOWN`
//! still prints FAIL but does not fail the run; anything else does.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilorbit::combin::enumerate_involutions;
use nilorbit::operators::Theory;
use nilorbit::schubert::{self, LongestConvention};
use nilorbit::verify::{self, Errata, Report};
use nilorbit::weightfn;

/// Checks that fail for reasons outside the implementation, with the reason.
const KNOWN: [(&str, &str); 3] = [
    (
        "has at least 3 reduced words",
        "the orbit has fewer than 3 reduced words over all its minimal conjugators",
    ),
    (
        "table (1,5)(2,4)(3,6) printed polynomial",
        "the printed S_312 entry (x1 - y1)(x1 - y1) repeats a factor; block class and S_312 are (x1 - y1)(x1 - y2)",
    ),
    ("printed W_21", "the printed W_21 has g1/z2 in the y-term; orbit geometry and the recursion give g1/z1"),
];

fn known_reason(case: &str) -> Option<&'static str> {
    KNOWN.iter().find(|(k, _)| case.ends_with(k)).map(|&(_, r)| r)
}

struct Outcome {
    number: usize,
    title: &'static str,
    report: Report,
    summary: String,
    elapsed: Duration,
}

impl Outcome {
    /// Prints the line and returns whether the run may continue as passing.
    fn emit(&self) -> bool {
        let failures: Vec<_> = self.report.failures().collect();
        let unexpected: Vec<_> = failures.iter().filter(|c| known_reason(&c.case).is_none()).collect();
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {}: {} checks, {} failed, {:.1?}; {}",
            self.number,
            self.title,
            self.report.len(),
            failures.len(),
            self.elapsed,
            self.summary
        );
        let mut reasons: Vec<&str> = failures.iter().filter_map(|c| known_reason(&c.case)).collect();
        reasons.dedup();
        for r in reasons {
            let count = failures.iter().filter(|c| known_reason(&c.case) == Some(r)).count();
            println!("    known ({count}): {r}");
        }
        for c in &unexpected {
            println!("    unexpected: {} {}", c.case, c.detail);
        }
        unexpected.is_empty()
    }
}

fn run(number: usize, title: &'static str, f: impl FnOnce() -> (Report, String)) -> Outcome {
    let start = Instant::now();
    let (report, summary) = f();
    Outcome { number, title, report, summary, elapsed: start.elapsed() }
}

fn merged(reports: impl IntoIterator<Item = Report>) -> Report {
    verify::merge("acceptance", reports)
}

fn dimension() -> (Report, String) {
    let mut reports: Vec<Report> = (1..=8).map(verify::dimension_checks).collect();
    let mut printed = Report::new("dim");
    let total: usize = (1..=8).map(|n| enumerate_involutions(n).len()).sum();
    let w = nilorbit::combin::Involution::parse(8, "(2,6)(4,7)").expect("valid");
    printed.check_eq("n=8 (2,6)(4,7) has dimension 8", &w.orbit_dim(), &8);
    reports.push(printed);
    let counts: Vec<String> = (1..=8).map(|n| verify::involution_count(n).to_string()).collect();
    let summary = format!(
        "{total} involutions for n=1..8 (counts {}; the criterion text states 3,693); formula = arcs = length = tangent rank",
        counts.join(",")
    );
    (merged(reports), summary)
}

fn conjugation() -> (Report, String) {
    let mut reports: Vec<Report> = (1..=8).map(verify::conjugation_checks).collect();
    let printed = verify::printed_combinatorics();
    let conj: Report = Report {
        suite: printed.suite.clone(),
        checks: printed.checks.into_iter().filter(|c| c.case.contains("conjugat")).collect(),
    };
    reports.push(conj);
    (merged(reports), format!("all n<=8 by dense matrix products; (1,5)(2,6)(3,4) by {:?}", verify::THREE_CONJUGATORS))
}

fn worked_example() -> (Report, String) {
    (merged([verify::n4_example()]), "(1,2)(3,4) in N_4: fund, CSM, K-fund and mC against the printed displays".into())
}

fn localization() -> (Report, String) {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n in 1..=5 {
        for theory in [Theory::Cohomology, Theory::KTheory] {
            reports.push(verify::localization_checks(n, theory));
        }
    }
    let elapsed = start.elapsed();
    let mut timing = Report::new("localization");
    timing.check("runtime under 5 minutes", elapsed < Duration::from_secs(300), format!("{elapsed:?}"));
    reports.push(timing);
    (merged(reports), "every orbit n<=5, cohomology and K-theory, u kept".into())
}

fn word_independence() -> (Report, String) {
    let mut reports = Vec::new();
    let mut counts = Report::new("words");
    let (mut orbits, mut short) = (0, 0);
    for n in 1..=5 {
        reports.push(verify::word_independence(n, 3));
        for w in enumerate_involutions(n) {
            if w.pi_w().length() < 2 {
                continue;
            }
            orbits += 1;
            let k = verify::valid_words(&w, 256).len();
            short += usize::from(k < 3);
            counts.check(format!("n={n} {w} has at least 3 reduced words"), k >= 3, format!("{k} found"));
        }
    }
    reports.push(counts);
    let summary = format!(
        "{orbits} orbits with l(pi_w) >= 2; classes agree over all available words (up to 3); {short} orbits have fewer than 3 words"
    );
    (merged(reports), summary)
}

fn schubert_oracle() -> (Report, String) {
    let mut reports: Vec<Report> = (2..=4).map(schubert::verify_schubert_block).collect();
    reports.push(schubert::verify_s3_table(Errata::AsPrinted));
    reports.push(schubert::verify_left_recursion(3));
    reports.push(schubert::verify_left_recursion(4));
    (merged(reports), "block classes = double Schubert for all of S_2, S_3, S_4; printed S_3 table; left recursion on S_3, S_4".into())
}

fn grothendieck_oracle() -> (Report, String) {
    let mut reports: Vec<Report> =
        (2..=3).map(|n| schubert::verify_grothendieck_block(n, LongestConvention::Staircase)).collect();
    let (valid, runs) = schubert::adjudicate_longest_grothendieck(&[2, 3]);
    let mut adjudication = Report::new("grothendieck");
    adjudication.check(
        "staircase is the only convention consistent at n=2,3",
        valid == [LongestConvention::Staircase],
        format!("{valid:?}"),
    );
    reports.push(adjudication);
    let anti_failures = runs.failures().filter(|c| c.case.ends_with("longest=i+j=n")).count();
    let summary = format!(
        "longest element adjudicated: staircase prod_{{i+j<=n}}(1 - y_j/x_i); the printed i+j=n product fails {anti_failures} orbit(s) at n=3"
    );
    (merged(reports), summary)
}

fn porteous() -> (Report, String) {
    let mut reports = vec![verify::porteous_printed()];
    reports.extend((2..=6).map(schubert::verify_porteous));
    reports.push(schubert::verify_walk_words());
    (merged(reports), "c3^2 - c2c4 at n=8 (4,6); determinant = pipeline for all transpositions n<=6; both n=8 (4,5) walks".into())
}

fn boundary() -> (Report, String) {
    (merged([schubert::boundary_identity_checks()]), "square of the point class in Hom(C^2,C^2); beta4 beta5 beta4 = beta5 beta4 beta1".into())
}

fn weight_functions() -> (Report, String) {
    let mut reports = vec![weightfn::verify_printed(Errata::AsPrinted)];
    reports.extend((2..=3).map(weightfn::verify_rtv_recursion));
    (merged(reports), "printed W_12, W_21, W_123; recursion on all covering pairs of S_2, S_3; minimal-orbit display".into())
}

fn properties() -> (Report, String) {
    let mut reports: Vec<Report> = (2..=4).map(|n| verify::operator_properties(n, 20, 0xacce + n as u64)).collect();
    reports.extend((1..=5).map(verify::class_properties));
    (merged(reports), "20 random inputs per n<=4 and theory; all orbits n<=5".into())
}

fn main() -> ExitCode {
    let outcomes = [
        run(1, "dimension agreement", dimension),
        run(2, "conjugation", conjugation),
        run(3, "worked n=4 example", worked_example),
        run(4, "localization oracle", localization),
        run(5, "word independence", word_independence),
        run(6, "Schubert oracle", schubert_oracle),
        run(7, "Grothendieck oracle", grothendieck_oracle),
        run(8, "Porteous", porteous),
        run(9, "boundary identities", boundary),
        run(10, "weight functions", weight_functions),
        run(11, "property suites", properties),
    ];
    let mut ok = true;
    for o in &outcomes {
        ok &= o.emit();
    }
    let passed = outcomes.iter().filter(|o| o.report.passed()).count();
    println!("acceptance: {passed} of {} criteria pass", outcomes.len());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
