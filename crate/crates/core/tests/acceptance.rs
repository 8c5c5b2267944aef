//! One line per acceptance criterion.  Runs every suite at default options and
//! groups their checks.  Exits non-zero only if a check fails that is not on
//! the list of known, analysed deviations below.

use std::process::ExitCode;

use twistlab::report::{Check, Status};
use twistlab::suites::{run_suites, Options, SuiteResult};

struct Criterion {
    id: u32,
    title: &'static str,
    /// (suite, check-name prefix); an empty prefix takes the whole suite.
    select: &'static [(&'static str, &'static str)],
    budget_ms: Option<u64>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "closed-form star product vs PBW oracle through h^2",
        select: &[("cbh", "closed-form/")],
        budget_ms: Some(60_000),
    },
    Criterion {
        id: 2,
        title: "cochain reproduces the U_h(g) product, degree <= 5, three alphas",
        select: &[("twist", "product/")],
        budget_ms: Some(90_000),
    },
    Criterion {
        id: 3,
        title: "Delta_F closes on g* at zeta = -1/12; zeta = 0 control leaks",
        select: &[("coproduct", "closure/"), ("coproduct", "closure-zeta0-control/")],
        budget_ms: None,
    },
    Criterion { id: 4, title: "coproduct pairing reproduces the CBH series", select: &[("coproduct", "pairing/")], budget_ms: None },
    Criterion { id: 5, title: "Duflo reduction equals the coboundary", select: &[("duflo", "")], budget_ms: None },
    Criterion { id: 6, title: "b+ series, closed form and third-order part", select: &[("bplus", "")], budget_ms: Some(60_000) },
    Criterion { id: 7, title: "sphere geometry, psi reduction, products, Fedosov term", select: &[("sphere", "")], budget_ms: Some(120_000) },
    Criterion {
        id: 8,
        title: "sl3 trilinear values and positive obstruction",
        select: &[("precon", "sl3/")],
        budget_ms: None,
    },
    Criterion { id: 9, title: "Mackey brackets, preconnection and curvature tables", select: &[("mackey", "")], budget_ms: None },
    Criterion {
        id: 10,
        title: "coassociator, so(1,3) psi, one-form products, spacetime and sphere forms",
        select: &[
            ("twist", "coassociator/"),
            ("twist", "so13/"),
            ("dcalc", "one-forms/"),
            ("spacetime", ""),
            ("sphere-forms", ""),
        ],
        budget_ms: None,
    },
    Criterion {
        id: 11,
        title: "seeded property suites, 200 cases each",
        select: &[("lie", "property/"), ("cbh", "property/"), ("dcalc", "property/")],
        budget_ms: None,
    },
];

/// Failures analysed in the decisions ledger: the ζ = 0 control cannot leak
/// (the Killing element commutes with Δx), and the displayed sl₃ values are
/// not those of the determinant form.
const KNOWN: &[(&str, &str)] = &[("coproduct", "closure-zeta0-control/"), ("precon", "sl3/trilinear-values")];

fn selected<'a>(results: &'a [SuiteResult], c: &Criterion) -> Vec<(&'a str, &'a Check)> {
    let mut out = Vec::new();
    for r in results {
        for ch in &r.checks {
            if c.select.iter().any(|(s, p)| *s == r.name && ch.name.starts_with(p)) {
                out.push((r.name.as_str(), ch));
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let opts = Options { jobs, ..Options::default() };
    let results = run_suites(&["all"], &opts).expect("suites run");
    let mut unexpected = Vec::new();
    for c in CRITERIA {
        let checks = selected(&results, c);
        let ms: u64 = checks.iter().map(|(_, ch)| ch.runtime_ms).sum();
        let failed: Vec<_> = checks.iter().filter(|(_, ch)| !ch.passed()).collect();
        let flagged = checks.iter().filter(|(_, ch)| ch.status == Status::Flagged).count();
        let over = c.budget_ms.is_some_and(|b| ms > b);
        let ok = !checks.is_empty() && failed.is_empty() && !over;
        let mut line = format!(
            "criterion {:>2}: {}  {} ({} checks, {} flagged, {} ms)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            checks.len(),
            flagged,
            ms
        );
        if over {
            line += &format!(" over budget of {} ms", c.budget_ms.unwrap());
        }
        println!("{}", line);
        for (suite, ch) in &failed {
            let known = KNOWN.iter().any(|(s, p)| s == suite && ch.name.starts_with(p));
            println!("    {} {}/{}: expected {}; got {}", if known { "known" } else { "NEW  " }, suite, ch.name, ch.expected, ch.actual);
            if !known {
                unexpected.push(format!("{}/{}", suite, ch.name));
            }
        }
        if checks.is_empty() || over {
            unexpected.push(format!("criterion {}", c.id));
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
