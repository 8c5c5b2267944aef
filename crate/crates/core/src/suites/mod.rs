//! Verification suites: each one runs a family of exact checks against an
//! independent computation and returns them as data.

mod algebra;
mod calculus;
mod geometry;
pub mod props;
mod twisting;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{parse_q, Q};
use crate::lie::{load_algebra, LieAlgebra};
use crate::report::{Check, Status};

pub const SUITES: &[&str] = &[
    "bplus", "cbh", "coproduct", "dcalc", "duflo", "lie", "mackey", "precon", "r2n", "spacetime", "sphere", "sphere-forms",
    "twist",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`; valid suites: {list}, all", list = SUITES.join(", "))]
    Unknown(String),
    #[error("invalid option: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone)]
pub struct Options {
    pub order: usize,
    pub max_degree: u32,
    /// Restricts algebra-parametrised suites to one algebra.
    pub algebra: Option<LieAlgebra>,
    /// Restricts α-parametrised checks to one value.
    pub alpha: Option<Q>,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { order: 3, max_degree: 4, algebra: None, alpha: None, seed: 0, jobs: 1 }
    }
}

impl Options {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.order > 3 {
            return Err(SuiteError::Invalid(format!("--order {}: cochains are known through h^3", self.order)));
        }
        if !(1..=8).contains(&self.max_degree) {
            return Err(SuiteError::Invalid(format!("--max-degree {}: expected 1..=8", self.max_degree)));
        }
        if self.jobs == 0 {
            return Err(SuiteError::Invalid("--jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_algebra(mut self, source: &str) -> Result<Self, SuiteError> {
        self.algebra = Some(load_algebra(source).map_err(|e| SuiteError::Invalid(format!("--algebra {}: {}", source, e)))?);
        Ok(self)
    }

    pub fn with_alpha(mut self, text: &str) -> Result<Self, SuiteError> {
        self.alpha = Some(parse_q(text).map_err(|e| SuiteError::Invalid(format!("--alpha: {}", e)))?);
        Ok(self)
    }

    /// The requested algebra if it is one of `names`, else all of `names`.
    /// A custom algebra replaces the list outright.
    pub(crate) fn algebras(&self, names: &[&str]) -> Vec<LieAlgebra> {
        match &self.algebra {
            Some(a) => vec![a.clone()],
            None => names.iter().map(|n| crate::lie::catalogue(n).expect("catalogue entry")).collect(),
        }
    }

    pub(crate) fn alphas(&self) -> Vec<Q> {
        match &self.alpha {
            Some(a) => vec![a.clone()],
            None => vec![crate::exact::qi(0), crate::exact::q(-1, 4), crate::exact::q(-1, 2)],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    fn new(name: &str, checks: Vec<Check>) -> Self {
        let status = if checks.iter().all(|c| c.passed()) { Status::Pass } else { Status::Fail };
        SuiteResult { name: name.to_string(), status, checks }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type Runner = fn(&Options) -> Vec<Check>;

fn runner(name: &str) -> Option<Runner> {
    Some(match name {
        "lie" => algebra::lie,
        "cbh" => algebra::cbh,
        "bplus" => algebra::bplus,
        "twist" => twisting::twist,
        "coproduct" => twisting::coproduct,
        "duflo" => twisting::duflo,
        "sphere" => geometry::sphere,
        "sphere-forms" => geometry::sphere_forms,
        "r2n" => geometry::r2n,
        "precon" => calculus::precon,
        "mackey" => calculus::mackey,
        "dcalc" => calculus::dcalc,
        "spacetime" => calculus::spacetime,
        _ => return None,
    })
}

/// Runs one named suite (not `all`).
pub fn run_suite(name: &str, opts: &Options) -> Result<SuiteResult, SuiteError> {
    opts.validate()?;
    let f = runner(name).ok_or_else(|| SuiteError::Unknown(name.to_string()))?;
    Ok(SuiteResult::new(name, f(opts)))
}

/// Expands `all`, runs the suites on up to `opts.jobs` threads and returns
/// them ordered by name.
pub fn run_suites(names: &[&str], opts: &Options) -> Result<Vec<SuiteResult>, SuiteError> {
    opts.validate()?;
    let mut list: Vec<&str> = Vec::new();
    for &n in names {
        if n == "all" {
            list.extend_from_slice(SUITES);
        } else if runner(n).is_some() {
            list.push(n);
        } else {
            return Err(SuiteError::Unknown(n.to_string()));
        }
    }
    list.sort_unstable();
    list.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| SuiteError::Invalid(format!("--jobs: {}", e)))?;
    let mut out: Vec<SuiteResult> =
        pool.install(|| list.par_iter().map(|n| run_suite(n, opts)).collect::<Result<_, _>>())?;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Report<'a> {
    suites: &'a [SuiteResult],
}

/// Renders results.  Wall times vary between runs, so unless `timings` is
/// set they are written as 0 and the output is byte-identical.
pub fn emit_report(results: &[SuiteResult], format: Format, timings: bool) -> String {
    let scrubbed: Vec<SuiteResult>;
    let results = if timings {
        results
    } else {
        scrubbed = results
            .iter()
            .map(|s| SuiteResult {
                checks: s.checks.iter().map(|c| Check { runtime_ms: 0, ..c.clone() }).collect(),
                ..s.clone()
            })
            .collect();
        &scrubbed
    };
    match format {
        Format::Json => {
            if results.is_empty() {
                return "{\"suites\": []}\n".into();
            }
            let mut s = serde_json::to_string_pretty(&Report { suites: results }).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Text => text_report(results, timings),
    }
}

fn label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Flagged => "FLAG",
    }
}

fn text_report(results: &[SuiteResult], timings: bool) -> String {
    let mut out = String::new();
    let (mut pass, mut fail, mut flag) = (0, 0, 0);
    for s in results {
        let _ = writeln!(out, "== {} [{}]", s.name, label(s.status));
        for c in &s.checks {
            match c.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Flagged => flag += 1,
            }
            if timings {
                let _ = writeln!(out, "  {}  {:<44} {:>7} ms", label(c.status), c.name, c.runtime_ms);
            } else {
                let _ = writeln!(out, "  {}  {}", label(c.status), c.name);
            }
            if c.status != Status::Pass {
                let _ = writeln!(out, "        - expected: {}", c.expected);
                let _ = writeln!(out, "        + actual:   {}", c.actual);
            }
        }
    }
    let _ = writeln!(
        out,
        "summary: {} suites, {} checks, {} passed, {} failed, {} flagged",
        results.len(),
        pass + fail + flag,
        pass,
        fail,
        flag
    );
    out
}

// ---------------------------------------------------------------- helpers

use crate::exact::{Mono, Poly};

/// Monomials of total degree exactly `d` in `n` variables, lexicographic.
pub(crate) fn monos_of_degree(n: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Mono::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Mono::one());
        }
        return out;
    }
    rec(n, 0, d, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn monos_upto(n: usize, d: u32) -> Vec<Mono> {
    (0..=d).flat_map(|k| monos_of_degree(n, k)).collect()
}

pub(crate) fn poly(m: &Mono) -> Poly {
    Poly::term(m.clone(), crate::exact::qi(1))
}

pub(crate) fn show<T: std::fmt::Debug>(x: &T) -> String {
    format!("{:?}", x)
}

/// A check that passes iff `failures` is empty; the first few are shown.
pub(crate) fn none_of(name: &str, what: &str, failures: Vec<String>) -> Check {
    if failures.is_empty() {
        Check::new(name, true, format!("no {}", what), format!("no {}", what))
    } else {
        let head: Vec<&str> = failures.iter().take(3).map(|s| s.as_str()).collect();
        Check::new(name, false, format!("no {}", what), format!("{} {}: {}", failures.len(), what, head.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monos_of_degree(3, 2).len(), 6);
        assert_eq!(monos_upto(2, 3).len(), 10);
        assert_eq!(monos_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn empty_json_report() {
        assert_eq!(emit_report(&[], Format::Json, false), "{\"suites\": []}\n");
    }

    #[test]
    fn unknown_suite_lists_names() {
        let e = run_suite("nosuch", &Options::default()).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("nosuch") && msg.contains("duflo") && msg.contains("sphere-forms"));
        assert!(run_suites(&["all", "nosuch"], &Options::default()).is_err());
    }

    #[test]
    fn invalid_options() {
        let o = Options { order: 4, ..Options::default() };
        assert!(matches!(run_suite("duflo", &o), Err(SuiteError::Invalid(_))));
        assert!(Options::default().with_alpha("1/0").is_err());
        assert!(Options::default().with_algebra("nosuch_algebra").is_err());
    }
}
