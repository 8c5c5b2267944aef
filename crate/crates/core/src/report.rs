//! Check records shared by every suite.

use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented disagreement with a displayed formula; never fails a run.
    Flagged,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub runtime_ms: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
            runtime_ms: 0,
        }
    }

    /// Passes iff the two renderings coincide.
    pub fn same(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let (e, a) = (expected.into(), actual.into());
        Check::new(name, e == a, e, a)
    }

    pub fn flagged(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Check { status: Status::Flagged, ..Check::new(name, true, expected, actual) }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Runs `f` and records its wall time.  Panics inside `f` become failures.
    pub fn timed(name: impl Into<String>, f: impl FnOnce() -> Check) -> Check {
        let name = name.into();
        let t = Instant::now();
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f));
        let ms = t.elapsed().as_millis() as u64;
        match r {
            Ok(mut c) => {
                if c.name.is_empty() {
                    c.name = name;
                }
                c.runtime_ms = ms;
                c
            }
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Check { runtime_ms: ms, ..Check::new(name, false, "no panic", msg) }
            }
        }
    }
}

/// Counts mismatches over an exhaustive grid and keeps the first one.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failures: usize,
    pub first: Option<(String, String, String)>,
}

impl Tally {
    pub fn record(&mut self, case: impl FnOnce() -> String, expected: &str, actual: &str) {
        self.cases += 1;
        if expected != actual {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some((case(), expected.to_string(), actual.to_string()));
            }
        }
    }

    pub fn merge(&mut self, o: Tally) {
        self.cases += o.cases;
        self.failures += o.failures;
        if self.first.is_none() {
            self.first = o.first;
        }
    }

    pub fn into_check(self, name: impl Into<String>) -> Check {
        match self.first {
            None => Check::new(name, true, format!("{} cases agree", self.cases), format!("{} cases agree", self.cases)),
            Some((case, e, a)) => Check::new(
                name,
                false,
                format!("{} cases agree", self.cases),
                format!("{} of {} differ; first at {}: expected {} got {}", self.failures, self.cases, case, e, a),
            ),
        }
    }
}
