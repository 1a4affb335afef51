//! Structured pass/fail records produced by the verification suites.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// Parameter point a record was evaluated at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn n(n: usize) -> Self {
        Params { n: Some(n), ..Params::default() }
    }

    pub fn p(p: usize) -> Self {
        Params { p: Some(p), ..Params::default() }
    }

    pub fn cap(cap: usize) -> Self {
        Params { cap: Some(cap), ..Params::default() }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(cap) = self.cap {
            parts.push(format!("cap={cap}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(location: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Counterexample { location: location.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: expected {}, got {}", self.location, self.expected, self.actual)
    }
}

/// Result of a single assertion: `Err` carries the first counterexample.
pub type Outcome = std::result::Result<(), Counterexample>;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

impl CheckRecord {
    pub fn from_outcome(check: impl Into<String>, params: Params, outcome: Outcome) -> Self {
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(c) => (Status::Fail, Some(c)),
        };
        CheckRecord { check: check.into(), params, status, counterexample, note: None, elapsed_ms: 0.0 }
    }

    /// Runs `f`, recording its wall time.
    pub fn timed(check: impl Into<String>, params: Params, f: impl FnOnce() -> Outcome) -> Self {
        let start = Instant::now();
        let outcome = f();
        let mut record = CheckRecord::from_outcome(check, params, outcome);
        record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        record
    }

    pub fn skipped(check: impl Into<String>, params: Params, note: impl Into<String>) -> Self {
        CheckRecord {
            check: check.into(),
            params,
            status: Status::Skipped,
            counterexample: None,
            note: Some(note.into()),
            elapsed_ms: 0.0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.check)?;
        let params = self.params.to_string();
        if !params.is_empty() {
            write!(f, " [{params}]")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " {c}")?;
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn new(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| a.check.cmp(&b.check).then(a.params.cmp(&b.params)));
        VerifyReport { records }
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    /// 0 when every record passed or was skipped, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
