//! Named verification suites over computed matrices, enumerated trees and
//! generating functions.

mod checks;

use std::path::PathBuf;

use rayon::prelude::*;

use crate::delta::{build_sequence, DeltaSequence, StrategyRegistry};
use crate::golden::Golden;
use crate::report::{CheckRecord, Counterexample, Params, VerifyReport};
use crate::{Error, Result};

/// Enumeration-backed checks stop here unless forced.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub gf_cap: usize,
    pub closed_cap: usize,
    pub p_max: usize,
    pub grid_size: usize,
    pub force: bool,
    pub fixtures: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 8, gf_cap: 10, closed_cap: 12, p_max: 5, grid_size: 8, force: false, fixtures: None }
    }
}

impl VerifyConfig {
    /// Largest `n` enumeration-backed checks may visit.
    pub fn enumeration_limit(&self) -> usize {
        if self.force {
            self.n_max.min(crate::trees::ENUMERATION_BOUND)
        } else {
            self.n_max.min(DEFAULT_ENUMERATION_CAP)
        }
    }
}

/// Shared inputs computed once per run.
pub struct Context {
    pub config: VerifyConfig,
    pub strategies: StrategyRegistry,
    pub reference: DeltaSequence,
    pub golden: Result<Golden>,
}

impl Context {
    pub fn new(config: VerifyConfig, required_n: usize) -> Result<Self> {
        let strategies = StrategyRegistry::catalog();
        let reference = build_sequence(required_n.max(config.n_max).max(1), strategies.get("d1")?)?;
        let golden = match &config.fixtures {
            Some(dir) => Golden::from_dir(dir),
            None => Golden::embedded(),
        };
        Ok(Context { config, strategies, reference, golden })
    }

    /// `M_n` from the reference build.
    pub fn matrix(&self, n: usize) -> &crate::delta::DeltaMatrix {
        self.reference.get(n).expect("reference covers every requested n")
    }
}

/// A named suite of records.
pub trait Check: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    /// Largest `n` of the reference build this suite reads.
    fn required_n(&self, config: &VerifyConfig) -> usize {
        config.n_max
    }

    fn run(&self, ctx: &Context) -> Vec<CheckRecord>;
}

pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = CheckRegistry::empty();
        for c in checks::standard() {
            r.register(c);
        }
        r
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(Box::as_ref)
    }

    /// Resolves selection names; `all` expands to every suite.
    pub fn select(&self, names: &[String]) -> Result<Vec<&dyn Check>> {
        let mut out: Vec<&dyn Check> = Vec::new();
        for name in names {
            if name == "all" {
                out = self.iter().collect();
                continue;
            }
            let check = self
                .iter()
                .find(|c| c.name() == name)
                .ok_or_else(|| Error::UnknownTag { kind: "check", tag: name.clone() })?;
            if !out.iter().any(|c| c.name() == check.name()) {
                out.push(check);
            }
        }
        Ok(out)
    }

    /// Runs the selected suites concurrently.
    pub fn run(&self, names: &[String], config: VerifyConfig) -> Result<VerifyReport> {
        let selected = self.select(names)?;
        let required = selected.iter().map(|c| c.required_n(&config)).max().unwrap_or(1);
        let ctx = Context::new(config, required)?;
        let records: Vec<CheckRecord> = selected.par_iter().flat_map_iter(|c| c.run(&ctx)).collect();
        Ok(VerifyReport::new(records))
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        CheckRegistry::standard()
    }
}

/// `tree counts: 1,4,34,...` from the enumeration records of a report.
pub fn tree_count_line(report: &VerifyReport) -> Option<String> {
    let mut counts: Vec<(usize, String)> = report
        .records
        .iter()
        .filter(|r| r.check == "enumeration.count")
        .filter_map(|r| Some((r.params.n?, r.note.as_ref()?.strip_prefix("trees=")?.to_owned())))
        .collect();
    if counts.is_empty() {
        return None;
    }
    counts.sort();
    Some(format!("tree counts: {}", counts.into_iter().map(|(_, c)| c).collect::<Vec<_>>().join(",")))
}

pub(crate) fn fail(check: &str, params: Params, location: impl Into<String>, err: impl ToString) -> CheckRecord {
    CheckRecord::from_outcome(check, params, Err(Counterexample::new(location, "success", err.to_string())))
}
