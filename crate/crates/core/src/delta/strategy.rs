//! Named build definitions selected at runtime.

use std::fmt;

use super::matrix::DeltaMatrix;
use super::relations::{Boundary, Instance, Recurrence};
use super::solver::{solve_constraints, Assignment};
use crate::{Error, Result};

/// A set of recurrences and boundary conditions that determines `M_n` from `M_{n-1}`.
pub trait BuildStrategy: Send + Sync {
    fn tag(&self) -> &str;

    fn recurrences(&self) -> &[Recurrence];

    fn boundary(&self) -> &[Boundary];

    fn next_matrix(&self, prev: &DeltaMatrix) -> Result<DeltaMatrix> {
        let known: Vec<Assignment> = self.boundary().iter().flat_map(|b| b.assignments(prev)).collect();
        let instances: Vec<Instance> = self.recurrences().iter().flat_map(|r| r.instances(prev)).collect();
        solve_constraints(prev.n() + 1, &known, &instances)
    }
}

impl fmt::Debug for dyn BuildStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

#[derive(Clone, Debug)]
pub struct CatalogStrategy {
    tag: String,
    recurrences: Vec<Recurrence>,
    boundary: Vec<Boundary>,
}

impl CatalogStrategy {
    pub fn new(tag: impl Into<String>, recurrences: &[Recurrence], boundary: &[Boundary]) -> Self {
        CatalogStrategy { tag: tag.into(), recurrences: recurrences.to_vec(), boundary: boundary.to_vec() }
    }
}

impl BuildStrategy for CatalogStrategy {
    fn tag(&self) -> &str {
        &self.tag
    }

    fn recurrences(&self) -> &[Recurrence] {
        &self.recurrences
    }

    fn boundary(&self) -> &[Boundary] {
        &self.boundary
    }
}

pub struct StrategyRegistry {
    entries: Vec<Box<dyn BuildStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { entries: Vec::new() }
    }

    /// The nine definitions `d1`..`d9`.
    pub fn catalog() -> Self {
        use Boundary::*;
        use Recurrence::*;
        let table: [(&str, &[Recurrence], &[Boundary]); 9] = [
            ("d1", &[R1, R2], &[I1, I2]),
            ("d2", &[R3, R4], &[I3, I4]),
            ("d3", &[R1, R3], &[I2, I3]),
            ("d4", &[R2, R4], &[I1, I4]),
            ("d5", &[R1, R3, R4], &[SW, I3]),
            ("d6", &[R1, R2, R4], &[SW, I1]),
            ("d7", &[R1, R2, R3], &[NE, I2]),
            ("d8", &[R2, R3, R4], &[NE, I4]),
            ("d9", &[R1, R2, R3, R4], &[SW, NE]),
        ];
        let mut registry = StrategyRegistry::empty();
        for (tag, recurrences, boundary) in table {
            registry.register(Box::new(CatalogStrategy::new(tag, recurrences, boundary)));
        }
        registry
    }

    /// Adds a strategy, replacing any existing one with the same tag.
    pub fn register(&mut self, strategy: Box<dyn BuildStrategy>) {
        self.entries.retain(|s| s.tag() != strategy.tag());
        self.entries.push(strategy);
    }

    pub fn get(&self, tag: &str) -> Result<&dyn BuildStrategy> {
        self.entries
            .iter()
            .find(|s| s.tag().eq_ignore_ascii_case(tag))
            .map(Box::as_ref)
            .ok_or_else(|| Error::UnknownTag { kind: "strategy", tag: tag.into() })
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BuildStrategy> {
        self.entries.iter().map(Box::as_ref)
    }

    pub fn tags(&self) -> Vec<&str> {
        self.entries.iter().map(|s| s.tag()).collect()
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        StrategyRegistry::catalog()
    }
}
