use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constraint system is under-determined: {unknown} cell(s) unresolved, first at ({m},{k})")]
    Unresolved { unknown: usize, m: usize, k: usize },

    #[error("constraint system is inconsistent at ({m},{k}): {reason}")]
    Inconsistent { m: usize, k: usize, reason: String },

    #[error("matrix invariant violated: {0}")]
    InvariantViolation(String),

    #[error("statistic undefined on the one-node tree (n = 0)")]
    EmptyTree,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("enumeration of n = {n} exceeds the configured bound {bound}")]
    EnumerationLimit { n: usize, bound: usize },

    #[error("unknown {kind} `{tag}`")]
    UnknownTag { kind: &'static str, tag: String },

    #[error("degree cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("series has a zero constant term and is not invertible")]
    ZeroConstantTerm,

    #[error("matrix M_{n} is required but was not supplied")]
    InsufficientMatrices { n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
