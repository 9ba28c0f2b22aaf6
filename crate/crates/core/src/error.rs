use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range for N = {n} (expected 1..={max})", max = .n.saturating_sub(1))]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid signed diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid non-decreasing parking function: {0}")]
    InvalidNdpf(String),

    #[error("N = {n} is outside the supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },

    /// No power `x^k` with `x^k = x^{k+1}` was found for `k <= cap`.
    #[error("element is not demipotent within {cap} powers{}", diagram_suffix(.diagram))]
    NotDemipotent { cap: usize, diagram: Option<String> },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("branching sum C_D+ + C_D- != C_D for D = {diagram:?}")]
    BranchSumViolation { diagram: String },

    #[error("NDPF quotient relation failed: {0}")]
    NdpfRelation(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("csv output: {0}")]
    Csv(String),
}

fn diagram_suffix(diagram: &Option<String>) -> String {
    match diagram {
        Some(d) => format!(" (diagram {d:?})"),
        None => String::new(),
    }
}
