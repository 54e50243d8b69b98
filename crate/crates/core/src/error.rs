use thiserror::Error;

use crate::delta3::Claim;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not split: induced {kind} on {vertices:?}")]
    NotSplit {
        kind: &'static str,
        vertices: Vec<usize>,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("premise violated: {0}")]
    PremiseViolated(String),

    #[error("census constraint of {claim} violated: {detail}")]
    CensusViolation { claim: Claim, detail: String },

    #[error("no construction of {claim} applies ({state})")]
    CaseFallthrough { claim: Claim, state: String },

    #[error("no vertex of N^I(v) meets the adjacency requirement: {0}")]
    ClaimViolated(String),

    #[error("desired path and remaining paths do not cover the graph: {0}")]
    CoverageGap(String),

    #[error("vertex {vertex} has degree {degree} > 3")]
    DegreeTooHigh { vertex: usize, degree: usize },

    #[error("not bipartite with the given parts: edge {0}-{1} inside one part")]
    NotBipartite(usize, usize),

    #[error("cycle uses clique edge {0}-{1}")]
    UsesCliqueEdge(usize, usize),

    #[error("generator gave up after {0} attempts")]
    GenerationExhausted(u64),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
