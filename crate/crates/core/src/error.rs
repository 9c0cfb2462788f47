use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by graph construction, parsing and analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; supported range is 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeAbsent(usize, usize),
    #[error("edge {{{0}, {1}}} is already present")]
    EdgePresent(usize, usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid part sizes: {0}")]
    PartSizes(String),
    #[error("graph is disconnected (no path between {0} and {1})")]
    Disconnected(usize, usize),
    #[error("operation limited to n <= {limit}, got n = {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("corpus fixture missing: {0}")]
    MissingFixture(PathBuf),
    #[error("corpus for n = {n} has {found} graphs, expected {expected}")]
    CorpusCount {
        n: usize,
        found: usize,
        expected: usize,
    },
    #[error("corpus entry has {found} vertices, expected {expected}")]
    CorpusMismatch { expected: usize, found: usize },
    #[error("reference table: {0}")]
    Reference(String),
    #[error("not a partition of the vertex set: {0}")]
    NotPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
