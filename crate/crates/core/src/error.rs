use std::io;
use std::path::PathBuf;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no edges after removing self-loops")]
    EmptyGraph,

    #[error("graph is not connected; extract the largest connected component first")]
    Disconnected,

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: u64, vertex_count: usize },

    #[error("vertex {0} appears more than once in the candidate set")]
    DuplicateVertex(VertexId),

    #[error("k = {k} out of range, expected 1 <= k <= {max}")]
    InvalidK { k: usize, max: usize },

    #[error("average distance is undefined when the candidate set covers every vertex")]
    FullCandidateSet,

    #[error("PageRank did not converge in {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("brute force needs {required} subset evaluations but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("brute force supports at most {limit} vertices, graph has {vertices}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("no exact result for network {network:?} at k = {k}")]
    MissingExact { network: String, k: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Stream(#[from] io::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
