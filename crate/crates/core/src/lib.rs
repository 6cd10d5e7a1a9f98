//! Heuristics for the k-median problem on unweighted networks.
//!
//! Given a connected graph and a budget `k`, the goal is a set `S` of `k`
//! vertices minimizing the average hop distance from every other vertex to
//! its nearest member of `S`. Solving this exactly needs all `C(|V|, k)`
//! subsets, so the crate ranks vertices with cheap centrality measures and
//! takes the top `k`:
//!
//! * [`graph`] loads edge lists into a compact [`Graph`] (largest connected
//!   component, simple, undirected).
//! * [`eval`] measures a candidate set: farness, average distance, shells.
//! * [`centrality`] holds the eight ranking methods.
//! * [`exact`] enumerates subsets for the optimum and the random baseline.
//! * [`harness`] runs methods × k × networks and writes comparison tables.
//!
//! ```
//! use kmedian::centrality::{rank, MethodId, RankOptions};
//! use kmedian::eval::{evaluate, CandidateSet};
//! use kmedian::graph::Graph;
//!
//! // a star with centre 0
//! let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?;
//! let ranked = rank(&g, MethodId::Degree, 1, &RankOptions::default())?;
//! assert_eq!(ranked.vertices, [0]);
//! let set = CandidateSet::new(&g, ranked.vertices)?;
//! assert_eq!(evaluate(&g, &set)?.avg_distance, 1.0);
//! # Ok::<(), kmedian::Error>(())
//! ```

pub mod centrality;
pub mod error;
pub mod eval;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod rng;

pub use centrality::MethodId;
pub use error::{Error, Result};
pub use eval::{CandidateSet, EvaluationResult};
pub use graph::{Graph, VertexId};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/loading.md")]
    mod loading {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/methods.md")]
    mod methods {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/reproducing.md")]
    mod reproducing {}
}
