//! Vertex rankings used as k-median candidate sets.
//!
//! Six of the methods assign every vertex a score and take the top `k`
//! ([`top_k`]); VoteRank selects vertices one round at a time; `random`
//! draws a uniform k-subset. Every tie is broken by ascending vertex id so
//! the same graph always yields the same ranking.

mod coreness;
mod hindex;
mod pagerank;
mod random;
mod voterank;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use coreness::{core_numbers, coreness_scores, extended_coreness_scores};
pub use hindex::{h_index, h_index_scores};
pub use pagerank::{pagerank_scores, PageRankConfig};
pub use random::random_candidate;
pub use voterank::{voterank, voterank_with, VoteRank, VoteState};

/// The eight selection methods, in table column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodId {
    Degree,
    DegreePlus,
    PageRank,
    VoteRank,
    Core,
    CorePlus,
    HIndex,
    Random,
}

impl MethodId {
    pub const ALL: [MethodId; 8] = [
        MethodId::Degree,
        MethodId::DegreePlus,
        MethodId::PageRank,
        MethodId::VoteRank,
        MethodId::Core,
        MethodId::CorePlus,
        MethodId::HIndex,
        MethodId::Random,
    ];

    pub const DETERMINISTIC: [MethodId; 7] = [
        MethodId::Degree,
        MethodId::DegreePlus,
        MethodId::PageRank,
        MethodId::VoteRank,
        MethodId::Core,
        MethodId::CorePlus,
        MethodId::HIndex,
    ];

    /// Identifier used on the command line and in CSV files.
    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::Degree => "degree",
            MethodId::DegreePlus => "degree+",
            MethodId::PageRank => "prank",
            MethodId::VoteRank => "vrank",
            MethodId::Core => "core",
            MethodId::CorePlus => "core+",
            MethodId::HIndex => "hindex",
            MethodId::Random => "random",
        }
    }

    /// Display name for tables.
    pub fn label(self) -> &'static str {
        match self {
            MethodId::PageRank => "PRank",
            MethodId::VoteRank => "VRank",
            MethodId::HIndex => "H-index",
            other => other.as_str(),
        }
    }

    pub fn is_deterministic(self) -> bool {
        self != MethodId::Random
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let method = match lower.as_str() {
            "degree" => MethodId::Degree,
            "degree+" | "degreeplus" => MethodId::DegreePlus,
            "prank" | "pagerank" => MethodId::PageRank,
            "vrank" | "voterank" => MethodId::VoteRank,
            "core" => MethodId::Core,
            "core+" | "coreplus" => MethodId::CorePlus,
            "hindex" | "h-index" => MethodId::HIndex,
            "random" => MethodId::Random,
            _ => {
                return Err(Error::InvalidArgument(format!("unknown method {s:?}")));
            }
        };
        Ok(method)
    }
}

/// One finite score per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    scores: Vec<f64>,
}

impl ScoreVector {
    pub fn new(scores: Vec<f64>) -> Result<Self> {
        if let Some(v) = scores.iter().position(|s| !s.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "score of vertex {v} is not finite"
            )));
        }
        Ok(ScoreVector { scores })
    }

    pub(crate) fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> Self {
        ScoreVector {
            scores: counts.into_iter().map(|c| c as f64).collect(),
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.scores
    }

    pub fn get(&self, v: VertexId) -> f64 {
        self.scores[v as usize]
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// The first `k` vertices selected by a method, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedList {
    pub method: MethodId,
    pub vertices: Vec<VertexId>,
}

/// The `k` highest-scoring vertices in non-increasing score order, equal
/// scores by ascending id.
pub fn top_k(scores: &ScoreVector, k: usize) -> Result<Vec<VertexId>> {
    let n = scores.len();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, max: n });
    }
    let s = scores.as_slice();
    let by_rank = |a: &VertexId, b: &VertexId| {
        s[*b as usize]
            .total_cmp(&s[*a as usize])
            .then_with(|| a.cmp(b))
    };
    let mut ids: Vec<VertexId> = (0..n as VertexId).collect();
    if k < n {
        ids.select_nth_unstable_by(k - 1, by_rank);
        ids.truncate(k);
    }
    ids.sort_unstable_by(by_rank);
    Ok(ids)
}

/// `deg(v)`.
pub fn degree_scores(g: &Graph) -> ScoreVector {
    ScoreVector::from_counts(g.vertices().map(|v| g.degree(v) as u64))
}

/// Sum of the neighbors' degrees.
pub fn extended_degree_scores(g: &Graph) -> ScoreVector {
    ScoreVector::from_counts(
        g.vertices()
            .map(|v| g.neighbors(v).iter().map(|&u| g.degree(u) as u64).sum()),
    )
}

/// Tuning knobs shared by all methods.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RankOptions {
    pub pagerank: PageRankConfig,
    /// VoteRank suppression factor; `None` means `1 / <d>`.
    pub vote_suppression: Option<f64>,
    pub seed: u64,
}

/// Per-vertex scores of a score-based method; `None` for VoteRank and
/// `random`, which select directly.
pub fn method_scores(
    g: &Graph,
    method: MethodId,
    opts: &RankOptions,
) -> Result<Option<ScoreVector>> {
    let scores = match method {
        MethodId::Degree => degree_scores(g),
        MethodId::DegreePlus => extended_degree_scores(g),
        MethodId::PageRank => pagerank_scores(g, &opts.pagerank)?,
        MethodId::Core => coreness_scores(g),
        MethodId::CorePlus => extended_coreness_scores(g),
        MethodId::HIndex => h_index_scores(g),
        MethodId::VoteRank | MethodId::Random => return Ok(None),
    };
    Ok(Some(scores))
}

/// The length-`k` selection of `method`.
pub fn rank(g: &Graph, method: MethodId, k: usize, opts: &RankOptions) -> Result<RankedList> {
    let vertices = match method {
        MethodId::VoteRank => voterank_with(g, k, opts.vote_suppression)?.vertices,
        MethodId::Random => random_candidate(g, k, opts.seed)?.into_vec(),
        _ => {
            let scores = method_scores(g, method, opts)?.expect("score-based method");
            top_k(&scores, k)?
        }
    };
    Ok(RankedList { method, vertices })
}
