use crate::error::{Error, Result};
use crate::eval::CandidateSet;
use crate::graph::Graph;
use crate::rng::SampleRng;

/// `k` distinct vertices drawn uniformly without replacement.
///
/// Stream 0 of `seed`; see [`crate::rng`] for the exact algorithm.
pub fn random_candidate(g: &Graph, k: usize, seed: u64) -> Result<CandidateSet> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, max: n });
    }
    let vertices = SampleRng::new(seed).sample_distinct(n, k);
    CandidateSet::new(g, vertices)
}
