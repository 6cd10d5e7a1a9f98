//! Small deterministic graph families and seeded random generators, for
//! tests, examples and synthetic benchmarks.

use crate::graph::{Graph, VertexId};
use crate::rng::SampleRng;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as VertexId).map(|v| (v - 1, v))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    let n32 = n as VertexId;
    Graph::from_edges(n, (0..n32).map(|v| (v, (v + 1) % n32))).expect("valid cycle")
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as VertexId).map(|v| (0, v))).expect("valid star")
}

pub fn complete(n: usize) -> Graph {
    let n32 = n as VertexId;
    Graph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
        .expect("valid clique")
}

/// Connected random graph: a uniform random recursive tree plus each
/// remaining pair independently with probability `extra_edge_prob`.
pub fn random_connected(n: usize, extra_edge_prob: f64, seed: u64) -> Graph {
    let mut rng = SampleRng::new(seed);
    let mut edges = Vec::new();
    for v in 1..n as VertexId {
        let parent = rng.below(u64::from(v)) as VertexId;
        edges.push((parent, v));
    }
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.unit() < extra_edge_prob {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Preferential attachment: a clique on `m + 1` seed vertices, then every
/// new vertex links to `m` distinct existing vertices chosen with
/// probability proportional to degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Graph {
    assert!(m >= 1 && n > m, "need n > m >= 1");
    let mut rng = SampleRng::new(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(n * m);
    // every edge contributes both endpoints, so sampling a slot is degree-biased
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * n * m);
    for u in 0..=m as VertexId {
        for v in u + 1..=m as VertexId {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut targets: Vec<VertexId> = Vec::with_capacity(m);
    for v in (m + 1) as VertexId..n as VertexId {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.below(endpoints.len() as u64) as usize];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(n, edges).expect("valid BA graph")
}
