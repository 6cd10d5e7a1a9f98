use crate::error::{Error, Result};
use crate::graph::Graph;

use super::ScoreVector;

/// Unnormalized PageRank, `PR(v) = (1 - d) + d * sum over u in N(v) of PR(u) / deg(u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankConfig {
    pub damping: f64,
    /// Stop once the largest per-vertex change in a sweep falls below this.
    pub tolerance: f64,
    pub max_iters: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        PageRankConfig {
            damping: 0.85,
            tolerance: 1e-10,
            max_iters: 200,
        }
    }
}

/// Synchronous (Jacobi) sweeps from the all-ones vector.
pub fn pagerank_scores(g: &Graph, cfg: &PageRankConfig) -> Result<ScoreVector> {
    if !(0.0..1.0).contains(&cfg.damping) {
        return Err(Error::InvalidArgument(format!(
            "damping factor {} outside [0, 1)",
            cfg.damping
        )));
    }
    let n = g.vertex_count();
    let inv_degree: Vec<f64> = g
        .vertices()
        .map(|v| match g.degree(v) {
            0 => 0.0,
            d => 1.0 / d as f64,
        })
        .collect();
    let base = 1.0 - cfg.damping;
    let mut rank = vec![1.0f64; n];
    let mut next = vec![0.0f64; n];
    let mut share = vec![0.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..cfg.max_iters {
        for ((s, r), inv) in share.iter_mut().zip(&rank).zip(&inv_degree) {
            *s = r * inv;
        }
        residual = 0.0;
        for v in g.vertices() {
            let inflow: f64 = g.neighbors(v).iter().map(|&u| share[u as usize]).sum();
            let value = base + cfg.damping * inflow;
            residual = residual.max((value - rank[v as usize]).abs());
            next[v as usize] = value;
        }
        std::mem::swap(&mut rank, &mut next);
        if residual < cfg.tolerance {
            return ScoreVector::new(rank);
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iters,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_graphs_are_flat() {
        let cycle = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for g in [cycle, k4] {
            let pr = pagerank_scores(&g, &PageRankConfig::default()).unwrap();
            for &s in pr.as_slice() {
                assert!((s - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn star_fixed_point() {
        // centre c and leaf l satisfy c = 0.15 + 3.4 l and l = 0.15 + 0.2125 c
        let centre = 0.66 / 0.2775;
        let leaf = 0.15 + 0.2125 * centre;
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let pr = pagerank_scores(&star, &PageRankConfig::default()).unwrap();
        assert!((pr.get(0) - centre).abs() < 1e-9);
        assert!((pr.get(0) - 2.3784).abs() < 5e-5);
        for v in 1..5 {
            assert!((pr.get(v) - leaf).abs() < 1e-9);
            assert!((pr.get(v) - 0.6554).abs() < 5e-5);
        }
    }

    #[test]
    fn reports_non_convergence() {
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let cfg = PageRankConfig {
            max_iters: 3,
            ..PageRankConfig::default()
        };
        match pagerank_scores(&star, &cfg) {
            Err(Error::NoConvergence {
                iterations,
                residual,
            }) => {
                assert_eq!(iterations, 3);
                assert!(residual > cfg.tolerance);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_damping() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        for damping in [1.0, -0.1, f64::NAN] {
            let cfg = PageRankConfig {
                damping,
                ..PageRankConfig::default()
            };
            assert!(matches!(
                pagerank_scores(&g, &cfg),
                Err(Error::InvalidArgument(_))
            ));
        }
    }
}
