//! Slow, direct reference implementations used to cross-check the library.
//! None of these share code with the crate under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use kmedian::Graph;
use proptest::prelude::*;

/// Plain adjacency sets built straight from an edge list.
#[derive(Debug, Clone)]
pub struct Adj {
    pub sets: Vec<BTreeSet<usize>>,
}

impl Adj {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u != v {
                sets[u as usize].insert(v as usize);
                sets[v as usize].insert(u as usize);
            }
        }
        Adj { sets }
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.sets[v].len()
    }

    pub fn graph(&self) -> Graph {
        let edges = self.sets.iter().enumerate().flat_map(|(u, s)| {
            s.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u as u32, v as u32))
        });
        Graph::from_edges(self.n(), edges).unwrap()
    }

    /// Single-source hop distances; `usize::MAX` when unreachable.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.sets[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|s| self.bfs(s)).collect()
    }
}

/// `d(v, S)` as the minimum over one BFS per member.
pub fn set_distances(apsp: &[Vec<usize>], set: &[usize]) -> Vec<usize> {
    (0..apsp.len())
        .map(|v| set.iter().map(|&s| apsp[s][v]).min().unwrap())
        .collect()
}

pub fn farness(apsp: &[Vec<usize>], set: &[usize]) -> u64 {
    set_distances(apsp, set).iter().map(|&d| d as u64).sum()
}

pub fn avg(apsp: &[Vec<usize>], set: &[usize]) -> f64 {
    farness(apsp, set) as f64 / (apsp.len() - set.len()) as f64
}

pub struct NaiveExact {
    pub min_farness: u64,
    pub optimal_sets: Vec<Vec<usize>>,
    pub farness_sum: u128,
    pub count: u128,
}

/// Every k-subset, each scored from scratch.
pub fn naive_exact(apsp: &[Vec<usize>], k: usize) -> NaiveExact {
    let mut out = NaiveExact {
        min_farness: u64::MAX,
        optimal_sets: Vec::new(),
        farness_sum: 0,
        count: 0,
    };
    for set in (0..apsp.len()).combinations(k) {
        let f = farness(apsp, &set);
        out.farness_sum += u128::from(f);
        out.count += 1;
        if f < out.min_farness {
            out.min_farness = f;
            out.optimal_sets.clear();
        }
        if f == out.min_farness {
            out.optimal_sets.push(set);
        }
    }
    out
}

/// Core numbers by repeatedly deleting a vertex of minimum remaining degree.
pub fn peel_cores(adj: &Adj) -> Vec<u32> {
    let n = adj.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| adj.degree(v)).collect();
    let mut core = vec![0u32; n];
    let mut level = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| deg[v])
            .unwrap();
        level = level.max(deg[v]);
        core[v] = level as u32;
        alive[v] = false;
        for &u in &adj.sets[v] {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    core
}

/// Largest `h` with at least `h` values `>= h`, by trying every `h`.
pub fn naive_h_index(values: &[usize]) -> usize {
    (0..=values.len())
        .rev()
        .find(|&h| values.iter().filter(|&&x| x >= h).count() >= h)
        .unwrap()
}

/// Undamped-form PageRank by a fixed, generous number of sweeps.
pub fn pagerank(adj: &Adj, damping: f64) -> Vec<f64> {
    let n = adj.n();
    let mut pr = vec![1.0; n];
    for _ in 0..2000 {
        pr = (0..n)
            .map(|v| {
                (1.0 - damping)
                    + damping
                        * adj.sets[v]
                            .iter()
                            .map(|&u| pr[u] / adj.degree(u) as f64)
                            .sum::<f64>()
            })
            .collect();
    }
    pr
}

/// VoteRank transcribed round by round. Rounds continue after the votes
/// run out, electing the lowest remaining id.
pub fn voterank(adj: &Adj, k: usize, f: f64) -> Vec<usize> {
    let n = adj.n();
    let mut power = vec![1.0f64; n];
    let mut elected: Vec<usize> = Vec::new();
    while elected.len() < k {
        let mut best: Option<(usize, f64)> = None;
        for v in 0..n {
            if elected.contains(&v) {
                continue;
            }
            let score: f64 = adj.sets[v].iter().map(|&u| power[u]).sum();
            if best.is_none_or(|(_, b)| score > b) {
                best = Some((v, score));
            }
        }
        let Some((winner, _)) = best else { break };
        elected.push(winner);
        power[winner] = 0.0;
        for &u in &adj.sets[winner] {
            power[u] = (power[u] - f).max(0.0);
        }
    }
    elected
}

/// Top `k` by full sort: larger score first, then smaller id.
pub fn sorted_top_k(scores: &[f64], k: usize) -> Vec<u32> {
    let mut ids: Vec<usize> = (0..scores.len()).collect();
    ids.sort_by(|&a, &b| scores[b].partial_cmp(&scores[a]).unwrap().then(a.cmp(&b)));
    ids.into_iter().take(k).map(|v| v as u32).collect()
}

/// Connected graph on `n` vertices: parent links make a spanning tree,
/// `extra` adds arbitrary pairs.
pub fn connected_edges(n: usize, parents: &[usize], extra: &[(usize, usize)]) -> Vec<(u32, u32)> {
    let mut edges: Vec<(u32, u32)> = (1..n)
        .map(|v| ((parents[v - 1] % v) as u32, v as u32))
        .collect();
    edges.extend(extra.iter().map(|&(a, b)| ((a % n) as u32, (b % n) as u32)));
    edges
}

/// Proptest strategy for small connected graphs.
pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Adj> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<usize>(), n - 1),
                proptest::collection::vec((any::<usize>(), any::<usize>()), 0..2 * n),
            )
        })
        .prop_map(|(n, parents, extra)| Adj::new(n, &connected_edges(n, &parents, &extra)))
}

/// Seeded connected graph with a size in `min_n..=max_n`.
pub fn seeded_connected(seed: u64, min_n: usize, max_n: usize) -> Adj {
    let mut rng = kmedian::rng::SampleRng::with_stream(seed, 0xfeed);
    let n = min_n + rng.below((max_n - min_n + 1) as u64) as usize;
    let p = 0.05 + 0.3 * rng.unit();
    let g = kmedian::generate::random_connected(n, p, seed);
    Adj::new(n, &g.edges().collect::<Vec<_>>())
}

/// A registry dataset from `$KMEDIAN_DATA_DIR`, or `None` when it is not
/// available locally.
pub fn load_named(name: &str) -> Option<kmedian::graph::LoadedGraph> {
    use kmedian::harness::{data_dir_from_env, DatasetRegistry, DatasetSource, ResolvedDataset};
    let dir = data_dir_from_env()?;
    let resolved = ResolvedDataset::resolve(name, &DatasetRegistry::builtin(), Some(&dir));
    match &resolved.source {
        DatasetSource::File(path) if path.exists() => Some(resolved.load().expect("dataset loads")),
        _ => None,
    }
}
