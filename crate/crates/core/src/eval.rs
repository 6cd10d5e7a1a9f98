//! Distances from vertex sets, farness and average distance.
//!
//! For a candidate set `S` on a connected graph, `d(v, S)` is the hop
//! distance from `v` to its nearest member of `S`. The farness is
//! `F(S) = sum over v outside S of d(v, S)` and the average distance is
//! `A(S) = F(S) / (|V| - |S|)`. Grouping vertices by their distance gives the
//! shell profile `sizes[p] = |{v : d(v, S) = p}|`, and
//! `F(S) = sum_p p * sizes[p]`.
//!
//! Everything here is one level-synchronous multi-source BFS. [`Evaluator`]
//! keeps its queue and visitation stamps between calls; [`PrefixEvaluator`]
//! grows a set one vertex at a time and only re-explores vertices whose
//! distance actually shrinks.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Distinct vertices of a connected graph, in selection order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    vertices: Vec<VertexId>,
}

impl CandidateSet {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        validate(g, &vertices)?;
        Ok(CandidateSet { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.vertices
    }
}

fn validate(g: &Graph, vertices: &[VertexId]) -> Result<()> {
    let n = g.vertex_count();
    if vertices.is_empty() || vertices.len() > n {
        return Err(Error::InvalidK {
            k: vertices.len(),
            max: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; n];
    for &v in vertices {
        if v as usize >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                vertex_count: n,
            });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    Ok(())
}

/// Hop distance from every vertex to the nearest member of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    dist: Vec<u32>,
}

impl DistanceField {
    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.dist[v as usize]
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// `sizes[p]` is the number of vertices at distance exactly `p` from the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellProfile {
    sizes: Vec<u64>,
}

impl ShellProfile {
    pub fn new(sizes: Vec<u64>) -> Self {
        ShellProfile { sizes }
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationResult {
    pub farness: u64,
    pub avg_distance: f64,
    pub k: usize,
}

impl EvaluationResult {
    fn new(farness: u64, k: usize, n: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::FullCandidateSet);
        }
        Ok(EvaluationResult {
            farness,
            avg_distance: farness as f64 / (n - k) as f64,
            k,
        })
    }
}

/// `F / (n - k)`, the average distance for a set of size `k`.
pub fn average(farness: u64, k: usize, n: usize) -> Result<f64> {
    EvaluationResult::new(farness, k, n).map(|r| r.avg_distance)
}

/// Reusable multi-source BFS scratch space.
///
/// A vertex counts as visited in the current run when its stamp equals the
/// current epoch, so nothing is cleared between runs.
#[derive(Debug, Clone, Default)]
pub struct Bfs {
    queue: Vec<VertexId>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Bfs {
    pub fn new(vertex_count: usize) -> Self {
        Bfs {
            queue: Vec::with_capacity(vertex_count),
            stamp: vec![0; vertex_count],
            epoch: 0,
        }
    }

    /// Visits every vertex reachable from `sources` once, in nondecreasing
    /// distance order, calling `visit(v, d(v, sources))`.
    pub fn run<F>(&mut self, g: &Graph, sources: &[VertexId], mut visit: F)
    where
        F: FnMut(VertexId, u32),
    {
        let n = g.vertex_count();
        if self.stamp.len() != n {
            self.stamp = vec![0; n];
            self.epoch = 0;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        for &s in sources {
            if self.stamp[s as usize] != epoch {
                self.stamp[s as usize] = epoch;
                self.queue.push(s);
            }
        }
        let mut head = 0;
        let mut level = 0u32;
        while head < self.queue.len() {
            let level_end = self.queue.len();
            while head < level_end {
                let u = self.queue[head];
                head += 1;
                visit(u, level);
                for &w in g.neighbors(u) {
                    if self.stamp[w as usize] != epoch {
                        self.stamp[w as usize] = epoch;
                        self.queue.push(w);
                    }
                }
            }
            level += 1;
        }
    }
}

/// Evaluates arbitrary candidate sets on one graph, reusing BFS scratch.
#[derive(Debug, Clone)]
pub struct Evaluator<'g> {
    graph: &'g Graph,
    bfs: Bfs,
}

impl<'g> Evaluator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Evaluator {
            graph,
            bfs: Bfs::new(graph.vertex_count()),
        }
    }

    pub fn farness(&mut self, s: &CandidateSet) -> u64 {
        let mut total = 0u64;
        self.bfs
            .run(self.graph, s.vertices(), |_, d| total += u64::from(d));
        total
    }

    pub fn evaluate(&mut self, s: &CandidateSet) -> Result<EvaluationResult> {
        let farness = self.farness(s);
        EvaluationResult::new(farness, s.k(), self.graph.vertex_count())
    }

    pub fn shell_profile(&mut self, s: &CandidateSet) -> ShellProfile {
        let mut sizes: Vec<u64> = Vec::new();
        self.bfs.run(self.graph, s.vertices(), |_, d| {
            let d = d as usize;
            if d == sizes.len() {
                sizes.push(0);
            }
            sizes[d] += 1;
        });
        ShellProfile { sizes }
    }

    pub fn distances(&mut self, s: &CandidateSet) -> DistanceField {
        let mut dist = vec![u32::MAX; self.graph.vertex_count()];
        self.bfs
            .run(self.graph, s.vertices(), |v, d| dist[v as usize] = d);
        DistanceField { dist }
    }
}

pub fn multi_source_bfs(g: &Graph, s: &CandidateSet) -> DistanceField {
    Evaluator::new(g).distances(s)
}

pub fn farness(g: &Graph, s: &CandidateSet) -> u64 {
    Evaluator::new(g).farness(s)
}

pub fn avg_distance(g: &Graph, s: &CandidateSet) -> Result<f64> {
    Evaluator::new(g).evaluate(s).map(|r| r.avg_distance)
}

pub fn evaluate(g: &Graph, s: &CandidateSet) -> Result<EvaluationResult> {
    Evaluator::new(g).evaluate(s)
}

pub fn shell_profile(g: &Graph, s: &CandidateSet) -> ShellProfile {
    Evaluator::new(g).shell_profile(s)
}

pub fn farness_from_shells(p: &ShellProfile) -> u64 {
    p.sizes
        .iter()
        .enumerate()
        .map(|(dist, &count)| dist as u64 * count)
        .sum()
}

/// Evaluates every prefix of a growing vertex sequence.
///
/// Adding a source can only shorten distances, so each [`push`] runs a BFS
/// from the new vertex that stops wherever the stored distance is already
/// at least as small. Farness is maintained by subtracting the savings.
///
/// [`push`]: PrefixEvaluator::push
#[derive(Debug, Clone)]
pub struct PrefixEvaluator<'g> {
    graph: &'g Graph,
    dist: Vec<u32>,
    in_set: Vec<bool>,
    queue: Vec<VertexId>,
    farness: u64,
    k: usize,
}

impl<'g> PrefixEvaluator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(PrefixEvaluator {
            graph,
            dist: Vec::new(),
            in_set: vec![false; graph.vertex_count()],
            queue: Vec::new(),
            farness: 0,
            k: 0,
        })
    }

    /// Adds `v` to the set and returns the evaluation of the grown set.
    pub fn push(&mut self, v: VertexId) -> Result<EvaluationResult> {
        let n = self.graph.vertex_count();
        if v as usize >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                vertex_count: n,
            });
        }
        if self.in_set[v as usize] {
            return Err(Error::DuplicateVertex(v));
        }
        self.in_set[v as usize] = true;
        self.k += 1;
        if self.k == 1 {
            self.dist = vec![u32::MAX; n];
            let mut total = 0u64;
            let dist = &mut self.dist;
            Bfs::new(n).run(self.graph, &[v], |u, d| {
                dist[u as usize] = d;
                total += u64::from(d);
            });
            self.farness = total;
        } else {
            self.relax_from(v);
        }
        EvaluationResult::new(self.farness, self.k, n)
    }

    fn relax_from(&mut self, v: VertexId) {
        self.farness -= u64::from(self.dist[v as usize]);
        self.dist[v as usize] = 0;
        self.queue.clear();
        self.queue.push(v);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u as usize] + 1;
            for &w in self.graph.neighbors(u) {
                let old = self.dist[w as usize];
                if next < old {
                    self.farness -= u64::from(old - next);
                    self.dist[w as usize] = next;
                    self.queue.push(w);
                }
            }
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn farness(&self) -> u64 {
        self.farness
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }
}

/// Evaluates each prefix `vertices[..k]` for `k = 1..=vertices.len()`,
/// stopping before a prefix would cover the whole graph.
pub fn evaluate_prefixes(g: &Graph, vertices: &[VertexId]) -> Result<Vec<EvaluationResult>> {
    let mut prefix = PrefixEvaluator::new(g)?;
    let limit = vertices.len().min(g.vertex_count().saturating_sub(1));
    vertices[..limit].iter().map(|&v| prefix.push(v)).collect()
}
