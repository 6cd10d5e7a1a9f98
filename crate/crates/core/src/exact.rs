//! Ground truth for small graphs.
//!
//! [`ExactSolver`] precomputes the all-pairs hop-distance matrix and walks
//! every k-subset in lexicographic order. Each enumeration level keeps the
//! element-wise minimum of the distance rows chosen so far, so a leaf only
//! costs one `O(|V|)` pass: `F(S) = sum over v of min(prefix_min[v], row_last[v])`.
//! The same sweep yields the optimum `M*(k)`, the exact mean `E*(k)` of
//! `A(S)` over all subsets, and the full distribution of `A(S)`.
//!
//! Work is split by the first element of the subset and merged left to
//! right, so results do not depend on the number of threads.
//!
//! For graphs too large to enumerate, [`sampled_expected_value`] estimates
//! the mean from `N` uniform random subsets.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::eval::{Bfs, CandidateSet, Evaluator};
use crate::graph::{Graph, VertexId};
use crate::rng::SampleRng;

/// Largest graph for which the distance matrix is built.
pub const MAX_EXACT_VERTICES: usize = 5_000;
/// Default cap on the number of subsets a sweep may evaluate.
pub const DEFAULT_BUDGET: u128 = 2_000_000_000;
/// At most this many optimal sets are retained.
pub const MAX_OPTIMAL_SETS: usize = 1_000;
/// Above this many distinct values a histogram switches to uniform bins.
pub const MAX_EXACT_BINS: usize = 1_000_000;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Row-major hop distances between every pair of vertices.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u16>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_EXACT_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: n,
                limit: MAX_EXACT_VERTICES,
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut data = vec![0u16; n * n];
        data.par_chunks_mut(n.max(1)).enumerate().for_each_init(
            || Bfs::new(n),
            |bfs, (source, row)| {
                bfs.run(g, &[source as VertexId], |v, d| row[v as usize] = d as u16);
            },
        );
        Ok(DistanceMatrix { n, data })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: VertexId) -> &[u16] {
        let start = v as usize * self.n;
        &self.data[start..start + self.n]
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u16 {
        self.row(u)[v as usize]
    }

    pub fn diameter(&self) -> u16 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// Brute-force optimum for one `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    pub k: usize,
    /// `M*(k)`, the minimum average distance.
    pub optimal_value: f64,
    pub optimal_farness: u64,
    /// Every set attaining the minimum, lexicographically sorted, capped at
    /// [`MAX_OPTIMAL_SETS`].
    pub optimal_sets: Vec<Vec<VertexId>>,
    pub subsets_examined: u128,
}

/// Mean and spread of `N` sampled average distances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledMean {
    pub mean: f64,
    pub sample_count: usize,
    /// Sample standard deviation of the individual `A(S_i)`; 0 when `N = 1`.
    pub stddev: f64,
    /// `stddev / sqrt(N)`.
    pub stderr: f64,
}

/// Expected average distance of a uniformly random k-subset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedValue {
    pub k: usize,
    /// `E*(k)`, present when every subset was enumerated.
    pub exact: Option<f64>,
    /// `E(k)`, present when estimated by sampling.
    pub sampled: Option<SampledMean>,
}

impl ExpectedValue {
    /// The exact value when known, else the sampled mean.
    pub fn value(&self) -> f64 {
        self.exact
            .or(self.sampled.map(|s| s.mean))
            .expect("expected value carries a result")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Binning {
    /// One bin per distinct value of `A(S)`.
    Exact,
    /// Bins `[i * width, (i + 1) * width)`, labelled by their lower edge.
    Uniform { width: f64 },
}

/// Distribution of `A(S)` over all k-subsets.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionHistogram {
    pub k: usize,
    pub binning: Binning,
    /// `(value, count)` in increasing value order.
    pub bins: Vec<(f64, u64)>,
}

impl DistributionHistogram {
    pub fn total(&self) -> u128 {
        self.bins.iter().map(|&(_, c)| u128::from(c)).sum()
    }

    pub fn mean(&self) -> f64 {
        let weighted: f64 = self.bins.iter().map(|&(v, c)| v * c as f64).sum();
        weighted / self.total() as f64
    }

    /// Two whitespace-separated columns, `value count`, after a `#` header.
    pub fn write_plot_data<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# k={} avg_distance count", self.k)?;
        for &(value, count) in &self.bins {
            writeln!(out, "{value} {count}")?;
        }
        out.flush()
    }
}

/// Everything one exhaustive pass over the k-subsets produces.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub k: usize,
    pub vertex_count: usize,
    pub min_farness: u64,
    pub optimal_sets: Vec<Vec<VertexId>>,
    pub subsets: u128,
    pub farness_sum: u128,
    /// Count of subsets per farness value.
    pub farness_counts: Option<BTreeMap<u64, u64>>,
}

impl SweepSummary {
    pub fn optimal_value(&self) -> f64 {
        self.min_farness as f64 / (self.vertex_count - self.k) as f64
    }

    pub fn expected_value(&self) -> f64 {
        self.farness_sum as f64 / (self.subsets as f64 * (self.vertex_count - self.k) as f64)
    }

    pub fn to_exact_result(&self) -> ExactResult {
        ExactResult {
            k: self.k,
            optimal_value: self.optimal_value(),
            optimal_farness: self.min_farness,
            optimal_sets: self.optimal_sets.clone(),
            subsets_examined: self.subsets,
        }
    }

    pub fn to_expected_value(&self) -> ExpectedValue {
        ExpectedValue {
            k: self.k,
            exact: Some(self.expected_value()),
            sampled: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactSolver<'g> {
    graph: &'g Graph,
    matrix: DistanceMatrix,
    budget: u128,
}

impl<'g> ExactSolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Ok(ExactSolver {
            graph,
            matrix: DistanceMatrix::new(graph)?,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.matrix
    }

    /// Checks `1 <= k < |V|` and `C(|V|, k) <= budget`.
    pub fn check(&self, k: usize) -> Result<u128> {
        let n = self.matrix.n;
        if k == 0 || k >= n {
            return Err(Error::InvalidK {
                k,
                max: n.saturating_sub(1),
            });
        }
        let required = binomial(n, k);
        if required > self.budget {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(required)
    }

    pub fn sweep(&self, k: usize, with_distribution: bool) -> Result<SweepSummary> {
        let subsets = self.check(k)?;
        let n = self.matrix.n;
        let dense_len = (n - k) * usize::from(self.matrix.diameter()) + 1;
        let partial = (0..=(n - k) as VertexId)
            .into_par_iter()
            .fold(
                || Partial::new(with_distribution, dense_len),
                |mut acc, first| {
                    self.sweep_from(first, k, &mut acc);
                    acc
                },
            )
            .reduce(
                || Partial::new(with_distribution, dense_len),
                Partial::merge,
            );
        debug_assert_eq!(u128::from(partial.count), subsets);
        Ok(SweepSummary {
            k,
            vertex_count: n,
            min_farness: partial.min_farness,
            optimal_sets: partial.sets,
            subsets,
            farness_sum: partial.sum,
            farness_counts: partial.counts.map(Counts::into_map),
        })
    }

    fn sweep_from(&self, first: VertexId, k: usize, acc: &mut Partial) {
        let n = self.matrix.n;
        let mut combo = vec![0 as VertexId; k];
        combo[0] = first;
        let first_row = self.matrix.row(first);
        if k == 1 {
            let farness = first_row.iter().map(|&d| u64::from(d)).sum();
            acc.visit(&combo, farness);
            return;
        }
        // levels[i] = element-wise min of the rows of combo[..=i]
        let mut levels = vec![vec![0u16; n]; k - 1];
        levels[0].copy_from_slice(first_row);
        self.descend(1, first + 1, k, &mut combo, &mut levels, acc);
    }

    fn descend(
        &self,
        depth: usize,
        start: VertexId,
        k: usize,
        combo: &mut [VertexId],
        levels: &mut [Vec<u16>],
        acc: &mut Partial,
    ) {
        let n = self.matrix.n as VertexId;
        if depth == k - 1 {
            let prefix = &levels[depth - 1];
            for last in start..n {
                let row = self.matrix.row(last);
                let farness: u32 = prefix
                    .iter()
                    .zip(row)
                    .map(|(&a, &b)| u32::from(a.min(b)))
                    .sum();
                combo[depth] = last;
                acc.visit(combo, u64::from(farness));
            }
            return;
        }
        let remaining = (k - depth) as VertexId;
        for next in start..=(n - remaining) {
            combo[depth] = next;
            let (done, rest) = levels.split_at_mut(depth);
            let row = self.matrix.row(next);
            for ((out, &a), &b) in rest[0].iter_mut().zip(&done[depth - 1]).zip(row) {
                *out = a.min(b);
            }
            self.descend(depth + 1, next + 1, k, combo, levels, acc);
        }
    }

    pub fn kmedian(&self, k: usize) -> Result<ExactResult> {
        Ok(self.sweep(k, false)?.to_exact_result())
    }

    pub fn expected_value(&self, k: usize) -> Result<ExpectedValue> {
        Ok(self.sweep(k, false)?.to_expected_value())
    }

    /// Exact bins unless `bin_width` is given or the number of distinct
    /// values exceeds [`MAX_EXACT_BINS`]; the fallback width splits the
    /// observed range into 1000 bins.
    pub fn histogram(&self, k: usize, bin_width: Option<f64>) -> Result<DistributionHistogram> {
        if let Some(w) = bin_width {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "bin width {w} must be positive"
                )));
            }
        }
        let summary = self.sweep(k, true)?;
        Ok(histogram_from_counts(
            k,
            self.matrix.n - k,
            &summary.farness_counts.expect("requested distribution"),
            bin_width,
        ))
    }
}

fn histogram_from_counts(
    k: usize,
    outside: usize,
    counts: &BTreeMap<u64, u64>,
    bin_width: Option<f64>,
) -> DistributionHistogram {
    let avg = |f: u64| f as f64 / outside as f64;
    let width = match bin_width {
        Some(w) => w,
        None if counts.len() <= MAX_EXACT_BINS => {
            return DistributionHistogram {
                k,
                binning: Binning::Exact,
                bins: counts.iter().map(|(&f, &c)| (avg(f), c)).collect(),
            };
        }
        None => {
            let lo = avg(*counts.keys().next().unwrap());
            let hi = avg(*counts.keys().next_back().unwrap());
            (hi - lo) / 1000.0
        }
    };
    let mut bins: BTreeMap<i64, u64> = BTreeMap::new();
    for (&f, &c) in counts {
        *bins.entry((avg(f) / width).floor() as i64).or_default() += c;
    }
    DistributionHistogram {
        k,
        binning: Binning::Uniform { width },
        bins: bins
            .into_iter()
            .map(|(i, c)| (i as f64 * width, c))
            .collect(),
    }
}

#[derive(Debug, Clone)]
enum Counts {
    Dense(Vec<u64>),
    Sparse(BTreeMap<u64, u64>),
}

impl Counts {
    const DENSE_LIMIT: usize = 1 << 22;

    fn new(len: usize) -> Self {
        if len <= Self::DENSE_LIMIT {
            Counts::Dense(vec![0; len])
        } else {
            Counts::Sparse(BTreeMap::new())
        }
    }

    #[inline]
    fn add(&mut self, farness: u64, count: u64) {
        match self {
            Counts::Dense(v) => v[farness as usize] += count,
            Counts::Sparse(m) => *m.entry(farness).or_default() += count,
        }
    }

    fn merge(mut self, other: Counts) -> Counts {
        match other {
            Counts::Dense(v) => {
                for (f, c) in v.into_iter().enumerate().filter(|&(_, c)| c > 0) {
                    self.add(f as u64, c);
                }
            }
            Counts::Sparse(m) => {
                for (f, c) in m {
                    self.add(f, c);
                }
            }
        }
        self
    }

    fn into_map(self) -> BTreeMap<u64, u64> {
        match self {
            Counts::Dense(v) => v
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(f, c)| (f as u64, c))
                .collect(),
            Counts::Sparse(m) => m,
        }
    }
}

/// Sweep accumulator over a contiguous, lexicographically ordered range of
/// subsets.
#[derive(Debug, Clone)]
struct Partial {
    min_farness: u64,
    sets: Vec<Vec<VertexId>>,
    count: u64,
    sum: u128,
    counts: Option<Counts>,
}

impl Partial {
    fn new(with_distribution: bool, dense_len: usize) -> Self {
        Partial {
            min_farness: u64::MAX,
            sets: Vec::new(),
            count: 0,
            sum: 0,
            counts: with_distribution.then(|| Counts::new(dense_len)),
        }
    }

    #[inline]
    fn visit(&mut self, combo: &[VertexId], farness: u64) {
        self.count += 1;
        self.sum += u128::from(farness);
        if let Some(counts) = &mut self.counts {
            counts.add(farness, 1);
        }
        if farness < self.min_farness {
            self.min_farness = farness;
            self.sets.clear();
            self.sets.push(combo.to_vec());
        } else if farness == self.min_farness && self.sets.len() < MAX_OPTIMAL_SETS {
            self.sets.push(combo.to_vec());
        }
    }

    /// `self` covers subsets that sort before all of `right`'s.
    fn merge(mut self, right: Partial) -> Partial {
        self.count += right.count;
        self.sum += right.sum;
        self.counts = match (self.counts, right.counts) {
            (Some(a), Some(b)) => Some(a.merge(b)),
            (a, b) => a.or(b),
        };
        if right.min_farness < self.min_farness {
            self.min_farness = right.min_farness;
            self.sets = right.sets;
        } else if right.min_farness == self.min_farness {
            let room = MAX_OPTIMAL_SETS - self.sets.len();
            self.sets.extend(right.sets.into_iter().take(room));
        }
        self
    }
}

pub fn brute_force_kmedian(g: &Graph, k: usize) -> Result<ExactResult> {
    ExactSolver::new(g)?.kmedian(k)
}

pub fn exact_expected_value(g: &Graph, k: usize) -> Result<ExpectedValue> {
    ExactSolver::new(g)?.expected_value(k)
}

pub fn distribution_histogram(
    g: &Graph,
    k: usize,
    bin_width: Option<f64>,
) -> Result<DistributionHistogram> {
    ExactSolver::new(g)?.histogram(k, bin_width)
}

/// Farness of `samples` uniform random k-subsets; sample `i` uses stream
/// [`SampleRng::for_sample`]`(seed, k, i)`, so the result does not depend
/// on thread scheduling.
pub fn sample_farness(g: &Graph, k: usize, samples: usize, seed: u64) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, max: n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok((0..samples)
        .into_par_iter()
        .map_init(
            || Evaluator::new(g),
            |ev, i| {
                let vertices = SampleRng::for_sample(seed, k, i).sample_distinct(n, k);
                let set = CandidateSet::new(g, vertices).expect("distinct in-range sample");
                ev.farness(&set)
            },
        )
        .collect())
}

/// `E(k)`: mean of `A(S_i)` over `samples` seeded uniform k-subsets.
pub fn sampled_expected_value(
    g: &Graph,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<ExpectedValue> {
    let n = g.vertex_count();
    if k == 0 || k >= n {
        return Err(Error::InvalidK {
            k,
            max: n.saturating_sub(1),
        });
    }
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let outside = (n - k) as f64;
    let values: Vec<f64> = sample_farness(g, k, samples, seed)?
        .into_iter()
        .map(|f| f as f64 / outside)
        .collect();
    let count = values.len() as f64;
    let mean = values.iter().sum::<f64>() / count;
    let stddev = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(ExpectedValue {
        k,
        exact: None,
        sampled: Some(SampledMean {
            mean,
            sample_count: values.len(),
            stddev,
            stderr: stddev / count.sqrt(),
        }),
    })
}
