//! Comparison tables derived from experiment records.

use std::collections::BTreeMap;

use crate::centrality::MethodId;
use crate::error::{Error, Result};

use super::run::{ExperimentRecord, MethodTiming, OptimumTable};

/// What relative errors are measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// The brute-force optimum `M*(k)`.
    Optimal,
    /// The smallest value over all methods at the same k, `random` included.
    BestHeuristic,
    /// The sampled random baseline `E(k)`; negative errors beat it.
    Random,
}

impl Reference {
    pub fn as_str(self) -> &'static str {
        match self {
            Reference::Optimal => "optimal",
            Reference::BestHeuristic => "best",
            Reference::Random => "random",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub network: String,
    pub method: MethodId,
    /// Mean over k of `100 (M - ref) / ref`.
    pub mean_error_pct: f64,
    pub k_count: usize,
    /// 1-based position within the network, ties by method order.
    pub rank: usize,
}

/// Relative errors per network and method, sorted by network then method.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub reference: Reference,
    pub rows: Vec<ErrorRow>,
}

impl ComparisonTable {
    pub fn row(&self, network: &str, method: MethodId) -> Option<&ErrorRow> {
        self.rows
            .iter()
            .find(|r| r.network == network && r.method == method)
    }

    /// Each method's error averaged over networks, smallest first (ties by
    /// method order).
    pub fn overall(&self) -> Vec<(MethodId, f64)> {
        let mut sums: BTreeMap<MethodId, (f64, usize)> = BTreeMap::new();
        for r in &self.rows {
            let e = sums.entry(r.method).or_default();
            e.0 += r.mean_error_pct;
            e.1 += 1;
        }
        let mut out: Vec<(MethodId, f64)> = sums
            .into_iter()
            .map(|(m, (sum, count))| (m, sum / count as f64))
            .collect();
        out.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
        out
    }
}

/// Records grouped as network → method → k → value, preserving the first
/// appearance order of networks.
struct Grouped {
    networks: Vec<String>,
    values: BTreeMap<(usize, MethodId), BTreeMap<usize, f64>>,
}

fn group(records: &[ExperimentRecord]) -> Grouped {
    let mut networks: Vec<String> = Vec::new();
    let mut values: BTreeMap<(usize, MethodId), BTreeMap<usize, f64>> = BTreeMap::new();
    for r in records {
        let idx = match networks.iter().position(|n| *n == r.network) {
            Some(i) => i,
            None => {
                networks.push(r.network.clone());
                networks.len() - 1
            }
        };
        values
            .entry((idx, r.method))
            .or_default()
            .insert(r.k, r.avg_distance);
    }
    Grouped { networks, values }
}

impl Grouped {
    /// Smallest value per `(network, k)` over all methods.
    fn best(&self, include: impl Fn(MethodId) -> bool) -> BTreeMap<(usize, usize), f64> {
        let mut best: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (&(net, method), by_k) in &self.values {
            if !include(method) {
                continue;
            }
            for (&k, &v) in by_k {
                best.entry((net, k))
                    .and_modify(|b| *b = b.min(v))
                    .or_insert(v);
            }
        }
        best
    }

    fn table(
        &self,
        reference: Reference,
        mut reference_value: impl FnMut(usize, usize) -> Result<f64>,
    ) -> Result<ComparisonTable> {
        let mut rows = Vec::new();
        for (&(net, method), by_k) in &self.values {
            let mut sum = 0.0;
            for (&k, &v) in by_k {
                let r = reference_value(net, k)?;
                sum += 100.0 * (v - r) / r;
            }
            rows.push(ErrorRow {
                network: self.networks[net].clone(),
                method,
                mean_error_pct: sum / by_k.len() as f64,
                k_count: by_k.len(),
                rank: 0,
            });
        }
        assign_ranks(&mut rows);
        Ok(ComparisonTable { reference, rows })
    }
}

fn assign_ranks(rows: &mut [ErrorRow]) {
    let mut start = 0;
    while start < rows.len() {
        let end = start
            + rows[start..]
                .iter()
                .take_while(|r| r.network == rows[start].network)
                .count();
        let mut order: Vec<usize> = (start..end).collect();
        order.sort_by(|&a, &b| {
            rows[a]
                .mean_error_pct
                .total_cmp(&rows[b].mean_error_pct)
                .then(rows[a].method.cmp(&rows[b].method))
        });
        for (pos, i) in order.into_iter().enumerate() {
            rows[i].rank = pos + 1;
        }
        start = end;
    }
}

/// Mean relative error of each method to the brute-force optimum over the
/// k values present in `records`.
pub fn error_to_optimal(
    records: &[ExperimentRecord],
    optimum: &OptimumTable,
) -> Result<ComparisonTable> {
    let g = group(records);
    g.table(Reference::Optimal, |net, k| {
        let network = &g.networks[net];
        optimum
            .get(&(network.clone(), k))
            .copied()
            .ok_or_else(|| Error::MissingExact {
                network: network.clone(),
                k,
            })
    })
}

/// Mean relative error of each method to the best value found by any
/// method at the same k.
pub fn error_to_best(records: &[ExperimentRecord]) -> ComparisonTable {
    let g = group(records);
    let best = g.best(|_| true);
    g.table(Reference::BestHeuristic, |net, k| Ok(best[&(net, k)]))
        .expect("best exists for every recorded point")
}

/// Mean relative error of each method to the random baseline. k values
/// without a `random` record are skipped.
pub fn error_to_random(records: &[ExperimentRecord]) -> ComparisonTable {
    let baseline: BTreeMap<(&str, usize), f64> = records
        .iter()
        .filter(|r| r.method == MethodId::Random)
        .map(|r| ((r.network.as_str(), r.k), r.avg_distance))
        .collect();
    let covered: Vec<ExperimentRecord> = records
        .iter()
        .filter(|r| baseline.contains_key(&(r.network.as_str(), r.k)))
        .cloned()
        .collect();
    let g = group(&covered);
    g.table(Reference::Random, |net, k| {
        Ok(baseline[&(g.networks[net].as_str(), k)])
    })
    .expect("baseline exists for every kept point")
}

/// Thresholds of the within-x% table.
pub const SHARE_THRESHOLDS: [f64; 4] = [0.0, 1.0, 10.0, 100.0];

#[derive(Debug, Clone, PartialEq)]
pub struct ShareRow {
    pub network: String,
    pub method: MethodId,
    /// Percentage of k values with `M <= (1 + x/100) best`, one per threshold.
    pub shares: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShareTable {
    pub thresholds: Vec<f64>,
    pub rows: Vec<ShareRow>,
}

pub fn within_percent_shares(records: &[ExperimentRecord], thresholds: &[f64]) -> ShareTable {
    let g = group(records);
    let best = g.best(|_| true);
    let rows = g
        .values
        .iter()
        .map(|(&(net, method), by_k)| {
            let shares = thresholds
                .iter()
                .map(|&x| {
                    let hits = by_k
                        .iter()
                        .filter(|&(&k, &v)| v <= (1.0 + x / 100.0) * best[&(net, k)])
                        .count();
                    100.0 * hits as f64 / by_k.len() as f64
                })
                .collect();
            ShareRow {
                network: g.networks[net].clone(),
                method,
                shares,
            }
        })
        .collect();
    ShareTable {
        thresholds: thresholds.to_vec(),
        rows,
    }
}

/// Pointwise winner among the deterministic methods.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperRow {
    pub network: String,
    pub k: usize,
    pub method: MethodId,
    pub value: f64,
    /// The random baseline at this k, when it was measured.
    pub expected: Option<f64>,
}

impl SuperRow {
    /// The row as records: the winner, plus the baseline if present.
    pub fn to_records(&self) -> Vec<ExperimentRecord> {
        let record = |method, avg_distance| ExperimentRecord {
            network: self.network.clone(),
            method,
            k: self.k,
            avg_distance,
            farness: 0,
            wall_time_s: 0.0,
        };
        let mut out = vec![record(self.method, self.value)];
        out.extend(self.expected.map(|e| record(MethodId::Random, e)));
        out
    }
}

/// Per network and k, the smallest value of any deterministic method
/// (ties to the earlier method), annotated with `E(k)`.
pub fn super_algorithm(records: &[ExperimentRecord]) -> Vec<SuperRow> {
    let g = group(records);
    let mut winners: BTreeMap<(usize, usize), (MethodId, f64)> = BTreeMap::new();
    for (&(net, method), by_k) in &g.values {
        if !method.is_deterministic() {
            continue;
        }
        // methods arrive in enumeration order, so strict `<` keeps the first
        for (&k, &v) in by_k {
            winners
                .entry((net, k))
                .and_modify(|w| {
                    if v < w.1 {
                        *w = (method, v);
                    }
                })
                .or_insert((method, v));
        }
    }
    winners
        .into_iter()
        .map(|((net, k), (method, value))| SuperRow {
            network: g.networks[net].clone(),
            k,
            method,
            value,
            expected: g
                .values
                .get(&(net, MethodId::Random))
                .and_then(|m| m.get(&k).copied()),
        })
        .collect()
}

/// Method cost on one network, relative to `degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingRow {
    pub network: String,
    pub timing: MethodTiming,
    /// Scoring time over the scoring time of `degree`; `None` when degree
    /// was not run or took no measurable time.
    pub cost_factor: Option<f64>,
}

pub fn timing_table<'a>(
    runs: impl IntoIterator<Item = (&'a str, &'a [MethodTiming])>,
) -> Vec<TimingRow> {
    let mut rows = Vec::new();
    for (network, timings) in runs {
        let base = timings
            .iter()
            .find(|t| t.method == MethodId::Degree)
            .map(|t| t.scoring_s)
            .filter(|&s| s > 0.0);
        for t in timings {
            rows.push(TimingRow {
                network: network.to_string(),
                timing: *t,
                cost_factor: base.map(|b| t.scoring_s / b),
            });
        }
    }
    rows
}
