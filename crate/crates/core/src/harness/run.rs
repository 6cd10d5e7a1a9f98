//! Running methods over a k-grid on each network.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::centrality::{rank, MethodId, RankOptions};
use crate::error::{Error, Result};
use crate::eval::evaluate_prefixes;
use crate::exact::{sample_farness, ExactResult, ExactSolver, ExpectedValue};
use crate::graph::Graph;

use super::registry::{data_dir_from_env, DatasetRegistry, ResolvedDataset};
use super::spec::{ExperimentSpec, Timing};

/// One `(network, method, k)` measurement.
///
/// For `random`, `avg_distance` is the sampled mean `E(k)` and `farness`
/// the mean farness rounded to the nearest integer.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub network: String,
    pub method: MethodId,
    pub k: usize,
    pub avg_distance: f64,
    pub farness: u64,
    /// Scoring plus evaluation time of the whole k-sweep for this method.
    pub wall_time_s: f64,
}

/// Cost of one method on one network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodTiming {
    pub method: MethodId,
    /// Producing the ranking. For `random` this includes evaluating the
    /// samples, which cannot be separated from drawing them.
    pub scoring_s: f64,
    pub evaluation_s: f64,
}

impl MethodTiming {
    pub fn total_s(&self) -> f64 {
        self.scoring_s + self.evaluation_s
    }
}

/// Brute-force optimum and exact expectation for one k.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactEntry {
    pub optimum: ExactResult,
    pub expected: ExpectedValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkRun {
    pub network: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub records: Vec<ExperimentRecord>,
    pub timings: Vec<MethodTiming>,
    /// Ascending in k.
    pub exact: Vec<ExactEntry>,
}

/// A failure that skipped a dataset, a method or an exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunFailure {
    pub network: String,
    pub method: Option<MethodId>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentOutcome {
    /// In spec order.
    pub networks: Vec<NetworkRun>,
    pub failures: Vec<RunFailure>,
}

impl ExperimentOutcome {
    /// All records, sorted by network (spec order), method, then k.
    pub fn records(&self) -> Vec<ExperimentRecord> {
        self.networks
            .iter()
            .flat_map(|n| n.records.iter().cloned())
            .collect()
    }

    /// `M*(k)` keyed by network and k.
    pub fn optimum(&self) -> OptimumTable {
        let mut table = OptimumTable::new();
        for run in &self.networks {
            for e in &run.exact {
                table.insert((run.network.clone(), e.optimum.k), e.optimum.optimal_value);
            }
        }
        table
    }
}

/// `M*(k)` per `(network, k)`.
pub type OptimumTable = BTreeMap<(String, usize), f64>;

/// Runs every dataset of `spec`. A dataset that cannot be loaded, or a
/// method that fails on it, is recorded in `failures` and skipped.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutcome> {
    spec.validate()?;
    let registry = match &spec.registry {
        Some(path) => DatasetRegistry::load(path)?,
        None => DatasetRegistry::builtin(),
    };
    let data_dir = spec.data_dir.clone().or_else(data_dir_from_env);
    let mut outcome = ExperimentOutcome::default();
    for entry in &spec.datasets {
        let dataset = ResolvedDataset::resolve(entry, &registry, data_dir.as_deref());
        let loaded = match dataset.load() {
            Ok(loaded) => loaded,
            Err(e) => {
                log::error!("{}: {e}", dataset.name);
                outcome.failures.push(RunFailure {
                    network: dataset.name.clone(),
                    method: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        log::info!(
            "{}: {} vertices, {} edges",
            dataset.name,
            loaded.graph.vertex_count(),
            loaded.graph.edge_count()
        );
        match run_network(&dataset.name, &loaded.graph, spec) {
            Ok((run, failures)) => {
                outcome.networks.push(run);
                outcome.failures.extend(failures);
            }
            Err(e) => outcome.failures.push(RunFailure {
                network: dataset.name.clone(),
                method: None,
                message: e.to_string(),
            }),
        }
    }
    Ok(outcome)
}

/// Runs the methods of `spec` on one already loaded graph.
///
/// Every deterministic method produces a single ranking of length
/// `min(k_max, |V| - 1)` whose prefixes give the candidate sets. Methods run
/// one after another so their timings do not interfere.
pub fn run_network(
    name: &str,
    g: &Graph,
    spec: &ExperimentSpec,
) -> Result<(NetworkRun, Vec<RunFailure>)> {
    if name.contains([',', '"', '\n', '\r']) {
        return Err(Error::InvalidArgument(format!(
            "network name {name:?} cannot be written to CSV"
        )));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidK { k: 1, max: 0 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k_max = spec.k_max.min(n - 1);
    let opts = RankOptions {
        seed: spec.seed,
        ..RankOptions::default()
    };
    let seconds = |d: Duration| match spec.timing {
        Timing::Measured => d.as_secs_f64(),
        Timing::Omit => 0.0,
    };

    let mut run = NetworkRun {
        network: name.to_string(),
        vertex_count: n,
        edge_count: g.edge_count(),
        records: Vec::new(),
        timings: Vec::new(),
        exact: Vec::new(),
    };
    let mut failures = Vec::new();
    let mut fail = |method: Option<MethodId>, e: Error| {
        log::error!("{name}: {}: {e}", method.map_or("exact", MethodId::as_str));
        failures.push(RunFailure {
            network: name.to_string(),
            method,
            message: e.to_string(),
        });
    };

    for method in spec.method_set() {
        let measured = if method.is_deterministic() {
            sweep_ranking(g, method, k_max, &opts)
        } else {
            sweep_random(g, k_max, spec.samples, spec.seed)
        };
        let (points, scoring, evaluation) = match measured {
            Ok(m) => m,
            Err(e) => {
                fail(Some(method), e);
                continue;
            }
        };
        let timing = MethodTiming {
            method,
            scoring_s: seconds(scoring),
            evaluation_s: seconds(evaluation),
        };
        log::info!("{name}: {method} took {:.3}s", timing.total_s());
        run.records.extend(
            points
                .into_iter()
                .map(|(k, avg_distance, farness)| ExperimentRecord {
                    network: name.to_string(),
                    method,
                    k,
                    avg_distance,
                    farness,
                    wall_time_s: timing.total_s(),
                }),
        );
        run.timings.push(timing);
    }

    if spec.exact_k > 0 {
        match ExactSolver::new(g) {
            Ok(solver) => {
                let solver = solver.with_budget(spec.budget);
                for k in 1..=spec.exact_k.min(k_max) {
                    match solver.sweep(k, false) {
                        Ok(sweep) => run.exact.push(ExactEntry {
                            optimum: sweep.to_exact_result(),
                            expected: sweep.to_expected_value(),
                        }),
                        Err(e) => {
                            fail(None, e);
                            break;
                        }
                    }
                }
            }
            Err(e) => fail(None, e),
        }
    }
    Ok((run, failures))
}

type SweepPoints = (Vec<(usize, f64, u64)>, Duration, Duration);

fn sweep_ranking(
    g: &Graph,
    method: MethodId,
    k_max: usize,
    opts: &RankOptions,
) -> Result<SweepPoints> {
    let start = Instant::now();
    let ranked = rank(g, method, k_max, opts)?;
    let scoring = start.elapsed();
    let start = Instant::now();
    let evaluated = evaluate_prefixes(g, &ranked.vertices)?;
    let evaluation = start.elapsed();
    let points = evaluated
        .into_iter()
        .map(|r| (r.k, r.avg_distance, r.farness))
        .collect();
    Ok((points, scoring, evaluation))
}

fn sweep_random(g: &Graph, k_max: usize, samples: usize, seed: u64) -> Result<SweepPoints> {
    let n = g.vertex_count();
    let start = Instant::now();
    let mut points = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let farness = sample_farness(g, k, samples, seed)?;
        let outside = (n - k) as f64;
        let count = farness.len() as f64;
        let mean_avg = farness.iter().map(|&f| f as f64 / outside).sum::<f64>() / count;
        let total: u128 = farness.iter().map(|&f| u128::from(f)).sum();
        let mean_farness = (total + farness.len() as u128 / 2) / farness.len() as u128;
        points.push((k, mean_avg, mean_farness as u64));
    }
    Ok((points, start.elapsed(), Duration::ZERO))
}
