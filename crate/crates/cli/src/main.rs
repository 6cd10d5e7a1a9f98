use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use kmedian::centrality::{rank, MethodId, RankOptions};
use kmedian::eval::{CandidateSet, Evaluator};
use kmedian::exact::{sampled_expected_value, ExactSolver, DEFAULT_BUDGET};
use kmedian::graph::{degree_stats, write_edge_list, LoadedGraph};
use kmedian::harness::{
    data_dir_from_env, emit_tables, run_experiment, DatasetRegistry, ExperimentSpec,
    ResolvedDataset,
};

/// k-median heuristics and benchmarks for unweighted networks.
///
/// A DATASET is a registry name (resolved under --data-dir or
/// $KMEDIAN_DATA_DIR), a path to an edge list, or a generator such as
/// `gen:ba:100000:3:1`. Vertex ids on the command line and in the output
/// are the ids of the original file.
#[derive(Parser)]
#[command(name = "kmedian", version)]
struct Cli {
    /// Directory holding the registry's dataset files.
    #[arg(long, global = true, value_name = "DIR")]
    data_dir: Option<PathBuf>,
    /// Alternative dataset manifest.
    #[arg(long, global = true, value_name = "FILE")]
    registry: Option<PathBuf>,
    /// More log output (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size and degree statistics of the largest component.
    Stats { dataset: String },
    /// Top-k vertices of one method, with the resulting average distance.
    Rank {
        dataset: String,
        #[arg(long, short)]
        method: MethodId,
        #[arg(long, short)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Farness and average distance of a given vertex set.
    Eval {
        dataset: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<u64>,
        /// Also print how many vertices sit at each distance.
        #[arg(long)]
        shells: bool,
    },
    /// Brute-force optimum and exact expected value for one k.
    Exact {
        dataset: String,
        #[arg(long, short)]
        k: usize,
        /// Maximum number of subsets to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Expected average distance of a random k-set, by sampling.
    Sample {
        dataset: String,
        #[arg(long, short)]
        k: usize,
        #[arg(long, short, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an experiment spec and write its tables.
    Bench {
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the spec's output directory.
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
    /// Distribution of the average distance over all k-subsets.
    Hist {
        dataset: String,
        #[arg(long, short)]
        k: usize,
        /// Fixed bin width instead of one bin per distinct value.
        #[arg(long)]
        bin_width: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Write the largest component as a compact edge list.
    Normalize {
        dataset: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

struct Datasets {
    registry: DatasetRegistry,
    data_dir: Option<PathBuf>,
}

impl Datasets {
    fn load(&self, dataset: &str) -> Result<LoadedGraph> {
        let resolved = ResolvedDataset::resolve(dataset, &self.registry, self.data_dir.as_deref());
        resolved
            .load()
            .with_context(|| format!("loading dataset {dataset:?}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let ctx = Datasets {
        registry: match &cli.registry {
            Some(path) => DatasetRegistry::load(path)?,
            None => DatasetRegistry::builtin(),
        },
        data_dir: cli.data_dir.clone().or_else(data_dir_from_env),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Stats { dataset } => {
            let loaded = ctx.load(&dataset)?;
            let g = &loaded.graph;
            let stats = degree_stats(g);
            writeln!(out, "vertices\t{}", g.vertex_count())?;
            writeln!(out, "edges\t{}", g.edge_count())?;
            writeln!(out, "avg_degree\t{:.2}", stats.avg_degree)?;
            writeln!(out, "max_degree\t{}", stats.max_degree)?;
            writeln!(out, "max_to_avg\t{:.2}", stats.max_to_avg)?;
            writeln!(out, "simple_vertices\t{}", loaded.simple_vertex_count)?;
            writeln!(out, "simple_edges\t{}", loaded.simple_edge_count)?;
        }
        Command::Rank {
            dataset,
            method,
            k,
            seed,
        } => {
            let loaded = ctx.load(&dataset)?;
            let opts = RankOptions {
                seed,
                ..RankOptions::default()
            };
            let ranked = rank(&loaded.graph, method, k, &opts)?;
            let set = CandidateSet::new(&loaded.graph, ranked.vertices)?;
            let result = Evaluator::new(&loaded.graph).evaluate(&set)?;
            writeln!(
                out,
                "# {} k={} avg_distance={:.6} farness={}",
                method.label(),
                k,
                result.avg_distance,
                result.farness
            )?;
            for &v in set.vertices() {
                writeln!(out, "{}", loaded.mapping.to_original(v))?;
            }
        }
        Command::Eval {
            dataset,
            vertices,
            shells,
        } => {
            let loaded = ctx.load(&dataset)?;
            let compact = vertices
                .iter()
                .map(|&v| {
                    loaded
                        .mapping
                        .to_compact(v)
                        .with_context(|| format!("vertex {v} is not in the largest component"))
                })
                .collect::<Result<Vec<_>>>()?;
            let set = CandidateSet::new(&loaded.graph, compact)?;
            let mut ev = Evaluator::new(&loaded.graph);
            let result = ev.evaluate(&set)?;
            writeln!(out, "k\t{}", result.k)?;
            writeln!(out, "farness\t{}", result.farness)?;
            writeln!(out, "avg_distance\t{:.6}", result.avg_distance)?;
            if shells {
                for (p, size) in ev.shell_profile(&set).sizes().iter().enumerate() {
                    writeln!(out, "shell_{p}\t{size}")?;
                }
            }
        }
        Command::Exact { dataset, k, budget } => {
            let loaded = ctx.load(&dataset)?;
            let solver = ExactSolver::new(&loaded.graph)?.with_budget(budget);
            let sweep = solver.sweep(k, false)?;
            let best = sweep.to_exact_result();
            writeln!(out, "k\t{k}")?;
            writeln!(out, "optimal_value\t{:.6}", best.optimal_value)?;
            writeln!(out, "optimal_farness\t{}", best.optimal_farness)?;
            writeln!(out, "expected_value\t{:.6}", sweep.expected_value())?;
            writeln!(out, "subsets\t{}", best.subsets_examined)?;
            writeln!(out, "optimal_sets\t{}", best.optimal_sets.len())?;
            for set in &best.optimal_sets {
                let ids: Vec<String> = set
                    .iter()
                    .map(|&v| loaded.mapping.to_original(v).to_string())
                    .collect();
                writeln!(out, "set\t{}", ids.join(","))?;
            }
        }
        Command::Sample {
            dataset,
            k,
            n,
            seed,
        } => {
            let loaded = ctx.load(&dataset)?;
            let ev = sampled_expected_value(&loaded.graph, k, n, seed)?;
            let s = ev.sampled.expect("sampled estimate");
            writeln!(out, "k\t{k}")?;
            writeln!(out, "samples\t{}", s.sample_count)?;
            writeln!(out, "expected_value\t{:.6}", s.mean)?;
            writeln!(out, "stddev\t{:.6}", s.stddev)?;
            writeln!(out, "stderr\t{:.6}", s.stderr)?;
        }
        Command::Bench { spec, outdir } => {
            let mut spec = ExperimentSpec::from_file(&spec)?;
            if let Some(dir) = outdir {
                spec.outdir = dir;
            }
            if spec.data_dir.is_none() {
                spec.data_dir = ctx.data_dir.clone();
            }
            if spec.registry.is_none() {
                spec.registry = cli.registry.clone();
            }
            let outcome = run_experiment(&spec)?;
            for f in &outcome.failures {
                let method = f.method.map_or("", MethodId::as_str);
                eprintln!("warning: {} {method}: {}", f.network, f.message);
            }
            let written = emit_tables(&outcome, &spec.outdir)?;
            for path in written {
                writeln!(out, "{}", path.display())?;
            }
            if outcome.networks.is_empty() {
                bail!("no dataset could be processed");
            }
        }
        Command::Hist {
            dataset,
            k,
            bin_width,
            budget,
        } => {
            let loaded = ctx.load(&dataset)?;
            let hist = ExactSolver::new(&loaded.graph)?
                .with_budget(budget)
                .histogram(k, bin_width)?;
            hist.write_plot_data(&mut out)?;
        }
        Command::Normalize { dataset, output } => {
            let loaded = ctx.load(&dataset)?;
            match output {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_edge_list(&loaded.graph, BufWriter::new(file))?;
                }
                None => write_edge_list(&loaded.graph, &mut out)?,
            }
        }
    }
    out.flush()?;
    Ok(())
}
