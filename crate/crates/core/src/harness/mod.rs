//! Experiment engine: run methods over a k-grid on many networks, then
//! derive the comparison tables and write them out.

mod emit;
mod registry;
mod run;
mod spec;
mod tables;

pub use emit::{emit_tables, format_sig, parse_records, write_records, RECORDS_HEADER};
pub use registry::{
    data_dir_from_env, DatasetEntry, DatasetRegistry, DatasetSource, Generator, ResolvedDataset,
    DATA_DIR_ENV,
};
pub use run::{
    run_experiment, run_network, ExactEntry, ExperimentOutcome, ExperimentRecord, MethodTiming,
    NetworkRun, OptimumTable, RunFailure,
};
pub use spec::{ExperimentSpec, Timing};
pub use tables::{
    error_to_best, error_to_optimal, error_to_random, super_algorithm, timing_table,
    within_percent_shares, ComparisonTable, ErrorRow, Reference, ShareRow, ShareTable, SuperRow,
    TimingRow, SHARE_THRESHOLDS,
};
