//! Published network sizes. Each test returns early when the dataset is not
//! present under `$KMEDIAN_DATA_DIR`.

mod common;

use kmedian::centrality::{degree_scores, h_index_scores};
use kmedian::graph::degree_stats;

macro_rules! require {
    ($name:expr) => {
        match common::load_named($name) {
            Some(g) => g,
            None => {
                eprintln!("skipping: {} not available", $name);
                return;
            }
        }
    };
}

#[test]
fn zebra_sizes_and_degrees() {
    let loaded = require!("zebra");
    let g = &loaded.graph;
    assert_eq!((g.vertex_count(), g.edge_count()), (23, 105));
    let stats = degree_stats(g);
    assert_eq!((stats.avg_degree * 100.0).round() / 100.0, 9.13);
    assert_eq!(stats.max_degree, 14);
    let top = degree_scores(g)
        .as_slice()
        .iter()
        .cloned()
        .fold(0.0, f64::max);
    assert_eq!(top, 14.0);
    assert!(h_index_scores(g).as_slice().iter().all(|&h| h <= 14.0));
}

#[test]
fn netscience_sizes() {
    let loaded = require!("ca-netscience");
    let g = &loaded.graph;
    assert_eq!((g.vertex_count(), g.edge_count()), (379, 914));
}

#[test]
fn registry_sizes_match_local_files() {
    let registry = kmedian::harness::DatasetRegistry::builtin();
    let mut checked = 0;
    for entry in registry.entries() {
        // the multi-million edge files take too long for a unit test run
        if entry.expected_edges.is_none_or(|e| e > 500_000) {
            continue;
        }
        if let Some(loaded) = common::load_named(&entry.name) {
            checked += 1;
            let sizes = (loaded.graph.vertex_count(), loaded.graph.edge_count());
            if Some(sizes) != entry.expected_vertices.zip(entry.expected_edges) {
                eprintln!("{}: {sizes:?} differs from the manifest", entry.name);
            }
        }
    }
    eprintln!("{checked} registry datasets found locally");
}
