use crate::graph::Graph;

use super::ScoreVector;

/// Largest `n` such that at least `n` of the values are `>= n`.
///
/// Sorts `values` in place, descending.
pub fn h_index(values: &mut [usize]) -> usize {
    values.sort_unstable_by(|a, b| b.cmp(a));
    values
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v > i)
        .count()
}

/// H-index of each vertex over its neighbors' degrees.
pub fn h_index_scores(g: &Graph) -> ScoreVector {
    let mut buf = Vec::new();
    ScoreVector::from_counts(g.vertices().map(|v| {
        buf.clear();
        buf.extend(g.neighbors(v).iter().map(|&u| g.degree(u)));
        h_index(&mut buf) as u64
    }))
}
