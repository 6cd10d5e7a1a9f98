//! Iterative voting selection.
//!
//! Every vertex starts with voting power 1. Each round, every vertex not yet
//! elected collects the voting power of its neighbors; the one with the most
//! votes (lowest id on ties) is elected and stops voting, and each of its
//! neighbors loses `f` voting power, floored at zero. `f` stays fixed for
//! the whole run and defaults to `1 / <d>`.

use crate::error::{Error, Result};
use crate::graph::{degree_stats, Graph, VertexId};

use super::{MethodId, RankedList};

/// Per-vertex incoming votes and remaining voting power.
#[derive(Debug, Clone, PartialEq)]
pub struct VoteState {
    pub incoming: Vec<f64>,
    pub voting_power: Vec<f64>,
    pub suppression: f64,
}

#[derive(Debug, Clone)]
pub struct VoteRank<'g> {
    graph: &'g Graph,
    state: VoteState,
    elected: Vec<bool>,
    order: Vec<VertexId>,
}

impl<'g> VoteRank<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let avg = degree_stats(graph).avg_degree;
        let f = if avg > 0.0 { 1.0 / avg } else { 0.0 };
        Self::with_suppression(graph, f).expect("1/<d> is a valid suppression")
    }

    pub fn with_suppression(graph: &'g Graph, suppression: f64) -> Result<Self> {
        if !(suppression.is_finite() && suppression >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "suppression factor {suppression} must be finite and non-negative"
            )));
        }
        let n = graph.vertex_count();
        Ok(VoteRank {
            graph,
            state: VoteState {
                incoming: vec![0.0; n],
                voting_power: vec![1.0; n],
                suppression,
            },
            elected: vec![false; n],
            order: Vec::new(),
        })
    }

    /// Runs one voting round and returns the elected vertex, or `None` once
    /// every vertex has been elected.
    pub fn step(&mut self) -> Option<VertexId> {
        let g = self.graph;
        let VoteState {
            incoming,
            voting_power,
            suppression,
        } = &mut self.state;
        let mut winner: Option<(VertexId, f64)> = None;
        for v in g.vertices() {
            if self.elected[v as usize] {
                continue;
            }
            let votes: f64 = g
                .neighbors(v)
                .iter()
                .map(|&u| voting_power[u as usize])
                .sum();
            incoming[v as usize] = votes;
            if winner.is_none_or(|(_, best)| votes > best) {
                winner = Some((v, votes));
            }
        }
        let (v, _) = winner?;
        self.elected[v as usize] = true;
        incoming[v as usize] = 0.0;
        voting_power[v as usize] = 0.0;
        for &u in g.neighbors(v) {
            let t = &mut voting_power[u as usize];
            *t = (*t - *suppression).max(0.0);
        }
        self.order.push(v);
        Some(v)
    }

    pub fn state(&self) -> &VoteState {
        &self.state
    }

    pub fn elected(&self) -> &[VertexId] {
        &self.order
    }

    pub fn into_elected(self) -> Vec<VertexId> {
        self.order
    }
}

/// The first `k` VoteRank elections with `f = 1 / <d>`.
pub fn voterank(g: &Graph, k: usize) -> Result<RankedList> {
    voterank_with(g, k, None)
}

pub fn voterank_with(g: &Graph, k: usize, suppression: Option<f64>) -> Result<RankedList> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, max: n });
    }
    let mut vr = match suppression {
        Some(f) => VoteRank::with_suppression(g, f)?,
        None => VoteRank::new(g),
    };
    for _ in 0..k {
        vr.step();
    }
    Ok(RankedList {
        method: MethodId::VoteRank,
        vertices: vr.into_elected(),
    })
}
