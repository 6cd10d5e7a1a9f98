//! Edge-list ingestion and the immutable simple undirected [`Graph`].
//!
//! Loading a network is a three-step pipeline:
//!
//! 1. [`parse_edge_list`] reads whitespace-separated `source target` pairs,
//!    skipping `#`/`%` comment lines and ignoring extra columns.
//! 2. [`build_simple_graph`] symmetrizes the pairs, drops self-loops and
//!    duplicates, and compacts the ids in order of first appearance.
//! 3. [`largest_connected_component`] keeps the biggest component and
//!    renumbers it contiguously.
//!
//! [`load_edge_list`] runs all three and composes the id mappings.

use std::collections::{HashMap, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::ops::Range;
use std::path::Path;

use crate::error::{Error, Result};

/// Compact vertex id, always in `0..graph.vertex_count()`.
pub type VertexId = u32;

/// Edge pairs exactly as read from the input, before any normalization.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawEdgeList {
    pub edges: Vec<(u64, u64)>,
    /// Number of lines in the source, including comments and blanks.
    pub source_line_count: usize,
}

/// Parses a plain-text edge list.
///
/// Blank lines and lines starting with `#` or `%` are skipped. Fields are
/// separated by any run of spaces or tabs; tokens after the second are
/// ignored so weighted and timestamped files load as unweighted.
pub fn parse_edge_list<R: BufRead>(mut reader: R) -> Result<RawEdgeList> {
    let mut raw = RawEdgeList::default();
    let mut line = String::new();
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        raw.source_line_count += 1;
        let lineno = raw.source_line_count;
        let text = line.trim_end_matches(['\n', '\r']);
        let trimmed = text.trim_start_matches([' ', '\t']);
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut fields = trimmed.split([' ', '\t']).filter(|t| !t.is_empty());
        let mut next_id = |what: &str| -> Result<u64> {
            let token = fields.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {what} vertex"),
            })?;
            token.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid {what} vertex {token:?}"),
            })
        };
        let source = next_id("source")?;
        let target = next_id("target")?;
        raw.edges.push((source, target));
    }
    Ok(raw)
}

pub fn parse_edge_str(text: &str) -> Result<RawEdgeList> {
    parse_edge_list(text.as_bytes())
}

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Neighbor lists are strictly increasing, symmetric and loop-free. All
/// adjacency lives in one contiguous pool indexed by per-vertex offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    connected: bool,
}

impl Graph {
    /// Builds a simple graph on vertices `0..vertex_count`.
    ///
    /// Edges are treated as undirected; self-loops and repeated edges are
    /// dropped. Vertices without edges are kept as isolated vertices.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if vertex_count > VertexId::MAX as usize {
            return Err(Error::InvalidArgument(format!(
                "{vertex_count} vertices exceed the supported id range"
            )));
        }
        let mut arcs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w as u64,
                        vertex_count,
                    });
                }
            }
            if u != v {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; vertex_count + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = arcs.into_iter().map(|(_, v)| v).collect();
        let mut graph = Graph {
            offsets,
            neighbors,
            connected: false,
        };
        graph.connected = graph.vertex_count() > 0 && graph.reach_count(0) == graph.vertex_count();
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn vertices(&self) -> Range<VertexId> {
        0..self.vertex_count() as VertexId
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn contains(&self, v: u64) -> bool {
        v < self.vertex_count() as u64
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    fn reach_count(&self, start: VertexId) -> usize {
        self.component_of(start, &mut vec![false; self.vertex_count()])
            .len()
    }

    fn component_of(&self, start: VertexId, seen: &mut [bool]) -> Vec<VertexId> {
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start as usize] = true;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members
    }
}

/// Bijection between original (file) ids and compact ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexMapping {
    forward: HashMap<u64, VertexId>,
    reverse: Vec<u64>,
}

impl VertexMapping {
    pub fn identity(n: usize) -> Self {
        VertexMapping::from_reverse((0..n as u64).collect())
    }

    fn from_reverse(reverse: Vec<u64>) -> Self {
        let forward = reverse
            .iter()
            .enumerate()
            .map(|(compact, &orig)| (orig, compact as VertexId))
            .collect();
        VertexMapping { forward, reverse }
    }

    pub fn len(&self) -> usize {
        self.reverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reverse.is_empty()
    }

    pub fn to_compact(&self, original: u64) -> Option<VertexId> {
        self.forward.get(&original).copied()
    }

    pub fn to_original(&self, compact: VertexId) -> u64 {
        self.reverse[compact as usize]
    }

    /// Chains `self` (original -> intermediate) with `next`
    /// (intermediate -> final). Ids dropped by `next` disappear.
    pub fn then(&self, next: &VertexMapping) -> VertexMapping {
        let reverse = next
            .reverse
            .iter()
            .map(|&mid| self.reverse[mid as usize])
            .collect();
        VertexMapping::from_reverse(reverse)
    }
}

/// Normalizes raw pairs into a simple undirected graph.
///
/// Compact ids follow the order in which vertices first appear in a
/// non-loop edge. The result may still be disconnected.
pub fn build_simple_graph(raw: &RawEdgeList) -> Result<(Graph, VertexMapping)> {
    let mut forward: HashMap<u64, VertexId> = HashMap::new();
    let mut reverse = Vec::new();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for &(a, b) in &raw.edges {
        if a == b {
            continue;
        }
        let mut compact = |orig: u64| {
            *forward.entry(orig).or_insert_with(|| {
                reverse.push(orig);
                (reverse.len() - 1) as VertexId
            })
        };
        let u = compact(a);
        let v = compact(b);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let graph = Graph::from_edges(reverse.len(), edges)?;
    Ok((graph, VertexMapping { forward, reverse }))
}

/// Extracts the component with the most vertices, renumbered in ascending
/// order of the input ids. Equal-sized components resolve to the one
/// holding the smallest id.
pub fn largest_connected_component(g: &Graph) -> Result<(Graph, VertexMapping)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_connected() {
        return Ok((g.clone(), VertexMapping::identity(n)));
    }
    let mut seen = vec![false; n];
    let mut best: Vec<VertexId> = Vec::new();
    for v in g.vertices() {
        if !seen[v as usize] {
            let members = g.component_of(v, &mut seen);
            if members.len() > best.len() {
                best = members;
            }
        }
    }
    best.sort_unstable();
    let mut relabel = vec![VertexId::MAX; n];
    for (new, &old) in best.iter().enumerate() {
        relabel[old as usize] = new as VertexId;
    }
    let edges = best.iter().flat_map(|&u| {
        let relabel = &relabel;
        g.neighbors(u)
            .iter()
            .filter(move |&&w| u < w)
            .map(move |&w| (relabel[u as usize], relabel[w as usize]))
    });
    let lcc = Graph::from_edges(best.len(), edges)?;
    debug_assert!(lcc.is_connected());
    let mapping = VertexMapping::from_reverse(best.into_iter().map(u64::from).collect());
    Ok((lcc, mapping))
}

/// Average and maximum degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub avg_degree: f64,
    pub max_degree: usize,
    pub max_to_avg: f64,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let n = g.vertex_count().max(1) as f64;
    let avg_degree = 2.0 * g.edge_count() as f64 / n;
    let max_degree = g.max_degree();
    DegreeStats {
        avg_degree,
        max_degree,
        max_to_avg: if avg_degree > 0.0 {
            max_degree as f64 / avg_degree
        } else {
            0.0
        },
    }
}

/// A network ready for experiments: the largest connected component of the
/// normalized input, plus the map back to the file's ids.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub mapping: VertexMapping,
    /// Vertex and edge counts before component extraction.
    pub simple_vertex_count: usize,
    pub simple_edge_count: usize,
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<LoadedGraph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let raw = parse_edge_list(BufReader::new(file)).map_err(|e| match e {
        Error::Stream(source) => Error::io(path, source),
        other => other,
    })?;
    normalize(&raw)
}

/// [`build_simple_graph`] followed by [`largest_connected_component`].
pub fn normalize(raw: &RawEdgeList) -> Result<LoadedGraph> {
    let (simple, to_simple) = build_simple_graph(raw)?;
    let (graph, to_lcc) = largest_connected_component(&simple)?;
    Ok(LoadedGraph {
        simple_vertex_count: simple.vertex_count(),
        simple_edge_count: simple.edge_count(),
        mapping: to_simple.then(&to_lcc),
        graph,
    })
}

/// Writes one `u v` line per edge in compact ids, sorted lexicographically.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(edges: &[(u64, u64)]) -> (Graph, VertexMapping) {
        let raw = RawEdgeList {
            edges: edges.to_vec(),
            source_line_count: edges.len(),
        };
        build_simple_graph(&raw).unwrap()
    }

    #[test]
    fn parses_plain_pairs() {
        let raw = parse_edge_str("1 2\n2 3\n").unwrap();
        assert_eq!(raw.edges, vec![(1, 2), (2, 3)]);
        assert_eq!(raw.source_line_count, 2);
    }

    #[test]
    fn skips_comments_and_blanks() {
        let raw = parse_edge_str("# comment\n%meta\n\n5\t7\n").unwrap();
        assert_eq!(raw.edges, vec![(5, 7)]);
        assert_eq!(raw.source_line_count, 4);
    }

    #[test]
    fn ignores_extra_columns_and_crlf() {
        let raw = parse_edge_str("1  2 0.5 1234\r\n3\t\t4\r\n").unwrap();
        assert_eq!(raw.edges, vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn malformed_token_reports_line() {
        match parse_edge_str("a b\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_str("1 2\n\n3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_str("1 -2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn dedupes_and_drops_loops() {
        let (g, map) = simple(&[(0, 1), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(map.to_compact(1), Some(1));
    }

    #[test]
    fn compacts_in_first_appearance_order() {
        let (g, map) = simple(&[(10, 20)]);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(map.to_compact(10), Some(0));
        assert_eq!(map.to_compact(20), Some(1));
        assert_eq!(map.to_original(1), 20);

        let (_, map) = simple(&[(7, 3), (3, 9), (1, 7)]);
        let order: Vec<u64> = (0..4).map(|c| map.to_original(c)).collect();
        assert_eq!(order, vec![7, 3, 9, 1]);
    }

    #[test]
    fn only_loops_is_empty() {
        assert!(matches!(
            build_simple_graph(&RawEdgeList {
                edges: vec![(3, 3)],
                source_line_count: 1
            }),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn lcc_keeps_triangle() {
        let (g, _) = simple(&[(0, 1), (1, 2), (2, 0), (3, 4)]);
        assert!(!g.is_connected());
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.vertex_count(), 3);
        assert_eq!(lcc.edge_count(), 3);
        assert!(lcc.is_connected());
        assert_eq!(map.len(), 3);
    }

    #[test]
    fn lcc_tie_prefers_smallest_id() {
        // components {0,1} and {2,3}, compact ids follow file order
        let (g, _) = simple(&[(5, 6), (7, 8)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.vertex_count(), 2);
        assert_eq!(map.to_original(0), 0);
        assert_eq!(map.to_original(1), 1);
    }

    #[test]
    fn lcc_of_connected_is_identity() {
        let (g, _) = simple(&[(0, 1), (1, 2)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(lcc, g);
        assert_eq!(map, VertexMapping::identity(3));
    }

    #[test]
    fn composed_mapping_points_at_file_ids() {
        let raw = parse_edge_str("100 200\n300 400\n400 500\n").unwrap();
        let loaded = normalize(&raw).unwrap();
        assert_eq!(loaded.graph.vertex_count(), 3);
        assert_eq!(loaded.simple_vertex_count, 5);
        let ids: Vec<u64> = loaded
            .graph
            .vertices()
            .map(|v| loaded.mapping.to_original(v))
            .collect();
        assert_eq!(ids, vec![300, 400, 500]);
        assert_eq!(loaded.mapping.to_compact(500), Some(2));
        assert_eq!(loaded.mapping.to_compact(100), None);
    }

    #[test]
    fn degree_stats_of_star() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let stats = degree_stats(&g);
        assert_eq!(stats.avg_degree, 1.6);
        assert_eq!(stats.max_degree, 4);
        assert_eq!(stats.max_to_avg, 2.5);
    }

    #[test]
    fn regular_graph_stats() {
        let cycle = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let stats = degree_stats(&cycle);
        assert_eq!(stats.avg_degree, 2.0);
        assert_eq!(stats.max_degree, 2);
    }

    #[test]
    fn export_is_sorted_pairs() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (2, 1), (1, 0)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0 1\n0 2\n1 2\n1 3\n");
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }
}
