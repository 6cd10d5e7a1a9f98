use crate::graph::Graph;

use super::ScoreVector;

/// Core number of every vertex: the largest `i` such that the vertex
/// survives in the `i`-core, where the `i`-core is what remains after
/// repeatedly deleting vertices of degree below `i`.
///
/// Bucket-sort peeling in `O(|V| + |E|)` (Batagelj and Zaversnik).
pub fn core_numbers(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin_start[d] = first slot of degree-d vertices in `order`
    let mut bin_start = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin_start[d] += 1;
    }
    let mut start = 0;
    for slot in bin_start.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }
    let mut order = vec![0u32; n];
    let mut position = vec![0usize; n];
    {
        let mut next = bin_start.clone();
        for v in g.vertices() {
            let d = degree[v as usize];
            position[v as usize] = next[d];
            order[next[d]] = v;
            next[d] += 1;
        }
    }

    for i in 0..n {
        let v = order[i];
        let dv = degree[v as usize];
        for &u in g.neighbors(v) {
            let du = degree[u as usize];
            if du > dv {
                // move u to the front of its bin, then shrink it into bin du-1
                let pu = position[u as usize];
                let front = bin_start[du];
                let w = order[front];
                if u != w {
                    order.swap(pu, front);
                    position[u as usize] = front;
                    position[w as usize] = pu;
                }
                bin_start[du] += 1;
                degree[u as usize] -= 1;
            }
        }
    }
    degree.into_iter().map(|d| d as u32).collect()
}

/// `C(v)`: sum of the neighbors' core numbers.
pub fn coreness_scores(g: &Graph) -> ScoreVector {
    let core = core_numbers(g);
    ScoreVector::from_counts(neighbor_sums(g, |u| u64::from(core[u as usize])))
}

/// `C+(v)`: sum of the neighbors' `C` values.
pub fn extended_coreness_scores(g: &Graph) -> ScoreVector {
    let core = core_numbers(g);
    let coreness = neighbor_sums(g, |u| u64::from(core[u as usize]));
    ScoreVector::from_counts(neighbor_sums(g, |u| coreness[u as usize]))
}

fn neighbor_sums(g: &Graph, value: impl Fn(u32) -> u64) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().map(|&u| value(u)).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn small_cores() {
        assert_eq!(core_numbers(&triangle()), vec![2, 2, 2]);
        assert_eq!(core_numbers(&star()), vec![1; 5]);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(core_numbers(&k4), vec![3; 4]);
    }

    #[test]
    fn triangle_with_tail() {
        // triangle 0-1-2 plus pendant path 2-3-4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(core_numbers(&g), vec![2, 2, 2, 1, 1]);
    }

    #[test]
    fn coreness_values() {
        assert_eq!(coreness_scores(&triangle()).as_slice(), &[4.0; 3]);
        assert_eq!(extended_coreness_scores(&triangle()).as_slice(), &[8.0; 3]);
        assert_eq!(
            coreness_scores(&star()).as_slice(),
            &[4.0, 1.0, 1.0, 1.0, 1.0]
        );
        assert_eq!(extended_coreness_scores(&star()).as_slice(), &[4.0; 5]);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(coreness_scores(&path).as_slice(), &[1.0, 2.0, 1.0]);
        assert_eq!(extended_coreness_scores(&path).as_slice(), &[2.0; 3]);
    }
}
