#![allow(dead_code)]

use std::collections::HashSet;

use vsep_core::{Graph, Layout, RandomSource, Vertex};

/// Erdős–Rényi style graph with edge probability `p_num / p_den`.
pub fn random_graph(n: usize, p_num: usize, p_den: usize, rng: &mut RandomSource) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.below(p_den) < p_num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random graph with size in `1..=max_n` and a density drawn from the full
/// range, edgeless through complete.
pub fn random_instance(max_n: usize, rng: &mut RandomSource) -> Graph {
    let n = rng.below(max_n) + 1;
    let p = rng.below(11);
    random_graph(n, p, 10, rng)
}

pub fn random_layout_for(g: &Graph, rng: &mut RandomSource) -> Layout {
    Layout::from_sequence(rng.permutation(g.n())).unwrap()
}

/// Cut value at position `i` from the set definition: left set, right set,
/// and the left vertices with an edge into the right set.
pub fn naive_cut(g: &Graph, order: &[Vertex], i: usize) -> usize {
    let left: HashSet<Vertex> = order[..i].iter().copied().collect();
    let right: HashSet<Vertex> = order[i..].iter().copied().collect();
    left.iter()
        .filter(|&&u| right.iter().any(|&v| g.has_edge(u, v)))
        .count()
}

pub fn naive_profile(g: &Graph, layout: &Layout) -> Vec<usize> {
    (1..=g.n())
        .map(|i| naive_cut(g, layout.order(), i))
        .collect()
}

/// Five-vertex graph for the layout `(2, 4, 3, 5, 1)` example, whose
/// vertex separation is 3.
pub fn five_vertex_example() -> Graph {
    Graph::new(5, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]).unwrap()
}
