//! Immutable undirected simple graphs and linear layouts.
//!
//! Vertices are dense identifiers `1..=n`. A [`Layout`] is a bijection between
//! vertices and positions `1..=n`; position `i` holds the `i`-th placed vertex.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// A vertex identifier in `1..=n`.
pub type Vertex = usize;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph on vertices `1..=n` from unordered vertex pairs.
    ///
    /// Duplicate edges (in either orientation) are collapsed. Self-loops and
    /// endpoints outside `1..=n` are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
            max_degree,
        })
    }

    /// Builds a graph from edges over arbitrary labels.
    ///
    /// Labels are numbered `1..` in order of first appearance, first through
    /// `labels` (so isolated vertices can be declared) and then through the
    /// edge list. Returns the graph and the label of each vertex, indexed by
    /// `vertex - 1`.
    pub fn from_labeled_edges<L, I>(
        labels: impl IntoIterator<Item = L>,
        edges: I,
    ) -> Result<(Self, Vec<L>)>
    where
        L: Hash + Eq + Clone,
        I: IntoIterator<Item = (L, L)>,
    {
        let mut ids: HashMap<L, Vertex> = HashMap::new();
        let mut table = Vec::new();
        let mut intern = |label: L, table: &mut Vec<L>| -> Vertex {
            *ids.entry(label.clone()).or_insert_with(|| {
                table.push(label);
                table.len()
            })
        };
        for label in labels {
            intern(label, &mut table);
        }
        let mut dense = Vec::new();
        for (a, b) in edges {
            let u = intern(a, &mut table);
            let v = intern(b, &mut table);
            dense.push((u, v));
        }
        let graph = Graph::new(table.len(), dense)?;
        Ok((graph, table))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Maximum vertex degree.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertices(&self) -> RangeInclusive<Vertex> {
        1..=self.n()
    }

    /// Neighbours of `u` in ascending order.
    ///
    /// # Panics
    ///
    /// If `u` is not in `1..=n`.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adjacency[u - 1]
    }

    /// Degree of `u`, or `InvalidVertex` when `u` is out of range.
    pub fn degree(&self, u: Vertex) -> Result<usize> {
        check_vertex(u, self.n())?;
        Ok(self.adjacency[u - 1].len())
    }

    /// Degree of every vertex, indexed by `vertex - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n() && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The isomorphic graph in which vertex `v` is renamed `mapping[v - 1]`.
    pub fn relabel(&self, mapping: &[Vertex]) -> Result<Self> {
        let perm = Layout::from_sequence(mapping.to_vec())?;
        if perm.len() != self.n() {
            return Err(Error::SizeMismatch {
                graph: self.n(),
                layout: perm.len(),
            });
        }
        Graph::new(
            self.n(),
            self.edges().map(|(u, v)| (mapping[u - 1], mapping[v - 1])),
        )
    }
}

/// Convenience wrapper around [`Graph::new`] for a slice of edges.
pub fn build_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

fn check_vertex(u: Vertex, n: usize) -> Result<()> {
    if u == 0 || u > n {
        Err(Error::InvalidVertex { vertex: u, n })
    } else {
        Ok(())
    }
}

/// A linear layout: the `i`-th entry of the sequence sits at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl Layout {
    /// Validates that `sequence` is a permutation of `1..=sequence.len()`.
    pub fn from_sequence(sequence: Vec<Vertex>) -> Result<Self> {
        let n = sequence.len();
        if n == 0 {
            return Err(Error::NotABijection {
                n,
                reason: "empty sequence".into(),
            });
        }
        let mut position = vec![0usize; n];
        for (idx, &v) in sequence.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::NotABijection {
                    n,
                    reason: format!("vertex {v} is out of range"),
                });
            }
            if position[v - 1] != 0 {
                return Err(Error::NotABijection {
                    n,
                    reason: format!("vertex {v} appears more than once"),
                });
            }
            position[v - 1] = idx + 1;
        }
        Ok(Layout {
            order: sequence,
            position,
        })
    }

    pub fn identity(n: usize) -> Self {
        Layout {
            order: (1..=n).collect(),
            position: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The vertex at position `i` (1-based).
    pub fn vertex_at(&self, i: usize) -> Option<Vertex> {
        i.checked_sub(1).and_then(|k| self.order.get(k)).copied()
    }

    /// The position (1-based) of vertex `v`.
    pub fn position_of(&self, v: Vertex) -> Option<usize> {
        v.checked_sub(1).and_then(|k| self.position.get(k)).copied()
    }

    /// Vertices in layout order.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Positions indexed by `vertex - 1`.
    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn into_order(self) -> Vec<Vertex> {
        self.order
    }

    /// Carries the layout over to a relabelled graph: vertex `v` becomes
    /// `mapping[v - 1]` and keeps its position.
    pub fn relabel(&self, mapping: &[Vertex]) -> Result<Self> {
        if mapping.len() != self.len() {
            return Err(Error::SizeMismatch {
                graph: mapping.len(),
                layout: self.len(),
            });
        }
        Layout::from_sequence(self.order.iter().map(|&v| mapping[v - 1]).collect())
    }
}

/// Convenience wrapper around [`Layout::from_sequence`].
pub fn build_layout(sequence: &[Vertex]) -> Result<Layout> {
    Layout::from_sequence(sequence.to_vec())
}
