//! Exact minimum vertex separation for small graphs.
//!
//! Dynamic programming over vertex subsets: `opt(S)` is the least possible
//! maximum cut value over orderings that place exactly the vertices of `S`
//! first. With `boundary(S)` the number of vertices of `S` adjacent to
//! something outside `S`,
//!
//! ```text
//! opt({}) = 0
//! opt(S)  = max(boundary(S), min over v in S of opt(S \ {v}))
//! ```
//!
//! and the optimum is `opt(V)`. Subsets are bitmasks, so memory grows as
//! `2^n` bytes; the default limit is [`DEFAULT_EXACT_LIMIT`] vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, Layout, Vertex};
use crate::separation::vertex_separation;

pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Largest graph [`optimal_vs_exhaustive`] accepts.
pub const EXHAUSTIVE_LIMIT: usize = 9;

/// Bitmask over `1..=n`: vertex `v` is bit `v - 1`.
pub type VertexSet = u64;

fn neighbor_masks(g: &Graph) -> Vec<VertexSet> {
    g.vertices()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0, |mask, &v| mask | 1 << (v - 1))
        })
        .collect()
}

fn boundary_with(masks: &[VertexSet], s: VertexSet) -> usize {
    let mut rest = s;
    let mut count = 0;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[bit] & !s != 0 {
            count += 1;
        }
    }
    count
}

/// Vertices of `s` with at least one neighbour outside `s`.
///
/// Equals the cut value of any layout that places exactly `s` first.
///
/// # Panics
///
/// If the graph has more than 64 vertices.
pub fn boundary(g: &Graph, s: VertexSet) -> usize {
    assert!(g.n() <= 64, "vertex sets are 64-bit masks");
    boundary_with(&neighbor_masks(g), s)
}

/// Convenience for building a [`VertexSet`] from vertex ids.
pub fn vertex_set(vertices: &[Vertex]) -> VertexSet {
    vertices.iter().fold(0, |mask, &v| mask | 1 << (v - 1))
}

/// Filled subset table: the optimum for every prefix set and a back-pointer
/// to the last vertex of one optimal ordering.
#[derive(Clone, Debug)]
pub struct SubsetTable {
    n: usize,
    opt: Vec<u8>,
    last: Vec<u8>,
}

impl SubsetTable {
    /// Fills the table for `g`; `limit` caps the vertex count.
    pub fn build(g: &Graph, limit: usize) -> Result<Self> {
        let n = g.n();
        if n > limit || n > 32 {
            return Err(Error::InstanceTooLarge {
                n,
                limit: limit.min(32),
            });
        }
        let masks = neighbor_masks(g);
        let size = 1usize << n;
        let mut opt = vec![0u8; size];
        let mut last = vec![0u8; size];
        // Increasing numeric order visits every S \ {v} before S.
        for s in 1..size {
            let set = s as VertexSet;
            let mut best = u8::MAX;
            let mut best_vertex = 0u8;
            let mut rest = set;
            while rest != 0 {
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                let prev = opt[s & !(1usize << bit)];
                // strict `<` keeps the smallest vertex on ties
                if prev < best {
                    best = prev;
                    best_vertex = bit as u8;
                }
            }
            opt[s] = best.max(boundary_with(&masks, set) as u8);
            last[s] = best_vertex;
        }
        Ok(SubsetTable { n, opt, last })
    }

    /// Optimum over orderings of `s` placed first.
    pub fn get(&self, s: VertexSet) -> usize {
        self.opt[s as usize] as usize
    }

    pub fn optimum(&self) -> usize {
        self.get(self.full())
    }

    fn full(&self) -> VertexSet {
        ((1u128 << self.n) - 1) as VertexSet
    }

    /// An optimal layout recovered from the back-pointers.
    pub fn witness(&self) -> Layout {
        let mut order = Vec::with_capacity(self.n);
        let mut s = self.full();
        while s != 0 {
            let bit = self.last[s as usize];
            order.push(bit as Vertex + 1);
            s &= !(1 << bit);
        }
        order.reverse();
        Layout::from_sequence(order).expect("back-pointers visit every vertex once")
    }
}

/// Minimum vertex separation and a layout attaining it, for `n <= limit`.
pub fn optimal_vs_with_limit(g: &Graph, limit: usize) -> Result<(Layout, usize)> {
    let table = SubsetTable::build(g, limit)?;
    Ok((table.witness(), table.optimum()))
}

/// [`optimal_vs_with_limit`] with [`DEFAULT_EXACT_LIMIT`].
pub fn optimal_vs(g: &Graph) -> Result<(Layout, usize)> {
    optimal_vs_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Minimum vertex separation by trying all `n!` layouts. Only for `n <= 9`.
pub fn optimal_vs_exhaustive(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut perm: Vec<Vertex> = (1..=n).collect();
    let mut best = usize::MAX;
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; n];
    let mut eval = |perm: &[Vertex]| {
        let layout = Layout::from_sequence(perm.to_vec()).expect("permutation");
        best = best.min(vertex_separation(g, &layout).expect("sizes match"));
    };
    eval(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            eval(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::instances::{gen_complete, gen_cycle, gen_grid, gen_path, gen_star};

    #[test]
    fn boundary_examples() {
        let k4 = gen_complete(4).unwrap();
        assert_eq!(boundary(&k4, vertex_set(&[1, 2, 3, 4])), 0);
        assert_eq!(boundary(&k4, vertex_set(&[1, 3])), 2);
        let p4 = gen_path(4).unwrap();
        assert_eq!(boundary(&p4, vertex_set(&[1, 2])), 1);
        assert_eq!(boundary(&p4, 0), 0);
    }

    #[test]
    fn table_basics() {
        let g = gen_cycle(5).unwrap();
        let table = SubsetTable::build(&g, 20).unwrap();
        assert_eq!(table.get(0), 0);
        assert_eq!(table.optimum(), 2);
        // each entry is the larger of its boundary and its best one-smaller subset
        let masks = neighbor_masks(&g);
        for s in 1u64..(1 << 5) {
            let best_prev = (0..5)
                .filter(|bit| s & (1 << bit) != 0)
                .map(|bit| table.get(s & !(1 << bit)))
                .min()
                .unwrap();
            assert_eq!(table.get(s), best_prev.max(boundary_with(&masks, s)));
            assert!(table.get(s) >= best_prev);
        }
    }

    #[test]
    fn analytic_anchors() {
        for n in 1..=10 {
            let (l, vs) = optimal_vs(&gen_path(n).unwrap()).unwrap();
            assert_eq!(vs, usize::from(n > 1));
            assert_eq!(l.len(), n);
        }
        for n in 4..=10 {
            assert_eq!(optimal_vs(&gen_cycle(n).unwrap()).unwrap().1, 2);
        }
        for n in 1..=8 {
            assert_eq!(optimal_vs(&gen_complete(n).unwrap()).unwrap().1, n - 1);
        }
        assert_eq!(optimal_vs(&gen_star(4).unwrap()).unwrap().1, 1);
        assert_eq!(optimal_vs(&gen_grid(3, 3).unwrap()).unwrap().1, 3);
    }

    #[test]
    fn witness_attains_optimum() {
        let g = gen_grid(3, 4).unwrap();
        let (l, vs) = optimal_vs(&g).unwrap();
        assert_eq!(vertex_separation(&g, &l).unwrap(), vs);
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(optimal_vs_exhaustive(&gen_complete(4).unwrap()).unwrap(), 3);
        for n in 1..=7 {
            assert_eq!(
                optimal_vs_exhaustive(&build_graph(n, &[]).unwrap()).unwrap(),
                0
            );
        }
        assert_eq!(optimal_vs_exhaustive(&gen_star(4).unwrap()).unwrap(), 1);
        for n in 4..=8 {
            assert_eq!(optimal_vs_exhaustive(&gen_cycle(n).unwrap()).unwrap(), 2);
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            optimal_vs_exhaustive(&gen_path(10).unwrap()),
            Err(Error::InstanceTooLarge { n: 10, limit: 9 })
        ));
        assert!(matches!(
            optimal_vs(&gen_path(21).unwrap()),
            Err(Error::InstanceTooLarge { n: 21, limit: 20 })
        ));
        assert!(optimal_vs_with_limit(&gen_path(12).unwrap(), 11).is_err());
        assert!(optimal_vs_with_limit(&gen_path(12).unwrap(), 12).is_ok());
    }
}
