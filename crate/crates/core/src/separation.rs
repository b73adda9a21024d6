//! Cut values and vertex separation of a layout.
//!
//! The cut at position `i` splits the layout into the vertices placed at
//! positions `1..=i` and those placed after `i`. Its value counts the
//! left-hand vertices with at least one neighbour on the right. The vertex
//! separation of a layout is its largest cut value.

use crate::error::{Error, Result};
use crate::graph::{Graph, Layout};

/// Cut values at positions `1..=n` and their maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutProfile {
    /// `values[i - 1]` is the cut value at position `i`.
    pub values: Vec<usize>,
    pub vs: usize,
}

impl CutProfile {
    pub fn at(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|k| self.values.get(k)).copied()
    }
}

fn check_sizes(g: &Graph, layout: &Layout) -> Result<()> {
    if g.n() != layout.len() {
        return Err(Error::SizeMismatch {
            graph: g.n(),
            layout: layout.len(),
        });
    }
    Ok(())
}

/// Cut value at position `i`, evaluated straight from the definition.
///
/// Costs `O(n + m)`; use [`cut_profile`] when more than one cut is needed.
pub fn cut_value(g: &Graph, layout: &Layout, i: usize) -> Result<usize> {
    check_sizes(g, layout)?;
    let n = g.n();
    if i == 0 || i > n {
        return Err(Error::InvalidPosition { position: i, n });
    }
    let pos = layout.positions();
    let count = layout.order()[..i]
        .iter()
        .filter(|&&u| g.neighbors(u).iter().any(|&v| pos[v - 1] > i))
        .count();
    Ok(count)
}

/// All cut values in `O(n + m)`.
///
/// Vertex `u` is counted at every cut `i` with `pos(u) <= i < reach(u)`,
/// where `reach(u)` is the largest position among its neighbours. The
/// intervals are accumulated with a difference array.
pub fn cut_profile(g: &Graph, layout: &Layout) -> Result<CutProfile> {
    check_sizes(g, layout)?;
    let n = g.n();
    let pos = layout.positions();
    // diff[k] adjusts the running count for cut k (1-based); slot n+1 absorbs ends.
    let mut diff = vec![0isize; n + 2];
    for u in g.vertices() {
        let start = pos[u - 1];
        let reach = g
            .neighbors(u)
            .iter()
            .map(|&v| pos[v - 1])
            .max()
            .unwrap_or(0);
        if reach > start {
            diff[start] += 1;
            diff[reach] -= 1;
        }
    }
    let mut values = Vec::with_capacity(n);
    let mut running = 0isize;
    for d in &diff[1..=n] {
        running += d;
        values.push(running as usize);
    }
    let vs = values.iter().copied().max().unwrap_or(0);
    Ok(CutProfile { values, vs })
}

/// The vertex separation of `layout`: the largest cut value.
pub fn vertex_separation(g: &Graph, layout: &Layout) -> Result<usize> {
    cut_profile(g, layout).map(|p| p.vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, build_layout};
    use crate::instances::{gen_complete, gen_path, gen_star};

    #[test]
    fn path_first_cut() {
        let g = gen_path(3).unwrap();
        assert_eq!(cut_value(&g, &Layout::identity(3), 1).unwrap(), 1);
    }

    #[test]
    fn complete_graph_cut() {
        let g = gen_complete(4).unwrap();
        for seq in [[1, 2, 3, 4], [3, 1, 4, 2], [4, 3, 2, 1]] {
            let l = build_layout(&seq).unwrap();
            assert_eq!(cut_value(&g, &l, 2).unwrap(), 2);
        }
    }

    #[test]
    fn path_profile() {
        let g = gen_path(4).unwrap();
        let p = cut_profile(&g, &Layout::identity(4)).unwrap();
        assert_eq!(p.values, vec![1, 1, 1, 0]);
        assert_eq!(p.vs, 1);
    }

    #[test]
    fn star_with_centre_last() {
        // centre is vertex 1, leaves 2..=5
        let g = gen_star(4).unwrap();
        let l = build_layout(&[2, 3, 4, 5, 1]).unwrap();
        let p = cut_profile(&g, &l).unwrap();
        assert_eq!(p.values, vec![1, 2, 3, 4, 0]);
        assert_eq!(p.vs, 4);
    }

    #[test]
    fn path_and_complete_separation() {
        for n in 2..12 {
            let path = gen_path(n).unwrap();
            assert_eq!(vertex_separation(&path, &Layout::identity(n)).unwrap(), 1);
            let k = gen_complete(n).unwrap();
            assert_eq!(vertex_separation(&k, &Layout::identity(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = gen_path(3).unwrap();
        assert!(matches!(
            cut_value(&g, &Layout::identity(3), 0),
            Err(Error::InvalidPosition { position: 0, n: 3 })
        ));
        assert!(matches!(
            cut_value(&g, &Layout::identity(3), 4),
            Err(Error::InvalidPosition { position: 4, n: 3 })
        ));
        assert!(matches!(
            cut_profile(&g, &Layout::identity(4)),
            Err(Error::SizeMismatch {
                graph: 3,
                layout: 4
            })
        ));
    }

    #[test]
    fn edgeless_is_zero() {
        let g = build_graph(5, &[]).unwrap();
        let p = cut_profile(&g, &Layout::identity(5)).unwrap();
        assert_eq!(p.values, vec![0; 5]);
        assert_eq!(p.vs, 0);
    }
}
