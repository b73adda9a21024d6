//! Greedy construction heuristics for vertex separation.
//!
//! Each heuristic grows a layout from left to right, one vertex (or one batch
//! of neighbours) at a time, and never revisits a placement.
//!
//! * [`construct_h1`] keeps the frontier small: among placed vertices that
//!   still have unplaced neighbours it takes those with the fewest, then
//!   appends the unplaced vertex adjacent to most of them, preferring one with
//!   few unplaced neighbours of its own. Remaining ties are broken at random.
//! * [`construct_h2`] repeatedly picks the vertex with the fewest (but at
//!   least one) unplaced neighbours and appends all of those neighbours,
//!   lowest remaining degree first, so adjacent vertices land close together.
//! * [`construct_h3`] is `h2` with the pivot taken as the leftmost placed
//!   vertex that still has unplaced neighbours.
//! * [`random_layout`] is a uniform permutation, used as a baseline.
//!
//! Low-degree vertices are placed first throughout, since a vertex contributes
//! to every cut between its own position and its last neighbour's.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Layout, Vertex};
use crate::random::{derive_seed, RandomSource};
use crate::separation::vertex_separation;

/// Identifier of a construction procedure, as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heuristic {
    H1,
    H2,
    H3,
    Random,
}

impl Heuristic {
    pub const ALL: [Heuristic; 4] = [
        Heuristic::H1,
        Heuristic::H2,
        Heuristic::H3,
        Heuristic::Random,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Heuristic::H1 => "h1",
            Heuristic::H2 => "h2",
            Heuristic::H3 => "h3",
            Heuristic::Random => "random",
        }
    }

    pub fn construct(self, g: &Graph, rng: &mut RandomSource) -> Layout {
        match self {
            Heuristic::H1 => construct_h1(g, rng),
            Heuristic::H2 => construct_h2(g, rng),
            Heuristic::H3 => construct_h3(g, rng),
            Heuristic::Random => random_layout(g, rng),
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Heuristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "h1" => Ok(Heuristic::H1),
            "h2" => Ok(Heuristic::H2),
            "h3" => Ok(Heuristic::H3),
            "random" => Ok(Heuristic::Random),
            _ => Err(Error::UnknownHeuristic(s.to_string())),
        }
    }
}

/// Working state of a layout under construction.
#[derive(Clone, Debug)]
pub struct PartialLayoutState<'g> {
    graph: &'g Graph,
    layout: Vec<Vertex>,
    placed: Vec<bool>,
    /// Unplaced neighbours per vertex, indexed by `vertex - 1`.
    remaining_degree: Vec<usize>,
}

impl<'g> PartialLayoutState<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        PartialLayoutState {
            graph,
            layout: Vec::with_capacity(graph.n()),
            placed: vec![false; graph.n()],
            remaining_degree: graph.degrees(),
        }
    }

    pub fn layout(&self) -> &[Vertex] {
        &self.layout
    }

    pub fn is_placed(&self, v: Vertex) -> bool {
        self.placed[v - 1]
    }

    pub fn remaining_degree(&self, v: Vertex) -> usize {
        self.remaining_degree[v - 1]
    }

    pub fn is_complete(&self) -> bool {
        self.layout.len() == self.graph.n()
    }

    pub fn unvisited(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.vertices().filter(|&v| !self.placed[v - 1])
    }

    /// Appends `v` and updates the remaining degrees of its neighbours.
    pub fn place(&mut self, v: Vertex) {
        debug_assert!(!self.placed[v - 1], "vertex {v} placed twice");
        self.placed[v - 1] = true;
        self.layout.push(v);
        for &w in self.graph.neighbors(v) {
            self.remaining_degree[w - 1] -= 1;
        }
        #[cfg(debug_assertions)]
        if self.graph.n() <= 64 {
            self.assert_consistent();
        }
    }

    /// Panics if the incremental bookkeeping disagrees with a recount.
    pub fn assert_consistent(&self) {
        let mut seen = vec![false; self.graph.n()];
        for &v in &self.layout {
            assert!(self.placed[v - 1] && !seen[v - 1]);
            seen[v - 1] = true;
        }
        assert_eq!(seen, self.placed, "layout and unvisited must partition V");
        for w in self.graph.vertices() {
            let recount = self
                .graph
                .neighbors(w)
                .iter()
                .filter(|&&x| !self.placed[x - 1])
                .count();
            assert_eq!(
                self.remaining_degree[w - 1],
                recount,
                "remaining degree of {w}"
            );
        }
    }

    fn into_layout(self) -> Layout {
        Layout::from_sequence(self.layout).expect("heuristics place every vertex exactly once")
    }
}

/// Heuristic `h1`.
///
/// The first vertex is a uniformly random minimum-degree vertex. Each later
/// step computes
///
/// * `S`: placed vertices with the fewest unplaced neighbours, among those
///   that have at least one,
/// * `P`: unplaced vertices adjacent to the most members of `S` (all unplaced
///   vertices when `S` is empty, i.e. the placed part has no open edges),
/// * `Q`: members of `P` with the fewest unplaced neighbours,
///
/// and appends a uniformly random member of `Q`.
pub fn construct_h1(g: &Graph, rng: &mut RandomSource) -> Layout {
    construct_h1_observed(g, rng, |_, _| {})
}

/// `construct_h1` with a callback seeing the state just before each choice
/// is placed.
pub(crate) fn construct_h1_observed<F>(g: &Graph, rng: &mut RandomSource, mut observe: F) -> Layout
where
    F: FnMut(&PartialLayoutState<'_>, Vertex),
{
    let n = g.n();
    let mut state = PartialLayoutState::new(g);

    let min_degree = g
        .vertices()
        .map(|v| g.neighbors(v).len())
        .min()
        .unwrap_or(0);
    let starts: Vec<Vertex> = g
        .vertices()
        .filter(|&v| g.neighbors(v).len() == min_degree)
        .collect();
    let first = rng.choose(&starts);
    observe(&state, first);
    state.place(first);

    // Placed vertices with at least one unplaced neighbour, and the index of
    // each in `open` (usize::MAX when absent).
    let mut open: Vec<Vertex> = Vec::new();
    let mut open_index = vec![usize::MAX; n];
    let mut touch_count = vec![0usize; n];
    let mut touched: Vec<Vertex> = Vec::new();
    let mut candidates: Vec<Vertex> = Vec::new();

    let mut refresh_open = |state: &PartialLayoutState<'_>, v: Vertex, open: &mut Vec<Vertex>| {
        if state.remaining_degree(v) > 0 {
            open_index[v - 1] = open.len();
            open.push(v);
        }
        for &w in g.neighbors(v) {
            if state.is_placed(w)
                && state.remaining_degree(w) == 0
                && open_index[w - 1] != usize::MAX
            {
                let idx = open_index[w - 1];
                open.swap_remove(idx);
                if let Some(&moved) = open.get(idx) {
                    open_index[moved - 1] = idx;
                }
                open_index[w - 1] = usize::MAX;
            }
        }
    };
    refresh_open(&state, first, &mut open);

    while !state.is_complete() {
        candidates.clear();
        let least_open = open.iter().map(|&v| state.remaining_degree(v)).min();
        match least_open {
            Some(least) => {
                for &s in open.iter().filter(|&&s| state.remaining_degree(s) == least) {
                    for &w in g.neighbors(s) {
                        if !state.is_placed(w) {
                            if touch_count[w - 1] == 0 {
                                touched.push(w);
                            }
                            touch_count[w - 1] += 1;
                        }
                    }
                }
                let most = touched
                    .iter()
                    .map(|&w| touch_count[w - 1])
                    .max()
                    .unwrap_or(0);
                candidates.extend(
                    touched
                        .iter()
                        .copied()
                        .filter(|&w| touch_count[w - 1] == most),
                );
                for &w in &touched {
                    touch_count[w - 1] = 0;
                }
                touched.clear();
            }
            None => candidates.extend(state.unvisited()),
        }

        let fewest = candidates
            .iter()
            .map(|&w| state.remaining_degree(w))
            .min()
            .expect("an incomplete layout has unplaced vertices");
        candidates.retain(|&w| state.remaining_degree(w) == fewest);
        candidates.sort_unstable();
        let v = rng.choose(&candidates);
        observe(&state, v);
        state.place(v);
        refresh_open(&state, v, &mut open);
    }
    state.into_layout()
}

/// Which pivot `h2`/`h3` expand at each step.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Pivot {
    LeastRemainingDegree,
    LeftmostOpen,
}

/// Heuristic `h2`.
///
/// Starts from the minimum-degree vertex followed by its neighbours in
/// ascending degree. Then, until every vertex is placed: pick the vertex
/// (placed or not) with the least non-zero number of unplaced neighbours,
/// append it if unplaced, and append its unplaced neighbours in ascending
/// order of their unplaced-neighbour counts. Ties go to the smallest vertex.
/// When no vertex has unplaced neighbours left, the unplaced vertex of least
/// degree is appended and the sweep continues from there.
///
/// Deterministic; `rng` is accepted for a uniform interface but not drawn from.
pub fn construct_h2(g: &Graph, _rng: &mut RandomSource) -> Layout {
    sweep(g, Pivot::LeastRemainingDegree)
}

/// Heuristic `h3`.
///
/// Same sweep as [`construct_h2`], except the pivot is the leftmost placed
/// vertex that still has unplaced neighbours. When no placed vertex has any,
/// the `h2` rule applies.
pub fn construct_h3(g: &Graph, _rng: &mut RandomSource) -> Layout {
    sweep(g, Pivot::LeftmostOpen)
}

fn sweep(g: &Graph, pivot: Pivot) -> Layout {
    let degree = g.degrees();
    let mut state = PartialLayoutState::new(g);

    let start = g
        .vertices()
        .min_by_key(|&v| (degree[v - 1], v))
        .expect("graphs have at least one vertex");
    state.place(start);
    let mut batch: Vec<Vertex> = g.neighbors(start).to_vec();
    batch.sort_by_key(|&w| (degree[w - 1], w));
    for &w in &batch {
        state.place(w);
    }

    // Positions before `cursor` have no unplaced neighbours left.
    let mut cursor = 0;
    while !state.is_complete() {
        let chosen = match pivot {
            Pivot::LeftmostOpen => {
                while cursor < state.layout().len()
                    && state.remaining_degree(state.layout()[cursor]) == 0
                {
                    cursor += 1;
                }
                state
                    .layout()
                    .get(cursor)
                    .copied()
                    .or_else(|| least_open_vertex(&state))
            }
            Pivot::LeastRemainingDegree => least_open_vertex(&state),
        };

        let Some(v) = chosen else {
            // Every placed vertex is closed and nothing unplaced has edges
            // into the unplaced part: restart from a low-degree vertex.
            let next = state
                .unvisited()
                .min_by_key(|&w| (degree[w - 1], w))
                .expect("layout is incomplete");
            state.place(next);
            continue;
        };

        if !state.is_placed(v) {
            state.place(v);
        }
        batch.clear();
        batch.extend(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !state.is_placed(w)),
        );
        batch.sort_by_key(|&w| (state.remaining_degree(w), w));
        for &w in &batch {
            state.place(w);
        }
    }
    state.into_layout()
}

/// The smallest vertex among those with the least non-zero remaining degree.
fn least_open_vertex(state: &PartialLayoutState<'_>) -> Option<Vertex> {
    state
        .graph
        .vertices()
        .filter(|&w| state.remaining_degree(w) > 0)
        .min_by_key(|&w| (state.remaining_degree(w), w))
}

/// A uniformly random layout.
pub fn random_layout(g: &Graph, rng: &mut RandomSource) -> Layout {
    Layout::from_sequence(rng.permutation(g.n())).expect("permutation of 1..=n")
}

/// Outcome of repeating a heuristic with independent seeds.
#[derive(Clone, Debug, PartialEq)]
pub struct BestOfRuns {
    pub layout: Layout,
    pub vs: usize,
    /// Index of the run that produced `layout`.
    pub best_run: usize,
    /// Vertex separation of every run, in run order.
    pub run_vs: Vec<usize>,
}

impl BestOfRuns {
    pub fn mean_vs(&self) -> f64 {
        self.run_vs.iter().sum::<usize>() as f64 / self.run_vs.len() as f64
    }
}

/// Seed of run `index` under `master_seed`.
pub fn run_seed(master_seed: u64, index: usize) -> u64 {
    derive_seed(master_seed, index as u64)
}

/// Runs `heuristic` `runs` times, run `i` seeded with
/// [`run_seed`]`(master_seed, i)`, and keeps the layout of least vertex
/// separation. Ties keep the earliest run. Runs execute in parallel.
pub fn best_of_runs(
    g: &Graph,
    heuristic: Heuristic,
    runs: usize,
    master_seed: u64,
) -> Result<BestOfRuns> {
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    let results: Vec<(Layout, usize)> = (0..runs)
        .into_par_iter()
        .map(|i| {
            let mut rng = RandomSource::new(run_seed(master_seed, i));
            let layout = heuristic.construct(g, &mut rng);
            let vs = vertex_separation(g, &layout).expect("layout built for this graph");
            (layout, vs)
        })
        .collect();
    let run_vs: Vec<usize> = results.iter().map(|(_, vs)| *vs).collect();
    let (best_run, _) = run_vs
        .iter()
        .enumerate()
        .min_by_key(|&(i, &vs)| (vs, i))
        .expect("at least one run");
    let (layout, vs) = results.into_iter().nth(best_run).expect("index in range");
    Ok(BestOfRuns {
        layout,
        vs,
        best_run,
        run_vs,
    })
}

/// Like [`best_of_runs`] with the heuristic given by its command-line id.
pub fn best_of_runs_by_id(
    g: &Graph,
    heuristic: &str,
    runs: usize,
    master_seed: u64,
) -> Result<BestOfRuns> {
    best_of_runs(g, heuristic.parse()?, runs, master_seed)
}
