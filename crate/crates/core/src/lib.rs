//! Vertex separation of linear graph layouts.
//!
//! The vertex separation of a layout is the largest number of vertices that,
//! at some cut of the layout, sit left of the cut while having a neighbour
//! right of it. This crate evaluates it, builds layouts with greedy
//! construction heuristics, solves small instances exactly and runs
//! reproducible benchmarks over generated or parsed instances.

pub mod bench;
pub mod error;
pub mod exact;
pub mod graph;
pub mod heuristics;
pub mod instances;
pub mod random;
pub mod separation;

pub use error::{Error, Result};
pub use graph::{build_graph, build_layout, Graph, Layout, Vertex};
pub use heuristics::{
    best_of_runs, construct_h1, construct_h2, construct_h3, random_layout, BestOfRuns, Heuristic,
};
pub use random::RandomSource;
pub use separation::{cut_profile, cut_value, vertex_separation, CutProfile};
