//! Minimum induced edges of `l`-vertex subsets in G(n,3,1), the graph on the
//! 3-element subsets of `{1..n}` where two triples are adjacent when they
//! share exactly one element.
//!
//! * [`graph`]: vertices, adjacency, edge counting, subset files.
//! * [`independence`]: independence number and independent-family structure.
//! * [`construction`]: the block construction (an upper witness).
//! * [`bounds`]: closed-form lower/upper bounds and regime classification.
//! * [`solver`]: exact and heuristic computation of `r(l)`.
//! * [`cli`]: the `g31` command-line front end.

pub mod bounds;
pub mod cli;
pub mod combinat;
pub mod construction;
mod error;
pub mod graph;
pub mod independence;
pub mod solver;

pub use combinat::{binomial, c_fraction, rank_triple, unrank_triple, Rational};
pub use error::{Error, Result};
pub use graph::{
    adjacent, complement_accounting, count_induced_edges, graph_stats, Graph, GraphParams, TripleVertex, VertexSubset,
};
