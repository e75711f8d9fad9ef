//! Computing `r(l)`, the fewest edges any `l` vertices of G(n,3,1) induce.
//!
//! * [`brute_force_r`] enumerates every `l`-subset (or every complement) and
//!   serves as the oracle for tiny graphs.
//! * [`branch_and_bound_r`] is exact for graphs with packed adjacency rows.
//! * [`local_search_r`] gives upper witnesses at larger `n`.
//!
//! Because the graph is regular, `|E(W)| = |E| - d |W1| + |E(W1)|` for the
//! complement `W1`, so the exact methods only ever search the smaller side.

mod bnb;
mod brute;
mod local;

pub use bnb::branch_and_bound_r;
pub use brute::{brute_force_r, DEFAULT_ENUMERATION_BUDGET};
pub use local::local_search_r;

use std::time::Duration;

use serde::Serialize;

use crate::graph::VertexSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ProvenOptimal,
    HeuristicUpper,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub n: usize,
    pub l: u64,
    pub min_edges: u64,
    pub witness: VertexSubset,
    pub status: Status,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub l: u64,
    pub min_edges: u64,
    pub status: Status,
    pub nodes_explored: u64,
    pub elapsed_ms: f64,
    pub witness: Vec<[u16; 3]>,
}

impl SolveResult {
    pub fn report(&self) -> SolveReport {
        SolveReport {
            n: self.n,
            l: self.l,
            min_edges: self.min_edges,
            status: self.status,
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
            witness: self.witness.triples().map(|t| t.elements()).collect(),
        }
    }
}

/// Budgets and knobs shared by the search routines.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Branch-and-bound nodes before giving up; `Some(0)` returns the
    /// starting incumbent.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub thread_count: usize,
    pub seed: u64,
    /// Local search descents: one from the block construction plus
    /// `restarts - 1` random starts.
    pub restarts: usize,
    /// Fix the first chosen vertex to `{1,2,3}`. Sound because the graph is
    /// vertex-transitive.
    pub root_symmetry: bool,
    /// Improve the branch-and-bound incumbent with a local search descent
    /// before searching.
    pub warm_start: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            thread_count: 1,
            seed: 0,
            restarts: 1,
            root_symmetry: true,
            warm_start: true,
        }
    }
}

impl SearchConfig {
    pub(crate) fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new().num_threads(self.thread_count.max(1)).build().expect("thread pool")
    }
}
