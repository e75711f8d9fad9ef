//! Depth-first branch and bound over vertex indices in colex order.
//!
//! Completion bound: the vertices are partitioned once into cliques of G
//! (greedily, in index order). Choosing `j` more vertices from one clique
//! costs at least the `j` smallest counts of already-chosen neighbours plus
//! `C(j,2)` edges among themselves. These per-clique costs are convex in
//! `j`, so the cheapest way to place the remaining vertices is the sum of
//! the smallest marginal increments over all cliques. Edges between
//! different cliques are ignored, which keeps the bound admissible.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::construction::build_construction;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::solver::{local_search_r, SearchConfig, SolveResult, Status};

fn clique_partition(g: &Graph) -> Vec<Vec<usize>> {
    let count = g.vertex_count();
    let mut assigned = vec![false; count];
    let mut cliques = Vec::new();
    for v in 0..count {
        if assigned[v] {
            continue;
        }
        let mut q = vec![v];
        assigned[v] = true;
        for (u, taken) in assigned.iter_mut().enumerate().skip(v + 1) {
            if !*taken && q.iter().all(|&w| g.is_adjacent(u, w)) {
                q.push(u);
                *taken = true;
            }
        }
        cliques.push(q);
    }
    cliques
}

struct Shared<'a> {
    g: &'a Graph,
    k: usize,
    cliques: Vec<Vec<usize>>,
    best: AtomicU64,
    best_set: Mutex<(u64, Vec<usize>)>,
    nodes: AtomicU64,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    aborted: AtomicBool,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        let done = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.node_budget {
            if done > b {
                self.aborted.store(true, Ordering::Relaxed);
            }
        }
        if done.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted.store(true, Ordering::Relaxed);
                }
            }
        }
        self.aborted.load(Ordering::Relaxed)
    }

    fn offer(&self, value: u64, set: &[usize]) {
        self.best.fetch_min(value, Ordering::SeqCst);
        let mut guard = self.best_set.lock().unwrap();
        if value < guard.0 || (value == guard.0 && set < &guard.1[..]) {
            *guard = (value, set.to_vec());
        }
    }
}

/// Per-worker search state.
struct Worker<'s, 'a> {
    s: &'s Shared<'a>,
    chosen: Vec<usize>,
    /// Chosen neighbours of every vertex.
    hits: Vec<u32>,
    edges: u64,
    scratch: Vec<u64>,
    incs: Vec<u64>,
}

impl<'s, 'a> Worker<'s, 'a> {
    fn new(s: &'s Shared<'a>) -> Self {
        Worker {
            s,
            chosen: Vec::new(),
            hits: vec![0; s.g.vertex_count()],
            edges: 0,
            scratch: Vec::new(),
            incs: Vec::new(),
        }
    }

    fn push(&mut self, v: usize) {
        self.edges += u64::from(self.hits[v]);
        self.chosen.push(v);
        let row = self.s.g.row(v).expect("rows");
        for (wi, &word) in row.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                self.hits[wi * 64 + w.trailing_zeros() as usize] += 1;
                w &= w - 1;
            }
        }
    }

    fn pop(&mut self) {
        let v = self.chosen.pop().expect("non-empty");
        let row = self.s.g.row(v).expect("rows");
        for (wi, &word) in row.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                self.hits[wi * 64 + w.trailing_zeros() as usize] -= 1;
                w &= w - 1;
            }
        }
        self.edges -= u64::from(self.hits[v]);
    }

    /// Lower bound on the edges added by `need` more vertices from `from..`.
    fn completion_bound(&mut self, from: usize, need: usize) -> u64 {
        if need == 0 {
            return 0;
        }
        self.incs.clear();
        for q in &self.s.cliques {
            self.scratch.clear();
            self.scratch.extend(q.iter().filter(|&&v| v >= from).map(|&v| u64::from(self.hits[v])));
            self.scratch.sort_unstable();
            for (j, &h) in self.scratch.iter().enumerate() {
                self.incs.push(h + j as u64);
            }
        }
        if self.incs.len() < need {
            return u64::MAX / 4;
        }
        self.incs.select_nth_unstable(need - 1);
        self.incs[..need].iter().sum()
    }

    /// Minimisation: prune when the bound reaches the shared incumbent.
    fn minimize(&mut self, start: usize) {
        if self.s.tick() {
            return;
        }
        let need = self.s.k - self.chosen.len();
        if need == 0 {
            if self.edges < self.s.best.load(Ordering::SeqCst) {
                let set = self.chosen.clone();
                self.s.offer(self.edges, &set);
            }
            return;
        }
        let count = self.s.g.vertex_count();
        for v in start..=(count - need) {
            let lb = self.edges.saturating_add(self.completion_bound(v, need));
            if lb >= self.s.best.load(Ordering::Relaxed) {
                return;
            }
            self.push(v);
            self.minimize(v + 1);
            self.pop();
            if self.s.aborted.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    /// First set in lexicographic order with at most `target` edges.
    fn first_within(&mut self, start: usize, target: u64) -> bool {
        if self.s.tick() {
            return false;
        }
        let need = self.s.k - self.chosen.len();
        if need == 0 {
            return self.edges <= target;
        }
        let count = self.s.g.vertex_count();
        for v in start..=(count - need) {
            if self.edges.saturating_add(self.completion_bound(v, need)) > target {
                return false;
            }
            self.push(v);
            if self.first_within(v + 1, target) {
                return true;
            }
            self.pop();
            if self.s.aborted.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }
}

/// Exact `r(l)` by branch and bound. Requires packed adjacency rows
/// (`C(n,3) <= 4096`).
///
/// The incumbent starts from the block construction (optionally improved by
/// one local-search descent). With budgets exhausted the best set found is
/// returned as `HeuristicUpper`. A completed search reports the
/// lexicographically smallest optimal set on the searched side, so the
/// witness does not depend on the thread count.
pub fn branch_and_bound_r(n: usize, l: u64, cfg: &SearchConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let g = Graph::new(n)?;
    if !g.has_rows() {
        return Err(Error::GroundSet { n, reason: "branch and bound needs C(n,3) <= 4096" });
    }
    let count = g.vertex_count();
    if l as usize > count {
        return Err(Error::SubsetTooLarge { l, count: count as u64 });
    }
    let complement = 2 * l as usize > count;
    let k = if complement { count - l as usize } else { l as usize };
    // edges of W = offset + edges of the searched side
    let (base, minus) = if complement { (g.edge_count(), g.degree() * k as u64) } else { (0, 0) };
    let to_side = |w: &VertexSubset| if complement { w.complement() } else { w.clone() };

    let mut incumbent = build_construction(n, l)?.trimmed_set;
    if cfg.warm_start && cfg.node_budget != Some(0) {
        let warm = local_search_r(n, l, &SearchConfig { restarts: 1, thread_count: 1, ..cfg.clone() })?;
        incumbent = warm.witness;
    }
    let inc_side = to_side(&incumbent);
    let inc_value = crate::graph::count_induced_edges(&inc_side);

    let shared = Shared {
        g: &g,
        k,
        cliques: clique_partition(&g),
        best: AtomicU64::new(inc_value),
        best_set: Mutex::new((inc_value, inc_side.to_indices())),
        nodes: AtomicU64::new(0),
        node_budget: cfg.node_budget,
        deadline: cfg.time_budget.map(|b| start + b),
        aborted: AtomicBool::new(cfg.node_budget == Some(0)),
    };

    // Split into independent subtrees by the first two chosen vertices.
    let first: Vec<usize> = if cfg.root_symmetry { vec![0] } else { (0..=count.saturating_sub(k)).collect() };
    let mut tasks: Vec<Vec<usize>> = Vec::new();
    if k == 0 {
        tasks.push(Vec::new());
    } else {
        for &a in first.iter().filter(|&&a| a + k <= count) {
            if k == 1 {
                tasks.push(vec![a]);
            } else {
                tasks.extend(((a + 1)..=(count - k + 1)).map(|b| vec![a, b]));
            }
        }
    }
    let run = |prefix: &Vec<usize>| {
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        let mut w = Worker::new(&shared);
        for &v in prefix {
            w.push(v);
        }
        let next = prefix.last().map_or(0, |&v| v + 1);
        if k == prefix.len()
            || w.edges + w.completion_bound(next, k - prefix.len()) < shared.best.load(Ordering::Relaxed)
        {
            w.minimize(next);
        }
    };
    if cfg.thread_count > 1 {
        cfg.pool().install(|| tasks.par_iter().for_each(run));
    } else {
        tasks.iter().for_each(run);
    }

    let aborted = shared.aborted.load(Ordering::Relaxed);
    let (value, mut side_set) = shared.best_set.lock().unwrap().clone();
    if !aborted {
        // canonical witness: lexicographically first optimal set
        let mut w = Worker::new(&shared);
        if cfg.root_symmetry && k > 0 {
            w.push(0);
            if w.first_within(1, value) {
                side_set = w.chosen.clone();
            }
        } else if w.first_within(0, value) {
            side_set = w.chosen.clone();
        }
    }
    let aborted = shared.aborted.load(Ordering::Relaxed);
    let side = VertexSubset::from_indices(n, side_set)?;
    let witness = if complement { side.complement() } else { side };
    Ok(SolveResult {
        n,
        l,
        min_edges: base - minus + value,
        witness,
        status: if aborted { Status::HeuristicUpper } else { Status::ProvenOptimal },
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}
