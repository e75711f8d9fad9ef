//! Steepest-descent 1-swap local search.
//!
//! A move removes one member `u` and adds one non-member `v`; its effect on
//! the edge count is `hits[v] - hits[u] - [u ~ v]`, where `hits[x]` counts
//! members adjacent to `x`. Each step applies the most negative move, ties
//! going to the smallest `u` and then the smallest `v`. Descent stops at
//! the first local minimum.
//!
//! Random starts use `ChaCha8Rng::seed_from_u64(seed + restart)` and
//! `rand::seq::index::sample` to draw `l` distinct indices.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construction::build_construction;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::solver::{SearchConfig, SolveResult, Status};

struct Descent<'g> {
    g: &'g Graph,
    member: Vec<bool>,
    hits: Vec<u32>,
    edges: u64,
    steps: u64,
}

impl<'g> Descent<'g> {
    fn new(g: &'g Graph, start: &VertexSubset) -> Self {
        let mut d =
            Descent { g, member: vec![false; g.vertex_count()], hits: vec![0; g.vertex_count()], edges: 0, steps: 0 };
        for v in start.iter() {
            d.add(v);
        }
        d
    }

    fn add(&mut self, v: usize) {
        self.edges += u64::from(self.hits[v]);
        self.member[v] = true;
        let hits = &mut self.hits;
        self.g.for_each_neighbor(v, |j| hits[j] += 1);
    }

    fn remove(&mut self, u: usize) {
        self.member[u] = false;
        let hits = &mut self.hits;
        self.g.for_each_neighbor(u, |j| hits[j] -= 1);
        self.edges -= u64::from(self.hits[u]);
    }

    /// Smallest `v` with `hits[v] == h`, outside the set, adjacent to `u`.
    fn min_neighbor_with(&self, u: usize, h: u32) -> Option<usize> {
        let mut best = None;
        self.g.for_each_neighbor(u, |j| {
            if !self.member[j] && self.hits[j] == h && best.is_none_or(|b| j < b) {
                best = Some(j);
            }
        });
        best
    }

    /// The steepest improving swap, if any.
    fn best_move(&self) -> Option<(usize, usize)> {
        let count = self.member.len();
        let (mut a, mut b) = (None::<u32>, None::<u32>);
        for x in 0..count {
            let h = self.hits[x];
            if self.member[x] {
                a = Some(a.map_or(h, |m| m.max(h)));
            } else {
                b = Some(b.map_or(h, |m| m.min(h)));
            }
        }
        let (a, b) = (a?, b?);
        // every move changes the count by at least b - a - 1
        if b > a {
            return None;
        }
        // delta b - a - 1: u at a, v at b, adjacent
        for u in (0..count).filter(|&u| self.member[u] && self.hits[u] == a) {
            if let Some(v) = self.min_neighbor_with(u, b) {
                return Some((u, v));
            }
        }
        if b == a {
            return None;
        }
        // delta b - a < 0
        let first_free_at_b =
            |u: usize| (0..count).find(|&v| !self.member[v] && self.hits[v] == b && !self.g.is_adjacent(u, v));
        for u in (0..count).filter(|&u| self.member[u] && (self.hits[u] == a || self.hits[u] + 1 == a)) {
            let cand = if self.hits[u] == a {
                match (first_free_at_b(u), self.min_neighbor_with(u, b + 1)) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                }
            } else {
                self.min_neighbor_with(u, b)
            };
            if let Some(v) = cand {
                return Some((u, v));
            }
        }
        None
    }

    fn run(&mut self) {
        while let Some((u, v)) = self.best_move() {
            self.remove(u);
            self.add(v);
            self.steps += 1;
        }
    }

    fn members(&self, n: usize) -> VertexSubset {
        VertexSubset::from_indices(n, (0..self.member.len()).filter(|&i| self.member[i])).expect("in range")
    }
}

/// Upper witness for `r(l)` by local search from the block construction and
/// `restarts - 1` random starts. The result depends only on `seed` and
/// `restarts`: the best value wins, ties go to the lexicographically
/// smallest witness.
pub fn local_search_r(n: usize, l: u64, cfg: &SearchConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let g = Graph::new(n)?;
    let count = g.vertex_count();
    if l as usize > count {
        return Err(Error::SubsetTooLarge { l, count: count as u64 });
    }
    let construction = build_construction(n, l)?.trimmed_set;
    let restarts = cfg.restarts.max(1);
    let descend = |r: usize| -> (u64, Vec<usize>, u64) {
        let init = if r == 0 {
            construction.clone()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(r as u64));
            let picks = rand::seq::index::sample(&mut rng, count, l as usize);
            VertexSubset::from_indices(n, picks).expect("in range")
        };
        let mut d = Descent::new(&g, &init);
        d.run();
        (d.edges, d.members(n).to_indices(), d.steps)
    };
    let runs: Vec<(u64, Vec<usize>, u64)> = if cfg.thread_count > 1 {
        cfg.pool().install(|| (0..restarts).into_par_iter().map(descend).collect())
    } else {
        (0..restarts).map(descend).collect()
    };
    let steps = runs.iter().map(|r| r.2).sum();
    let (value, set, _) = runs.into_iter().min_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1))).expect("one run");
    Ok(SolveResult {
        n,
        l,
        min_edges: value,
        witness: VertexSubset::from_indices(n, set)?,
        status: Status::HeuristicUpper,
        nodes_explored: steps,
        elapsed: start.elapsed(),
    })
}
