//! The graph G(n,3,1): vertices are the 3-element subsets of `{1..n}`,
//! two of them adjacent when they share exactly one element.
//!
//! Vertices are addressed by colex rank. Neighbourhoods are generated
//! combinatorially, so nothing quadratic in `C(n,3)` is stored unless the
//! graph is small enough for packed adjacency rows (see [`Graph`]).

mod io;
mod subset;

pub use io::{
    read_subset_file, subset_from_hex, subset_from_json, subset_to_hex, subset_to_json, write_subset_file, SubsetFormat,
};
pub use subset::VertexSubset;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, choose2, choose3, rank_unchecked, unrank_unchecked, MAX_GROUND_SET};
use crate::error::{Error, Result};

/// Packed adjacency rows are built only up to this many vertices (n <= 30).
pub const MAX_DENSE_VERTICES: usize = 4096;

/// A 3-element subset of `{1..n}`, kept sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleVertex {
    elems: [u16; 3],
}

impl TripleVertex {
    /// Builds a triple from three distinct elements of `{1..n}` in any order.
    pub fn new(elems: [u16; 3], n: usize) -> Result<Self> {
        let mut e = elems;
        e.sort_unstable();
        if e[0] == 0 || e[0] == e[1] || e[1] == e[2] || e[2] as usize > n {
            return Err(Error::BadTriple(elems.iter().map(|&x| x.into()).collect(), n));
        }
        Ok(TripleVertex { elems: e })
    }

    pub(crate) fn from_sorted(elems: [u16; 3]) -> Self {
        debug_assert!(elems[0] >= 1 && elems[0] < elems[1] && elems[1] < elems[2]);
        TripleVertex { elems }
    }

    pub fn elements(&self) -> [u16; 3] {
        self.elems
    }

    /// Occupancy bitmask with bit `i - 1` set for each element `i`.
    /// Available while every element is at most 128.
    pub fn mask(&self) -> Option<u128> {
        if self.elems[2] > 128 {
            return None;
        }
        Some(self.elems.iter().fold(0u128, |m, &e| m | 1u128 << (e - 1)))
    }

    pub fn contains(&self, x: u16) -> bool {
        self.elems.contains(&x)
    }

    pub fn intersection_size(&self, other: &TripleVertex) -> usize {
        self.elems.iter().filter(|&&x| other.contains(x)).count()
    }

    pub fn rank(&self) -> u64 {
        let [a, b, c] = self.elems;
        rank_unchecked(a, b, c)
    }
}

/// True iff the triples share exactly one element.
pub fn adjacent(u: &TripleVertex, v: &TripleVertex) -> bool {
    u.intersection_size(v) == 1
}

/// Size constants of G(n,3,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphParams {
    pub n: usize,
    pub vertices: u64,
    pub degree: u64,
    pub edges: u64,
}

/// `|V| = C(n,3)`, `d = 3 C(n-3,2)`, `|E| = d |V| / 2`.
pub fn graph_stats(n: usize) -> Result<GraphParams> {
    if n < 3 {
        return Err(Error::GroundSet { n, reason: "need n >= 3" });
    }
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSet { n, reason: "exact counts are capped at n <= 1000" });
    }
    let vertices = binomial(n as u64, 3)?;
    let degree = 3 * binomial(n as u64 - 3, 2)?;
    let edges = (degree as u128 * vertices as u128 / 2) as u64;
    Ok(GraphParams { n, vertices, degree, edges })
}

/// Calls `f` with the rank of every neighbour of the vertex `{a,b,c}`.
pub(crate) fn for_each_neighbor_of(elems: [u16; 3], n: usize, mut f: impl FnMut(usize)) {
    let n = n as u16;
    for &keep in &elems {
        for y in 1..=n {
            if elems.contains(&y) {
                continue;
            }
            for z in (y + 1)..=n {
                if elems.contains(&z) {
                    continue;
                }
                let mut t = [keep, y, z];
                t.sort_unstable();
                f(rank_unchecked(t[0], t[1], t[2]) as usize);
            }
        }
    }
}

/// G(n,3,1) for a fixed `n`, with packed adjacency rows when small.
#[derive(Clone, Debug)]
pub struct Graph {
    params: GraphParams,
    words: usize,
    rows: Option<Vec<u64>>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        let params = graph_stats(n)?;
        let count = params.vertices as usize;
        let words = count.div_ceil(64);
        let rows = (count <= MAX_DENSE_VERTICES).then(|| {
            let mut rows = vec![0u64; words * count];
            for i in 0..count {
                let row = &mut rows[i * words..(i + 1) * words];
                for_each_neighbor_of(unrank_unchecked(i as u64).elements(), n, |j| {
                    row[j / 64] |= 1 << (j % 64);
                });
            }
            rows
        });
        Ok(Graph { params, words, rows })
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.params.vertices as usize
    }

    pub fn degree(&self) -> u64 {
        self.params.degree
    }

    pub fn edge_count(&self) -> u64 {
        self.params.edges
    }

    pub fn vertex(&self, index: usize) -> TripleVertex {
        unrank_unchecked(index as u64)
    }

    /// Number of `u64` words in a packed adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Packed adjacency row of `index`, if rows were materialized.
    pub fn row(&self, index: usize) -> Option<&[u64]> {
        self.rows.as_ref().map(|r| &r[index * self.words..(index + 1) * self.words])
    }

    pub fn has_rows(&self) -> bool {
        self.rows.is_some()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        match self.row(i) {
            Some(row) => row[j / 64] >> (j % 64) & 1 == 1,
            None => adjacent(&self.vertex(i), &self.vertex(j)),
        }
    }

    pub fn for_each_neighbor(&self, index: usize, f: impl FnMut(usize)) {
        for_each_neighbor_of(self.vertex(index).elements(), self.n(), f)
    }

    pub fn neighbors(&self, index: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.params.degree as usize);
        self.for_each_neighbor(index, |j| out.push(j));
        out
    }

    /// Edge count of a complete block: G(t,3,1) has `C(t,3) * 3 C(t-3,2) / 2` edges.
    pub fn block_edges(t: u64) -> u64 {
        choose3(t) * 3 * choose2(t.saturating_sub(3)) / 2
    }
}

/// Induced edges counted by walking neighbourhoods of the members.
fn direct_count(w: &VertexSubset) -> u64 {
    let members: Vec<usize> = w.iter().collect();
    let n = w.n();
    let count_from = |&i: &usize| {
        let mut c = 0u64;
        for_each_neighbor_of(unrank_unchecked(i as u64).elements(), n, |j| {
            if j > i && w.contains(j) {
                c += 1;
            }
        });
        c
    };
    if members.len() > 4096 {
        members.par_iter().map(count_from).sum()
    } else {
        members.iter().map(count_from).sum()
    }
}

/// Number of edges with both ends in `w`.
///
/// Sets larger than half the graph go through the complement:
/// `|E(W)| = |E| - d |W1| + |E(W1)|` with `W1` the complement of `W`.
pub fn count_induced_edges(w: &VertexSubset) -> u64 {
    if 2 * w.len() <= w.universe() {
        return direct_count(w);
    }
    let params = graph_stats(w.n()).expect("subset carries a valid n");
    let comp = w.complement();
    params.edges - params.degree * comp.len() as u64 + direct_count(&comp)
}

/// Counts used by the complement accounting identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCountReport {
    pub edges_within_w: u64,
    pub edges_within_complement: u64,
    pub edges_crossing: u64,
    pub total_edges: u64,
    pub degree: u64,
    pub complement_size: u64,
}

impl EdgeCountReport {
    /// `|E(W)| = |E| - |E(W1)| - |E1|`.
    pub fn identity_holds(&self) -> bool {
        self.edges_within_w + self.edges_within_complement + self.edges_crossing == self.total_edges
    }

    /// `|E(W1)| + |E1| <= d |W1|`.
    pub fn inequality_holds(&self) -> bool {
        self.edges_within_complement + self.edges_crossing <= self.degree * self.complement_size
    }
}

/// Splits the edge set into edges inside `w`, inside its complement, and
/// crossing. All three counts are measured independently.
pub fn complement_accounting(w: &VertexSubset) -> EdgeCountReport {
    let params = graph_stats(w.n()).expect("subset carries a valid n");
    let comp = w.complement();
    let n = w.n();
    let mut crossing = 0u64;
    for i in comp.iter() {
        for_each_neighbor_of(unrank_unchecked(i as u64).elements(), n, |j| {
            if w.contains(j) {
                crossing += 1;
            }
        });
    }
    EdgeCountReport {
        edges_within_w: direct_count(w),
        edges_within_complement: direct_count(&comp),
        edges_crossing: crossing,
        total_edges: params.edges,
        degree: params.degree,
        complement_size: comp.len() as u64,
    }
}
