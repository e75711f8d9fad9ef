//! Block construction of a sparse `l`-vertex set.
//!
//! The ground set is cut into `floor(n/t)` consecutive intervals of width
//! `t`, with `t` the least width whose blocks hold at least `l` triples, and
//! all triples inside each interval are taken. Triples from different
//! blocks are disjoint, so no edge crosses blocks and every block induces a
//! complete copy of G(t,3,1).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bounds::{BoundEstimate, Direction, Source, Validity};
use crate::combinat::{binomial, choose3, rank_unchecked, unrank_unchecked, Rational};
use crate::error::{Error, Result};
use crate::graph::{count_induced_edges, for_each_neighbor_of, subset_to_json, Graph, VertexSubset};

/// Least `t` in `3..=n` with `C(t,3) * floor(n/t) >= l`.
pub fn select_block_width(n: usize, l: u64) -> Result<u64> {
    let total = binomial(n as u64, 3)?;
    if l > total {
        return Err(Error::SubsetTooLarge { l, count: total });
    }
    (3..=n as u64).find(|&t| choose3(t) * (n as u64 / t) >= l).ok_or(Error::SubsetTooLarge { l, count: total })
}

/// Block sizes and the untrimmed edge count, without enumerating vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFormula {
    pub t: u64,
    pub num_blocks: u64,
    pub raw_size: u64,
    pub raw_edges: u64,
}

pub fn block_formula(n: usize, l: u64) -> Result<BlockFormula> {
    let t = select_block_width(n, l)?;
    let num_blocks = n as u64 / t;
    Ok(BlockFormula { t, num_blocks, raw_size: num_blocks * choose3(t), raw_edges: num_blocks * Graph::block_edges(t) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub n: usize,
    pub l: u64,
    pub t: u64,
    pub num_blocks: u64,
    /// Inclusive element intervals `[start, end]`.
    pub blocks: Vec<(u16, u16)>,
    pub raw_size: u64,
    pub trimmed_set: VertexSubset,
    /// Edge count of the untrimmed union of blocks.
    pub predicted_edges: u64,
    /// Measured edge count of `trimmed_set`.
    pub actual_edges: u64,
}

#[derive(Serialize)]
pub struct PlanReport {
    pub n: usize,
    pub l: u64,
    pub t: u64,
    pub num_blocks: u64,
    pub blocks: Vec<[u16; 2]>,
    pub raw_size: u64,
    pub trimmed_size: u64,
    pub predicted_edges: u64,
    pub actual_edges: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trimmed_set: Option<serde_json::Value>,
}

impl ConstructionPlan {
    pub fn report(&self, with_set: bool) -> PlanReport {
        PlanReport {
            n: self.n,
            l: self.l,
            t: self.t,
            num_blocks: self.num_blocks,
            blocks: self.blocks.iter().map(|&(a, b)| [a, b]).collect(),
            raw_size: self.raw_size,
            trimmed_size: self.trimmed_set.len() as u64,
            predicted_edges: self.predicted_edges,
            actual_edges: self.actual_edges,
            trimmed_set: with_set
                .then(|| serde_json::from_str(&subset_to_json(&self.trimmed_set)).expect("valid json")),
        }
    }
}

/// Local triples of a width-`t` block, shifted by `offset`, as global ranks.
fn block_ranks(t: u64, offset: u16) -> Vec<usize> {
    (0..choose3(t))
        .map(|i| {
            let [a, b, c] = unrank_unchecked(i).elements();
            rank_unchecked(a + offset, b + offset, c + offset) as usize
        })
        .collect()
}

/// Removes `count` vertices from one block, always taking a vertex of
/// highest degree among what is left of the block, larger index on ties.
/// Returns the local indices removed.
fn trim_block(t: u64, count: usize) -> Vec<usize> {
    let size = choose3(t) as usize;
    let full_degree = 3 * crate::combinat::choose2(t.saturating_sub(3)) as usize;
    let mut degree = vec![full_degree; size];
    let mut alive = vec![true; size];
    let mut queue: BTreeSet<(usize, usize)> = (0..size).map(|i| (full_degree, i)).collect();
    let mut removed = Vec::with_capacity(count);
    while removed.len() < count {
        let (_, v) = queue.pop_last().expect("block has enough vertices");
        alive[v] = false;
        removed.push(v);
        for_each_neighbor_of(unrank_unchecked(v as u64).elements(), t as usize, |u| {
            if alive[u] {
                queue.remove(&(degree[u], u));
                degree[u] -= 1;
                queue.insert((degree[u], u));
            }
        });
    }
    removed
}

/// Builds the block set and trims it to exactly `l` vertices.
///
/// Excess vertices come out of the last block first; if the excess is
/// larger than a block, the next-to-last block is trimmed after it, and so
/// on. Removing vertices never adds edges, so the trimmed set has at most
/// `predicted_edges` edges.
pub fn build_construction(n: usize, l: u64) -> Result<ConstructionPlan> {
    let f = block_formula(n, l)?;
    let t = f.t;
    let blocks: Vec<(u16, u16)> = (0..f.num_blocks).map(|i| ((i * t + 1) as u16, ((i + 1) * t) as u16)).collect();
    let mut trimmed_set = VertexSubset::empty(n)?;
    let mut excess = (f.raw_size - l) as usize;
    let block_size = choose3(t) as usize;
    for (bi, &(start, _)) in blocks.iter().enumerate().rev() {
        let ranks = block_ranks(t, start - 1);
        let cut = excess.min(block_size);
        excess -= cut;
        let mut keep = vec![true; block_size];
        if cut == block_size {
            keep.fill(false);
        } else if cut > 0 {
            for local in trim_block(t, cut) {
                keep[local] = false;
            }
        }
        for (local, &r) in ranks.iter().enumerate() {
            if keep[local] {
                trimmed_set.insert(r);
            }
        }
        debug_assert!(bi > 0 || excess == 0);
    }
    let actual_edges = count_induced_edges(&trimmed_set);
    Ok(ConstructionPlan {
        n,
        l,
        t,
        num_blocks: f.num_blocks,
        blocks,
        raw_size: f.raw_size,
        trimmed_set,
        predicted_edges: f.raw_edges,
        actual_edges,
    })
}

/// The construction's upper bounds on the minimum: the exact untrimmed
/// block edge count, and the reference value `9 l^2 / (2n)`.
pub fn predicted_upper_bound(n: usize, l: u64) -> Result<(BoundEstimate, BoundEstimate)> {
    let f = block_formula(n, l)?;
    let exact = Rational::integer(f.raw_edges.into());
    let li = i128::from(l);
    let asym = Rational::new(9 * li * li, 2 * n as i128);
    Ok((
        BoundEstimate {
            value: exact.to_f64(),
            exact: Some(exact),
            direction: Direction::Upper,
            validity: Validity::ExactFiniteN,
            source: Source::T3_1,
            h_param: 0.0,
        },
        BoundEstimate {
            value: asym.to_f64(),
            exact: Some(asym),
            direction: Direction::Upper,
            validity: Validity::AsymptoticReference,
            source: Source::T3_1,
            h_param: 0.0,
        },
    ))
}
