use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::solver::{SolveResult, Status};

/// Default cap on the number of subsets [`brute_force_r`] will enumerate.
/// Covers every `l` for `n <= 6` and `l <= 8` or `l >= 27` for `n = 7`.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 25_000_000;

/// `C(n, k)`, saturating at `u128::MAX`. Each partial product
/// `C(n, i+1) = C(n, i) (n - i) / (i + 1)` is exact, so the division never
/// truncates; once the product overflows the true value is huge anyway.
fn choose_u128(n: u128, k: u128) -> u128 {
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul(n - i) {
            Some(p) => acc = p / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

struct Enumerator<'g> {
    g: &'g Graph,
    k: usize,
    chosen: Vec<usize>,
    best: u64,
    best_set: Vec<usize>,
    visited: u64,
}

impl Enumerator<'_> {
    fn rec(&mut self, start: usize, edges: u64) {
        self.visited += 1;
        if self.chosen.len() == self.k {
            if edges < self.best {
                self.best = edges;
                self.best_set = self.chosen.clone();
            }
            return;
        }
        let need = self.k - self.chosen.len();
        for v in start..=(self.g.vertex_count() - need) {
            let added = self.chosen.iter().filter(|&&u| self.g.is_adjacent(u, v)).count() as u64;
            self.chosen.push(v);
            self.rec(v + 1, edges + added);
            self.chosen.pop();
        }
    }
}

/// Exhaustive minimum over all `l`-subsets. When `l` is more than half the
/// vertices the complements are enumerated instead. Refuses when the number
/// of subsets exceeds `budget`.
pub fn brute_force_r(n: usize, l: u64, budget: u128) -> Result<SolveResult> {
    let start = Instant::now();
    let g = Graph::new(n)?;
    let count = g.vertex_count();
    if l as usize > count {
        return Err(Error::SubsetTooLarge { l, count: count as u64 });
    }
    let complement = 2 * l as usize > count;
    let k = if complement { count - l as usize } else { l as usize };
    let estimate = choose_u128(count as u128, k as u128);
    if estimate > budget {
        return Err(Error::OverBudget { estimate, budget });
    }
    let mut e =
        Enumerator { g: &g, k, chosen: Vec::with_capacity(k), best: u64::MAX, best_set: Vec::new(), visited: 0 };
    e.rec(0, 0);
    let side = VertexSubset::from_indices(n, e.best_set)?;
    let (witness, min_edges) =
        if complement { (side.complement(), g.edge_count() - g.degree() * k as u64 + e.best) } else { (side, e.best) };
    Ok(SolveResult {
        n,
        l,
        min_edges,
        witness,
        status: Status::Oracle,
        nodes_explored: e.visited,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_count_saturates() {
        assert_eq!(choose_u128(35, 8), 23_535_820);
        assert_eq!(choose_u128(220, 100), u128::MAX);
    }
    use crate::graph::count_induced_edges;

    #[test]
    fn n5_values() {
        for l in 0..=4 {
            assert_eq!(brute_force_r(5, l, DEFAULT_ENUMERATION_BUDGET).unwrap().min_edges, 0);
        }
        assert_eq!(brute_force_r(5, 10, DEFAULT_ENUMERATION_BUDGET).unwrap().min_edges, 15);
        let r = brute_force_r(5, 5, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(r.min_edges, 2);
        assert_eq!(count_induced_edges(&r.witness), 2);
        assert_eq!(r.witness.len(), 5);
    }

    #[test]
    fn refuses_large_enumerations() {
        let err = brute_force_r(7, 12, DEFAULT_ENUMERATION_BUDGET).unwrap_err();
        assert!(matches!(err, Error::OverBudget { estimate, .. } if estimate == 834_451_800));
        assert!(brute_force_r(7, 8, DEFAULT_ENUMERATION_BUDGET).is_ok());
        assert!(brute_force_r(7, 27, DEFAULT_ENUMERATION_BUDGET).is_ok());
        assert!(brute_force_r(6, 11, 10).is_err());
    }
}
