//! Independent reference computations. Nothing here goes through the
//! library's adjacency rows or search code: triples are listed directly and
//! adjacency is decided by counting shared elements.

use g31::independence::{independence_number, is_independent};
use g31::solver::{branch_and_bound_r, brute_force_r, SearchConfig, DEFAULT_ENUMERATION_BUDGET};
use g31::{count_induced_edges, graph_stats, rank_triple, TripleVertex, VertexSubset};
use proptest::prelude::*;

/// All 3-subsets of {1..n} in colex order, i.e. ordered by (c, b, a).
fn triples(n: u16) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for c in 3..=n {
        for b in 2..c {
            for a in 1..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn shared(x: &[u16; 3], y: &[u16; 3]) -> usize {
    x.iter().filter(|e| y.contains(e)).count()
}

fn pairwise_edges(ts: &[[u16; 3]], members: &[usize]) -> u64 {
    let mut e = 0;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if shared(&ts[u], &ts[v]) == 1 {
                e += 1;
            }
        }
    }
    e
}

/// Neighbourhood bitmasks for graphs with at most 64 vertices.
fn masks(ts: &[[u16; 3]]) -> Vec<u64> {
    assert!(ts.len() <= 64);
    ts.iter()
        .map(|x| ts.iter().enumerate().filter(|(_, y)| shared(x, y) == 1).fold(0u64, |m, (j, _)| m | 1 << j))
        .collect()
}

/// Independence number by looking at every one of the 2^N subsets.
fn alpha_by_subsets(n: u16) -> usize {
    let ts = triples(n);
    let nb = masks(&ts);
    let count = ts.len();
    (0u64..1 << count)
        .filter(|&s| (0..count).all(|i| s >> i & 1 == 0 || nb[i] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Independence number by a plain include/exclude recursion with a
/// cardinality cut, for graphs too large to enumerate outright.
fn alpha_by_recursion(n: u16) -> usize {
    fn rec(nb: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        rec(nb, rest & !nb[v], size + 1, best);
        rec(nb, rest, size, best);
    }
    let ts = triples(n);
    let nb = masks(&ts);
    let mut best = 0;
    let all = if ts.len() == 64 { u64::MAX } else { (1u64 << ts.len()) - 1 };
    rec(&nb, all, 0, &mut best);
    best
}

/// Minimum induced edges over all l-subsets, by subset enumeration.
fn r_by_subsets(n: u16, l: u32) -> u64 {
    let ts = triples(n);
    let nb = masks(&ts);
    let count = ts.len();
    (0u64..1 << count)
        .filter(|s| s.count_ones() == l)
        .map(|s| (0..count).filter(|&i| s >> i & 1 == 1).map(|i| (nb[i] & s).count_ones() as u64).sum::<u64>() / 2)
        .min()
        .unwrap()
}

#[test]
fn colex_listing_matches_ranking() {
    for n in 3..=12u16 {
        for (i, t) in triples(n).iter().enumerate() {
            let v = TripleVertex::new(*t, n as usize).unwrap();
            assert_eq!(rank_triple(&v, n as usize).unwrap(), i as u64);
        }
    }
}

#[test]
fn handshake_matches_stats() {
    for n in 3..=14u16 {
        let ts = triples(n);
        let degree_sum: u64 = ts.iter().map(|x| ts.iter().filter(|y| shared(x, y) == 1).count() as u64).sum();
        let p = graph_stats(n as usize).unwrap();
        assert_eq!(degree_sum, 2 * p.edges, "n={n}");
        assert_eq!(ts.len() as u64, p.vertices);
    }
}

#[test]
fn alpha_from_exhaustive_subsets() {
    assert_eq!(alpha_by_subsets(5), 4);
    assert_eq!(alpha_by_subsets(6), 4);
    for n in 5..=6u16 {
        let res = independence_number(n as usize, None).unwrap();
        assert!(res.proven);
        assert_eq!(res.alpha as usize, alpha_by_subsets(n), "n={n}");
        assert!(is_independent(&res.witness));
    }
}

#[test]
fn alpha_from_recursion() {
    assert_eq!(alpha_by_recursion(5), alpha_by_subsets(5));
    assert_eq!(alpha_by_recursion(6), alpha_by_subsets(6));
    assert_eq!(alpha_by_recursion(7), 5);
    let res = independence_number(7, None).unwrap();
    assert_eq!(res.alpha, 5);
}

#[test]
fn alpha_is_monotone_in_n() {
    let alphas: Vec<usize> = (4..=7).map(alpha_by_recursion).collect();
    assert!(alphas.windows(2).all(|w| w[0] <= w[1]), "{alphas:?}");
}

#[test]
fn r_table_from_subset_enumeration() {
    // n = 5 by full enumeration, n = 6 for l up to 6 (2^20 subsets each).
    for l in 0..=10u32 {
        let oracle = r_by_subsets(5, l);
        assert_eq!(brute_force_r(5, l as u64, DEFAULT_ENUMERATION_BUDGET).unwrap().min_edges, oracle, "n=5 l={l}");
        assert_eq!(branch_and_bound_r(5, l as u64, &SearchConfig::default()).unwrap().min_edges, oracle, "n=5 l={l}");
    }
    for l in 0..=6u32 {
        let oracle = r_by_subsets(6, l);
        assert_eq!(branch_and_bound_r(6, l as u64, &SearchConfig::default()).unwrap().min_edges, oracle, "n=6 l={l}");
    }
}

#[test]
fn r_is_monotone_in_l() {
    for n in 5..=6usize {
        let total = graph_stats(n).unwrap().vertices;
        let r: Vec<u64> =
            (0..=total).map(|l| branch_and_bound_r(n, l, &SearchConfig::default()).unwrap().min_edges).collect();
        assert!(r.windows(2).all(|w| w[0] <= w[1]), "n={n}: {r:?}");
        assert_eq!(r[total as usize], graph_stats(n).unwrap().edges);
    }
}

fn subset_strategy(max_n: usize) -> impl Strategy<Value = (usize, Vec<bool>)> {
    (7..=max_n).prop_flat_map(|n| {
        let total = graph_stats(n).unwrap().vertices as usize;
        (Just(n), proptest::collection::vec(any::<bool>(), total))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_edges_match_pairwise_count((n, pick) in subset_strategy(12)) {
        let ts = triples(n as u16);
        let members: Vec<usize> = pick.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        let w = VertexSubset::from_indices(n, members.iter().copied()).unwrap();
        prop_assert_eq!(count_induced_edges(&w), pairwise_edges(&ts, &members));
    }

    #[test]
    fn edge_count_is_invariant_under_relabelling(
        (n, pick) in subset_strategy(10),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<u16> = (1..=n as u16).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let members = pick.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i);
        let w = VertexSubset::from_indices(n, members).unwrap();
        let image = w.permute(&perm).unwrap();
        prop_assert_eq!(image.len(), w.len());
        prop_assert_eq!(count_induced_edges(&image), count_induced_edges(&w));
    }
}
