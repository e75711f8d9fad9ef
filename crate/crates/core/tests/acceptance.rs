//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed. Built with `harness = false` so the summary
//! is always visible in `cargo test` output.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use g31::bounds::{
    literal_crossover, literal_inequality_holds, normalized_crossover, t3_4_floor, Bracket, REFERENCE_CROSSOVER_PREFIX,
};
use g31::construction::{block_formula, build_construction};
use g31::independence::{decompose_claim1, for_each_independent_set, independence_number};
use g31::solver::{branch_and_bound_r, brute_force_r, local_search_r, SearchConfig, DEFAULT_ENUMERATION_BUDGET};
use g31::{binomial, complement_accounting, count_induced_edges, graph_stats, Graph, Rational, VertexSubset};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

/// Exact r(l) for every l at a given n, computed once by branch and bound.
fn exact_table(n: usize) -> &'static [u64] {
    static TABLES: [OnceLock<Vec<u64>>; 8] = [const { OnceLock::new() }; 8];
    TABLES[n].get_or_init(|| {
        let total = binomial(n as u64, 3).unwrap();
        (0..=total).map(|l| branch_and_bound_r(n, l, &SearchConfig::default()).unwrap().min_edges).collect()
    })
}

fn structural_constants() -> Outcome {
    for n in 5..=12usize {
        let p = graph_stats(n).map_err(|e| e.to_string())?;
        let v = binomial(n as u64, 3).unwrap();
        let d = 3 * binomial(n as u64 - 3, 2).unwrap();
        ensure!(p.vertices == v && p.degree == d && p.edges == d * v / 2, "formula mismatch at n={n}: {p:?}");
        let g = Graph::new(n).map_err(|e| e.to_string())?;
        let mut twice_edges = 0u64;
        for i in 0..g.vertex_count() {
            let deg =
                (0..g.vertex_count()).filter(|&j| g.vertex(i).intersection_size(&g.vertex(j)) == 1).count() as u64;
            ensure!(deg == d, "vertex {i} has degree {deg} at n={n}, expected {d}");
            twice_edges += deg;
        }
        ensure!(twice_edges / 2 == p.edges, "edge count mismatch at n={n}");
    }
    let p = graph_stats(5).unwrap();
    ensure!((p.vertices, p.degree, p.edges) == (10, 3, 15), "n=5 gave {p:?}");
    Ok("n=5..12 formulas and regularity exact; n=5 is 3-regular on 10 vertices, 15 edges".into())
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for (n, max_l) in [(5usize, 10u64), (6, 20), (7, 8)] {
        for l in 0..=max_l {
            let bb = branch_and_bound_r(n, l, &SearchConfig::default()).map_err(|e| e.to_string())?;
            let bf = brute_force_r(n, l, DEFAULT_ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
            ensure!(bb.min_edges == bf.min_edges, "n={n} l={l}: b&b {} vs brute force {}", bb.min_edges, bf.min_edges);
            ensure!(
                count_induced_edges(&bb.witness) == bb.min_edges,
                "n={n} l={l}: witness does not realise the value"
            );
            compared += 1;
        }
    }
    Ok(format!("{compared} (n,l) pairs agree"))
}

fn zero_law() -> Outcome {
    let mut summary = Vec::new();
    for n in 5..=7usize {
        let alpha = independence_number(n, None).map_err(|e| e.to_string())?;
        ensure!(alpha.proven, "alpha search at n={n} did not finish");
        let r = exact_table(n);
        for (l, &edges) in r.iter().enumerate() {
            ensure!((edges == 0) == (l <= alpha.alpha), "n={n} l={l}: r={edges} but alpha={}", alpha.alpha);
        }
        summary.push(format!("alpha_{n}={}", alpha.alpha));
    }
    Ok(format!("r(l)=0 exactly for l<=alpha ({})", summary.join(", ")))
}

fn complement_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let per_n = 1000;
    for n in 7..=12usize {
        let total = binomial(n as u64, 3).unwrap() as usize;
        for _ in 0..per_n {
            let k = rng.gen_range(0..=total);
            let w = VertexSubset::from_indices(n, sample(&mut rng, total, k)).unwrap();
            let rep = complement_accounting(&w);
            ensure!(rep.identity_holds(), "identity fails at n={n}: {rep:?}");
            ensure!(rep.inequality_holds(), "inequality fails at n={n}: {rep:?}");
            ensure!(rep.edges_within_w == count_induced_edges(&w), "inconsistent count at n={n}");
        }
    }
    Ok(format!("{per_n} random subsets per n=7..12"))
}

fn construction_validity() -> Outcome {
    let plan = build_construction(10, 20).map_err(|e| e.to_string())?;
    ensure!(plan.t == 5, "t={} for n=10, l=20", plan.t);
    ensure!(plan.trimmed_set.len() == 20, "construction has {} vertices", plan.trimmed_set.len());
    ensure!(
        plan.actual_edges == 30 && plan.predicted_edges == 30,
        "edges {} / predicted {}",
        plan.actual_edges,
        plan.predicted_edges
    );
    ensure!(count_induced_edges(&plan.trimmed_set) == 30, "enumerated count differs");
    ensure!(block_formula(10, 20).unwrap().raw_edges == 30, "block formula differs");
    let mut checked = 0;
    for n in 3..=7usize {
        for (l, &r) in exact_table(n).iter().enumerate() {
            let p = build_construction(n, l as u64).map_err(|e| e.to_string())?;
            ensure!(p.trimmed_set.len() == l, "n={n} l={l}: construction has {} vertices", p.trimmed_set.len());
            ensure!(p.actual_edges >= r, "n={n} l={l}: construction {} below exact {r}", p.actual_edges);
            checked += 1;
        }
    }
    Ok(format!("n=10,l=20 gives t=5, 20 vertices, 30 edges; {checked} (n,l) pairs at n<=7 stay >= r(l)"))
}

fn finite_lower_bound() -> Outcome {
    let cfg = SearchConfig { restarts: 2, ..SearchConfig::default() };
    let mut checked = 0;
    for n in 11..=16usize {
        let total = binomial(n as u64, 3).unwrap();
        let mut ls: Vec<u64> = (0..=20).map(|k| k * total / 20).collect();
        ls.extend([total - 2, total - 1]);
        ls.sort_unstable();
        ls.dedup();
        for &l in &ls {
            let floor = t3_4_floor(n, l).map_err(|e| e.to_string())?;
            let plan = build_construction(n, l).map_err(|e| e.to_string())?;
            let heur = local_search_r(n, l, &cfg).map_err(|e| e.to_string())?;
            let mut values = vec![("construction", plan.actual_edges), ("heuristic", heur.min_edges)];
            // Near-full subsets are solved exactly through their small complements.
            if total - l <= 2 {
                let exact = brute_force_r(n, l, DEFAULT_ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
                values.push(("exact", exact.min_edges));
            }
            for (what, v) in values {
                ensure!(v as i128 >= floor, "n={n} l={l}: {what} value {v} below bound {floor}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values at n=11..16 respect the bound"))
}

fn bracket_ordering() -> Outcome {
    let order = [Bracket::T3_4, Bracket::T3_3, Bracket::T3_2, Bracket::F1];
    for k in 0..=100 {
        let c = Rational::new(k, 100);
        let vals: Vec<Rational> = order.iter().map(|b| b.leading(c)).collect();
        ensure!(vals.windows(2).all(|w| w[0] <= w[1]), "ordering fails at c={c}: {vals:?}");
        for n in [11usize, 20, 100] {
            let finite: Vec<Rational> = order[..3].iter().map(|b| b.at(c, n)).collect();
            ensure!(finite.windows(2).all(|w| w[0] <= w[1]), "finite-n ordering fails at c={c}, n={n}");
        }
        if k < 100 {
            let ratio = Bracket::F1.leading(c) / Bracket::F2.leading(c);
            ensure!(ratio == Rational::integer(3), "F1/F2 = {ratio} at c={c}");
        }
    }
    Ok("T3.4 <= T3.3 <= T3.2 <= F1 and F1/F2 = 3 at c = 0, 0.01, ..., 1".into())
}

fn crossover() -> Outcome {
    let c = normalized_crossover();
    let residual = c * c + 18.0 * c - 9.0;
    ensure!(residual.abs() < 1e-12, "residual {residual}");
    ensure!((c - (3.0 * 10f64.sqrt() - 9.0)).abs() < 1e-15, "c*={c}");
    ensure!(
        format!("{c:.6}").starts_with(REFERENCE_CROSSOVER_PREFIX),
        "c*={c} does not start with {REFERENCE_CROSSOVER_PREFIX}"
    );
    for fixed in [0.05, 0.1, 0.3, 0.5, 0.9] {
        ensure!(!literal_inequality_holds(1e6, fixed), "literal inequality holds at n=1e6, c={fixed}");
    }
    let lit = literal_crossover(1e6).unwrap_or(0.0);
    Ok(format!("c*={c:.12}, residual {residual:.1e}; literal form false at n=1e6 (threshold {lit:.5})"))
}

fn asymptotic_trend() -> Outcome {
    let mut last = f64::INFINITY;
    let mut ratios = Vec::new();
    for n in [200u64, 400, 800] {
        // floor(n^2 sqrt(n) / 6) = floor(sqrt(n^5 / 36)).
        let l = ((n.pow(5) / 36) as f64).sqrt() as u64;
        let l = (l.saturating_sub(2)..=l + 2).filter(|x| x * x * 36 <= n.pow(5)).max().unwrap();
        let f = block_formula(n as usize, l).map_err(|e| e.to_string())?;
        let ratio = f.raw_edges as f64 / (9.0 * (l as f64).powi(2) / (2.0 * n as f64));
        ensure!((0.5..=1.5).contains(&ratio), "ratio {ratio} at n={n}");
        let dist = (ratio - 1.0).abs();
        ensure!(dist <= last, "distance to 1 grew at n={n}: {dist} > {last}");
        last = dist;
        ratios.push(format!("n={n}: {ratio:.4}"));
    }
    Ok(ratios.join(", "))
}

fn decomposition() -> Outcome {
    let g = Graph::new(6).unwrap();
    let mut count = 0;
    let mut failure = None;
    for_each_independent_set(&g, |set| {
        if failure.is_some() {
            return;
        }
        count += 1;
        let u = VertexSubset::from_indices(6, set.iter().copied()).unwrap();
        match decompose_claim1(&u) {
            Ok(d) => {
                if let Err(e) = d.validate(&u) {
                    failure = Some(format!("{set:?}: {e}"));
                }
            }
            Err(e) => failure = Some(format!("{set:?}: {e}")),
        }
    });
    if let Some(f) = failure {
        return Err(f);
    }
    Ok(format!("all {count} independent sets at n=6 decompose validly"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("structural constants", structural_constants),
        ("oracle equivalence", oracle_equivalence),
        ("zero law", zero_law),
        ("complement accounting", complement_identity),
        ("construction validity", construction_validity),
        ("finite-n lower bound", finite_lower_bound),
        ("bracket ordering", bracket_ordering),
        ("crossover", crossover),
        ("asymptotic trend", asymptotic_trend),
        ("independent set decomposition", decomposition),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
