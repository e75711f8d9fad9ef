//! Exact `r(l)` for every `l` at a small `n`, next to the block construction.
//!
//! ```bash
//! cargo run --release --example exact_table -- 7
//! ```

use g31::construction::build_construction;
use g31::solver::{branch_and_bound_r, SearchConfig};

fn main() -> g31::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let total = g31::binomial(n as u64, 3)?;
    let cfg = SearchConfig {
        thread_count: std::thread::available_parallelism().map_or(1, |p| p.get()),
        ..SearchConfig::default()
    };
    println!("{:>4} {:>8} {:>12} {:>12} {:>10}", "l", "r(l)", "construction", "nodes", "ms");
    for l in 0..=total {
        let r = branch_and_bound_r(n, l, &cfg)?;
        let c = build_construction(n, l)?;
        println!(
            "{:>4} {:>8} {:>12} {:>12} {:>10.1}  {:?}",
            l,
            r.min_edges,
            c.actual_edges,
            r.nodes_explored,
            r.elapsed.as_secs_f64() * 1e3,
            r.status
        );
    }
    Ok(())
}
