//! Local search upper witnesses compared with the construction and the
//! finite-n lower bound, at sizes where exact search is out of reach.
//!
//! ```bash
//! cargo run --release --example heuristic -- 14
//! ```

use g31::bounds::t3_4_floor;
use g31::construction::build_construction;
use g31::solver::{local_search_r, SearchConfig};

fn main() -> g31::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);
    let total = g31::binomial(n as u64, 3)?;
    let cfg = SearchConfig { restarts: 4, seed: 11, ..SearchConfig::default() };
    println!("{:>5} {:>12} {:>10} {:>12}", "l", "construction", "local", "lower bound");
    for k in 1..=10 {
        let l = k * total / 10;
        let c = build_construction(n, l)?;
        let h = local_search_r(n, l, &cfg)?;
        println!("{l:>5} {:>12} {:>10} {:>12}", c.actual_edges, h.min_edges, t3_4_floor(n, l)?);
    }
    Ok(())
}
