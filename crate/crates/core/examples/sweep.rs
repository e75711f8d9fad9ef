//! A density sweep written as CSV, the same rows `g31 sweep` produces.
//!
//! ```bash
//! cargo run --release --example sweep > sweep.csv
//! ```

use g31::cli::{parse_decimal, run_sweep, LRule, Method, SweepSpec};
use g31::solver::SearchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let densities = ["0.1", "0.25", "0.5", "0.75", "0.9"].iter().map(|s| parse_decimal(s)).collect::<Result<_, _>>()?;
    let spec = SweepSpec {
        n_min: 6,
        n_max: 12,
        rule: LRule::Density(densities),
        methods: vec![Method::Construction, Method::Heuristic, Method::Exact, Method::Bounds],
        restarts: 2,
        search: SearchConfig::default(),
        node_budget: Some(200_000),
    };
    let mut out = csv::Writer::from_writer(std::io::stdout());
    for row in run_sweep(&spec)? {
        out.serialize(row)?;
    }
    out.flush()?;
    Ok(())
}
