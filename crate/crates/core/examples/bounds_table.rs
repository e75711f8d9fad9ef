//! Every bound estimate at a few densities, plus the regime tags.
//!
//! ```bash
//! cargo run --example bounds_table -- 16
//! ```

use g31::bounds::{all_estimates, classify_regime, t3_4_floor, ThresholdSet};
use g31::c_fraction;

fn main() -> g31::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    let total = g31::binomial(n as u64, 3)?;
    let thresholds = ThresholdSet::default_for(n);
    for l in [n as u64, 2 * (n * n) as u64, total / 2, 3 * total / 4, total] {
        let c = c_fraction(n, l)?;
        let regimes = classify_regime(n, l, &thresholds)?;
        println!("l={l} (c={c}, regimes {regimes:?}), exact floor {}", t3_4_floor(n, l)?);
        for e in all_estimates(n, l, None, 0.0)? {
            println!(
                "  {:<8} {:<20} {:<22} {:>14.2}",
                e.source.label(),
                format!("{:?}", e.direction),
                format!("{:?}", e.validity),
                e.value
            );
        }
    }
    Ok(())
}
