//! The block construction: split {1..n} into blocks of width t, take every
//! triple inside a block, then trim back to exactly l vertices.
//!
//! ```bash
//! cargo run --example construction -- 10 20
//! ```

use g31::construction::{block_formula, build_construction, predicted_upper_bound};

fn main() -> g31::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(10) as usize;
    let l = args.next().flatten().unwrap_or(20);

    let plan = build_construction(n, l)?;
    println!("n={n} l={l}: t={} with {} blocks {:?}", plan.t, plan.num_blocks, plan.blocks);
    println!("untrimmed: {} vertices, {} edges", plan.raw_size, plan.predicted_edges);
    println!("trimmed:   {} vertices, {} edges", plan.trimmed_set.len(), plan.actual_edges);
    let (exact, asymptotic) = predicted_upper_bound(n, l)?;
    println!("block formula {}, reference 9l^2/(2n) = {:.1}", exact.value, asymptotic.value);

    println!("\nuntrimmed construction at l = n^2 sqrt(n) / 6:");
    for n in [50usize, 100, 200, 400, 800] {
        let l = ((n as f64).powi(2) * (n as f64).sqrt() / 6.0).floor() as u64;
        let f = block_formula(n, l)?;
        let reference = 9.0 * (l as f64).powi(2) / (2.0 * n as f64);
        println!(
            "  n={n:>4} l={l:>8} t={:>3} edges={:>12} ratio={:.4}",
            f.t,
            f.raw_edges,
            f.raw_edges as f64 / reference
        );
    }
    Ok(())
}
