//! Where the dense-regime lower bound overtakes the quadratic one, under
//! the per-n normalised reading and the literal one.
//!
//! ```bash
//! cargo run --example crossover
//! ```

use g31::bounds::{linear_bracket_crossover, literal_crossover, literal_inequality_holds, normalized_crossover};

fn main() {
    let c = normalized_crossover();
    println!("normalised threshold c* = 3 sqrt(10) - 9 = {c:.12}");
    println!("residual of c^2 + 18c - 9: {:e}", c * c + 18.0 * c - 9.0);
    println!("linear-bracket reading:    {:.12}", linear_bracket_crossover());
    println!("\nliteral reading, threshold by n:");
    for n in [1e2, 1e3, 1e4, 1e5, 1e6] {
        let t = literal_crossover(n).map_or("none".to_string(), |t| format!("{t:.6}"));
        println!("  n={n:>9.0}  threshold={t:<10}  holds at c=0.1: {}", literal_inequality_holds(n, 0.1));
    }
}
