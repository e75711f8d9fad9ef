//! Structural constants of G(n,3,1) and the edge accounting of a random
//! subset against its complement.
//!
//! ```bash
//! cargo run --example graph_stats -- 9
//! ```

use g31::{complement_accounting, graph_stats, Graph, VertexSubset};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> g31::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    for m in 3..=n {
        let p = graph_stats(m)?;
        println!("n={m:>3}  vertices={:>6}  degree={:>5}  edges={:>8}", p.vertices, p.degree, p.edges);
    }

    let g = Graph::new(n)?;
    let v = g.vertex(0);
    let first: Vec<_> = g.neighbors(0).into_iter().take(5).map(|j| g.vertex(j).elements()).collect();
    println!("\n{:?} has {} neighbours, e.g. {first:?}", v.elements(), g.degree());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let total = g.vertex_count();
    let w = VertexSubset::from_indices(n, sample(&mut rng, total, total / 3))?;
    let rep = complement_accounting(&w);
    println!("\nrandom W with |W| = {} of {total}:", w.len());
    println!("  edges inside W            {}", rep.edges_within_w);
    println!("  edges inside complement   {}", rep.edges_within_complement);
    println!("  crossing edges            {}", rep.edges_crossing);
    println!("  sum equals |E|            {}", rep.identity_holds());
    println!("  E(W1) + E1 <= d |W1|      {}", rep.inequality_holds());
    Ok(())
}
