//! Independence numbers with witnesses, and the decomposition of
//! independent sets into the three canonical family types.
//!
//! ```bash
//! cargo run --release --example independence -- 7
//! ```

use std::time::Duration;

use g31::independence::{decompose_claim1, generate_family, independence_number, FamilyType};

fn main() -> g31::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for n in 4..=max_n {
        let res = independence_number(n, Some(Duration::from_secs(30)))?;
        let d = decompose_claim1(&res.witness)?;
        let kinds: Vec<String> = d.parts.iter().map(|(ft, p)| format!("{ft:?} x{}", p.len())).collect();
        println!("n={n:>2} alpha={} proven={} parts: {}", res.alpha, res.proven, kinds.join(", "));
    }

    let n = 9;
    for ft in [FamilyType::Type1 { pair: [1, 2] }, FamilyType::Type2 { quad: [1, 2, 3, 4] }, FamilyType::Type3] {
        let fam = generate_family(&ft, n)?;
        println!("\n{ft:?} at n={n}: {} triples, {:?}", fam.len(), fam);
    }
    Ok(())
}
