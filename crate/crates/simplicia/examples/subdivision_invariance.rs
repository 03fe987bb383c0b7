//! Star subdivisions refine a triangulation without moving any invariant:
//! the counts change by exactly (+1, +3, +2) per step while the alternating
//! sum, orientability, and genus stay put.
//!
//! ```bash
//! cargo run --example subdivision_invariance
//! ```

use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicia::{build, classify, ModelId, Simplex};

fn main() -> simplicia::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for id in [ModelId::SphereCube, ModelId::Torus, ModelId::Klein] {
        let mut complex = build(&id)?;
        let reference = classify(&complex)?;
        println!("{id}: start {}", complex.counts());
        for round in 1..=12 {
            let triangles: Vec<Simplex> = complex.simplices(2).cloned().collect();
            let target = triangles.choose(&mut rng).unwrap().clone();
            complex = complex.star_subdivide(&target)?;
            let report = classify(&complex)?;
            assert_eq!(report.chi, reference.chi);
            assert_eq!(report.genus, reference.genus);
            assert_eq!(report.orientable, reference.orientable);
            if round % 4 == 0 {
                println!(
                    "  after {:>2} subdivisions: counts {}, chi {}, genus {:?}",
                    round,
                    complex.counts(),
                    report.chi,
                    report.genus
                );
            }
        }
    }
    println!("all invariants held under every subdivision");
    Ok(())
}
