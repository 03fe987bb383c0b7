//! Gluing surfaces: the alternating count of a connected sum is the sum of
//! the counts minus two, and non-orientability of either side wins.
//!
//! ```bash
//! cargo run --example connected_sum
//! ```

use simplicia::{build, classify, connected_sum, ModelId};

fn main() -> simplicia::Result<()> {
    let torus = build(&ModelId::Torus)?;
    let plane = build(&ModelId::ProjectivePlane)?;
    let sphere = build(&ModelId::SphereTetra)?;

    let pairs = [
        ("torus # torus", connected_sum(&torus, &torus)?),
        ("P2 # P2", connected_sum(&plane, &plane)?),
        ("sphere # torus", connected_sum(&sphere, &torus)?),
        ("torus # P2", connected_sum(&torus, &plane)?),
    ];
    for (name, sum) in pairs {
        let report = classify(&sum)?;
        println!("{name:<16} chi {:>3}  {}", report.chi, report.label);
    }

    // a genus-3 surface built by folding sums
    let mut surface = torus.clone();
    for _ in 0..2 {
        surface = connected_sum(&surface, &torus)?;
    }
    let report = classify(&surface)?;
    println!("\nthree tori glued: chi {}, genus {:?}", report.chi, report.genus);
    Ok(())
}
