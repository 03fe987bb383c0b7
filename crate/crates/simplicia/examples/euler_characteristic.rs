//! Alternating counts of the bundled models.
//!
//! ```bash
//! cargo run --example euler_characteristic
//! ```

use simplicia::{build, model_catalog, SimplicialComplex};

fn main() -> simplicia::Result<()> {
    println!("{:<18} {:>12} {:>5}", "model", "counts", "chi");
    for (id, _) in model_catalog() {
        let complex = build(&id)?;
        println!(
            "{:<18} {:>12} {:>5}",
            id.to_string(),
            complex.counts().to_string(),
            complex.euler_characteristic()?
        );
    }

    // the same number from a hand-made complex
    let tetra = SimplicialComplex::from_maximal([[0u32, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])?;
    println!("\nhand-built tetrahedron boundary: chi {}", tetra.euler_characteristic()?);

    // faces of a simplex, for orientation
    let triangle = simplicia::Simplex::new([0u32, 1, 2])?;
    println!("faces of {triangle}:");
    for f in triangle.faces()? {
        println!("  {f}");
    }
    Ok(())
}
