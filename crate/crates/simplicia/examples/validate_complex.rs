//! Face-closure validation and purity checks.
//!
//! ```bash
//! cargo run --example validate_complex
//! ```

use simplicia::{build, ModelId, Simplex, SimplicialComplex};

fn main() -> simplicia::Result<()> {
    // every complex produced by from_maximal is face closed
    let torus = build(&ModelId::Torus)?;
    println!("torus: {}", torus.validate(Some(2)));

    // a deliberately broken family: a triangle missing one of its edges
    let broken = SimplicialComplex::from_simplices([
        Simplex::new([0u32, 1, 2])?,
        Simplex::new([0u32, 1])?,
        Simplex::new([0u32, 2])?,
        Simplex::new([0u32])?,
        Simplex::new([1u32])?,
        Simplex::new([2u32])?,
    ]);
    let report = broken.validate(None);
    println!("broken family:");
    print!("{report}");

    // purity: an isolated vertex is not a face of any triangle
    let mut simplices: Vec<Simplex> = build(&ModelId::SphereTetra)?.all_simplices().cloned().collect();
    simplices.push(Simplex::new([42u32])?);
    let impure = SimplicialComplex::from_simplices(simplices);
    let report = impure.validate(Some(2));
    println!("sphere plus a stray vertex, purity at dimension 2:");
    print!("{report}");
    Ok(())
}
