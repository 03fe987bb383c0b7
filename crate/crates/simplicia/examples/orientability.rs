//! Orientation propagation: a coherent assignment for the torus, a
//! contradiction witness for the Klein bottle.
//!
//! ```bash
//! cargo run --example orientability
//! ```

use simplicia::{
    build, orient, orientability_check, ModelId, Orientability,
};

fn main() -> simplicia::Result<()> {
    // signed boundary of one oriented triangle
    let t = orient([0u32, 1, 2])?;
    println!("boundary of {t}:");
    for (edge, coeff) in t.boundary()?.terms() {
        println!("  {coeff:+} {edge}");
    }

    let torus = build(&ModelId::Torus)?;
    match orientability_check(&torus)? {
        Orientability::Orientable(assignment) => {
            println!("\ntorus: orientable, {} triangles assigned", assignment.len());
            let total = assignment.total_boundary()?;
            println!("total boundary is zero: {}", total.is_zero());
        }
        Orientability::NonOrientable(_) => unreachable!("the torus is orientable"),
    }

    let klein = build(&ModelId::Klein)?;
    match orientability_check(&klein)? {
        Orientability::Orientable(_) => unreachable!("the Klein bottle is not orientable"),
        Orientability::NonOrientable(witness) => {
            println!("\nklein bottle: non-orientable");
            let cycle: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
            println!("witness cycle: {}", cycle.join(" -> "));
            println!(
                "propagating around the cycle flips the sign: {}",
                simplicia::orientation::witness_flips_sign(&witness)
            );
        }
    }
    Ok(())
}
