//! Surface recognition: closed surfaces, pseudo-surfaces, genus, and the
//! homeomorphism type label.
//!
//! ```bash
//! cargo run --example classify_surfaces
//! ```

use simplicia::{build, classify, model_catalog, surface_kind, vertex_link, ModelId, VertexId};

fn main() -> simplicia::Result<()> {
    for (id, _) in model_catalog() {
        let complex = build(&id)?;
        let report = classify(&complex)?;
        println!("{id:<16} {report}");
        println!("{:<16} -> {}", "", report.label);
    }

    // the pinched torus in detail: its apex link is two disjoint cycles
    let pinched = build(&ModelId::PinchedTorus)?;
    println!("\npinched torus kind: {:?}", surface_kind(&pinched));
    let link = vertex_link(&pinched, VertexId(6))?;
    if let Some(cycles) = link.cycles() {
        println!("link of the apex splits into {} cycles:", cycles.len());
        for cycle in cycles {
            let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            println!("  {}", vs.join("-"));
        }
    }
    Ok(())
}
