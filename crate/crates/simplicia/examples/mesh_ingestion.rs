//! File ingestion: OFF meshes with polygonal faces are fan-triangulated
//! into complexes; SCX documents round-trip losslessly.
//!
//! ```bash
//! cargo run --example mesh_ingestion
//! ```

use simplicia::{classify, fan_triangulate, parse_off, parse_scx, serialize_scx};

const CUBE_OFF: &str = "\
OFF
8 6 12
-1 -1 -1
1 -1 -1
1 1 -1
-1 1 -1
-1 -1 1
1 -1 1
1 1 1
-1 1 1
4 0 1 2 3
4 4 5 6 7
4 0 1 5 4
4 1 2 6 5
4 2 3 7 6
4 3 0 4 7
";

fn main() -> simplicia::Result<()> {
    let mesh = parse_off(CUBE_OFF)?;
    println!(
        "cube mesh: V {} E {} F {}  =>  V - E + F = {}",
        mesh.vertex_count,
        mesh.edge_count(),
        mesh.faces.len(),
        mesh.euler_count()
    );

    let complex = fan_triangulate(&mesh)?;
    println!(
        "fan triangulation: counts {}, chi {}",
        complex.counts(),
        complex.euler_characteristic()?
    );
    println!("classified as: {}", classify(&complex)?.label);

    // the combinatorics survive an SCX round trip
    let doc = serialize_scx(&complex);
    println!("\nas SCX ({} bytes):", doc.len());
    for line in doc.lines().take(5) {
        println!("  {line}");
    }
    println!("  ...");
    let back = parse_scx(&doc)?;
    assert_eq!(back, complex);
    println!("parse(serialize(c)) == c holds");
    Ok(())
}
