//! The triangle-removal argument, executed and verified step by step.
//!
//! On a sphere the process ends at one last triangle, counts (3,3,1); on
//! the torus it exhausts every triangle and leaves a graph with one more
//! edge than vertices. Both residuals recover the alternating count of the
//! original complex after adding back the seed triangle's contribution.
//!
//! ```bash
//! cargo run --example cauchy_reduction
//! ```

use simplicia::{build, reduce, ModelId};

fn main() -> simplicia::Result<()> {
    for id in [ModelId::SphereTetra, ModelId::Torus, ModelId::Klein, ModelId::Genus(2)] {
        let complex = build(&id)?;
        let trace = reduce(&complex)?;
        println!("{id}:");
        for (i, step) in trace.steps.iter().enumerate() {
            println!("  {:>3}. {step}", i + 1);
        }
        let counts = trace.residual.counts();
        println!(
            "  residual counts ({},{},{}), residual chi {}, total chi {}\n",
            counts.get(0),
            counts.get(1),
            counts.get(2),
            trace.residual_chi,
            trace.total_chi
        );
        assert_eq!(trace.total_chi, complex.euler_characteristic()?);
    }
    Ok(())
}
