//! Abstract simplicial complexes with the classical surface invariants:
//! exact alternating counts, orientability via signed boundaries, closed
//! surface classification, connected sums, and a verified, trace-emitting
//! triangle-removal reduction.
//!
//! Everything is combinatorial. A complex is a face-closed family of vertex
//! tuples; there is no geometry anywhere, so all results are exact integers.
//!
//! ```
//! use simplicia::{build, classify, reduce, ModelId};
//!
//! let torus = build(&ModelId::Torus)?;
//! assert_eq!(torus.euler_characteristic()?, 0);
//!
//! let report = classify(&torus)?;
//! assert_eq!(report.genus, Some(1));
//! assert_eq!(report.orientable, Some(true));
//!
//! let trace = reduce(&torus)?;
//! assert_eq!(trace.total_chi, 0);
//! # Ok::<(), simplicia::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability; the `simplicia`
//! binary exposes the same operations on SCX and OFF files.

pub mod cli;
pub mod complex;
pub mod error;
pub mod models;
pub mod off;
pub mod orientation;
pub mod reduction;
pub mod scx;
pub mod surface;

pub use complex::{CountVector, Simplex, SimplicialComplex, ValidationReport, VertexId};
pub use error::{Error, Result};
pub use models::{build, model_catalog, ModelExpectation, ModelId};
pub use off::{fan_triangulate, parse_off, PolygonMesh};
pub use orientation::{
    compatible_orientation, orient, orientability_by_component, orientability_check, Chain,
    Orientability, OrientationAssignment, OrientedSimplex, Sign,
};
pub use reduction::{
    apply_op_i, apply_op_ii, apply_op_iii, reduce, reduce_with, seed, ReductionConfig,
    ReductionState, ReductionStep, ReductionTrace, StepKind,
};
pub use scx::{parse_scx, serialize_scx};
pub use surface::{
    classify, connected_sum, surface_kind, vertex_link, NotSurfaceReason, SurfaceKind,
    SurfaceReport, VertexLink,
};
