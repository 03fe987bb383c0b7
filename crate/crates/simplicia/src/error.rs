//! Crate-wide error type.

use crate::complex::{Simplex, VertexId};
use crate::reduction::ReductionState;

/// Errors produced anywhere in the crate.
///
/// Parsing errors carry the 1-based line number of the offending input line.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A vertex tuple contains a repeated vertex.
    #[error("degenerate simplex{}: repeated vertex in [{}]", at_line(*.line), ids(.vertices))]
    DegenerateSimplex {
        vertices: Vec<VertexId>,
        line: Option<usize>,
    },

    /// The operation needs a simplex of dimension at least 1.
    #[error("operation is undefined on a 0-dimensional simplex")]
    ZeroDimensional,

    /// The complex contains no simplices at all.
    #[error("empty complex")]
    EmptyComplex,

    /// A referenced simplex is not part of the complex.
    #[error("simplex {0} not found in the complex")]
    SimplexNotFound(Simplex),

    /// A chain mixes simplices of different dimensions.
    #[error("chain mixes simplices of different dimensions")]
    MixedDimension,

    /// Two triangles do not meet in exactly the named edge.
    #[error("triangles are not adjacent along the given edge")]
    NotAdjacent,

    /// An edge lies in three or more triangles.
    #[error("not a surface complex: edge {edge} lies in {degree} triangles")]
    NotASurfaceComplex { edge: Simplex, degree: usize },

    /// The complex has more than one connected component.
    #[error("complex is disconnected")]
    Disconnected,

    /// A referenced vertex is not part of the complex.
    #[error("vertex {0} not found in the complex")]
    VertexNotFound(VertexId),

    /// The complex is not pure of the required dimension.
    #[error("complex is not pure of dimension {0}")]
    NotPure(usize),

    /// The operation needs at least one triangle.
    #[error("complex contains no triangle")]
    NoTriangle,

    /// Gluing would merge simplices that were distinct beforehand.
    #[error("gluing would merge pre-existing distinct simplices (at {0})")]
    GluingCollision(Simplex),

    /// The input is not a closed surface.
    #[error("not a closed surface: {0}")]
    NotClosedSurface(String),

    /// The requested reduction move does not apply in the current state.
    #[error("move is not eligible: {0}")]
    NotEligible(String),

    /// The apex vertex of a fold move still lies in other simplices.
    #[error("vertex {0} is still used by other simplices")]
    VertexStillUsed(VertexId),

    /// The edge is not a collapsible dangling segment.
    #[error("edge {0} is not a free dangling segment")]
    NotFree(Simplex),

    /// The reduction search gave up with triangles remaining.
    #[error("reduction stalled with {} triangles remaining", .0.residual().counts().get(2))]
    Stalled(Box<ReductionState>),

    /// A model name or parameter is invalid.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Syntactic error in an input document.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The same maximal face is listed twice.
    #[error("duplicate maximal face{}: [{}]", at_line(*.line), ids(.vertices))]
    DuplicateMaximalFace {
        vertices: Vec<VertexId>,
        line: Option<usize>,
    },

    /// A face references a vertex index outside the declared range.
    #[error("line {line}: vertex index {index} out of range (vertex count {limit})")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        limit: usize,
    },

    /// A polygon face has fewer than three distinct vertices.
    #[error("degenerate face #{face}: repeated vertex")]
    DegenerateFace { face: usize },

    /// No fan anchor avoids clashing with existing edges or diagonals.
    #[error("face #{face}: every fan anchor collides with an existing edge or diagonal")]
    DiagonalCollision { face: usize },
}

fn at_line(line: Option<usize>) -> String {
    match line {
        Some(n) => format!(" at line {n}"),
        None => String::new(),
    }
}

fn ids(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
