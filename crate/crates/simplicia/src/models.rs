//! Canonical triangulated models: two spheres, the flat torus and Klein
//! bottle quotients, the minimal projective plane, a pinched torus, and the
//! genus-g / k-crosscap families obtained by iterated connected sum.
//!
//! Counts of the fixed models:
//!
//! | model            | counts      | χ  |
//! |------------------|-------------|----|
//! | sphere-tetra     | (4, 6, 4)   | 2  |
//! | sphere-cube      | (8, 18, 12) | 2  |
//! | torus            | (9, 27, 18) | 0  |
//! | klein            | (9, 27, 18) | 0  |
//! | projective-plane | (6, 15, 10) | 1  |
//! | pinched-torus    | (7, 18, 12) | 1  |
//!
//! The torus and Klein bottle share a count vector on purpose; only the
//! orientability check tells them apart.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::surface::connected_sum;

/// Name of a buildable model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ModelId {
    SphereTetra,
    SphereCube,
    Torus,
    Klein,
    ProjectivePlane,
    PinchedTorus,
    /// Orientable surface of the given genus; genus 0 is the tetrahedral sphere.
    Genus(u32),
    /// Connected sum of `k >= 1` projective planes.
    Crosscaps(u32),
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::SphereTetra => write!(f, "sphere-tetra"),
            ModelId::SphereCube => write!(f, "sphere-cube"),
            ModelId::Torus => write!(f, "torus"),
            ModelId::Klein => write!(f, "klein"),
            ModelId::ProjectivePlane => write!(f, "projective-plane"),
            ModelId::PinchedTorus => write!(f, "pinched-torus"),
            ModelId::Genus(g) => write!(f, "genus:{g}"),
            ModelId::Crosscaps(k) => write!(f, "crosscaps:{k}"),
        }
    }
}

impl FromStr for ModelId {
    type Err = Error;

    /// Accepts the fixed names plus `genus:G` / `crosscaps:K` (a
    /// parenthesized parameter like `genus(3)` works too).
    fn from_str(s: &str) -> Result<Self> {
        let parse_param = |name: &str| -> Option<std::result::Result<u32, ()>> {
            let rest = s.strip_prefix(name)?;
            let digits = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))?;
            Some(digits.parse::<u32>().map_err(|_| ()))
        };
        match s {
            "sphere-tetra" => Ok(ModelId::SphereTetra),
            "sphere-cube" => Ok(ModelId::SphereCube),
            "torus" => Ok(ModelId::Torus),
            "klein" => Ok(ModelId::Klein),
            "projective-plane" => Ok(ModelId::ProjectivePlane),
            "pinched-torus" => Ok(ModelId::PinchedTorus),
            _ => {
                if let Some(g) = parse_param("genus") {
                    return g
                        .map(ModelId::Genus)
                        .map_err(|_| Error::InvalidParameter(format!("bad genus in {s:?}")));
                }
                if let Some(k) = parse_param("crosscaps") {
                    return k
                        .map(ModelId::Crosscaps)
                        .map_err(|_| Error::InvalidParameter(format!("bad crosscap count in {s:?}")));
                }
                Err(Error::InvalidParameter(format!("unknown model {s:?}")))
            }
        }
    }
}

/// Builds the named model as a validated complex.
pub fn build(m: &ModelId) -> Result<SimplicialComplex> {
    match m {
        ModelId::SphereTetra => {
            SimplicialComplex::from_maximal([[0u32, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        }
        ModelId::SphereCube => {
            // cube corners 0..7, squares split by a diagonal from the
            // smallest corner of each face
            SimplicialComplex::from_maximal([
                [0u32, 1, 2],
                [0, 2, 3], // bottom
                [4, 5, 6],
                [4, 6, 7], // top
                [0, 1, 5],
                [0, 4, 5], // front
                [1, 2, 6],
                [1, 5, 6], // right
                [2, 3, 7],
                [2, 6, 7], // back
                [0, 4, 7],
                [0, 3, 7], // left
            ])
        }
        ModelId::Torus => SimplicialComplex::from_maximal(grid_quotient(false)),
        ModelId::Klein => SimplicialComplex::from_maximal(grid_quotient(true)),
        ModelId::ProjectivePlane => {
            // minimal 6-vertex triangulation; every pair of vertices is an edge
            SimplicialComplex::from_maximal([
                [0u32, 1, 4],
                [0, 2, 4],
                [0, 2, 3],
                [0, 3, 5],
                [0, 1, 5],
                [1, 3, 4],
                [2, 4, 5],
                [1, 2, 3],
                [3, 4, 5],
                [1, 2, 5],
            ])
        }
        ModelId::PinchedTorus => {
            // triangulated cylinder on the 3-cycles 0-1-2 and 3-4-5, both
            // boundary circles coned to the shared apex 6
            SimplicialComplex::from_maximal([
                [0u32, 1, 4],
                [0, 3, 4],
                [1, 2, 5],
                [1, 4, 5],
                [0, 2, 3],
                [2, 3, 5],
                [0, 1, 6],
                [1, 2, 6],
                [0, 2, 6],
                [3, 4, 6],
                [4, 5, 6],
                [3, 5, 6],
            ])
        }
        ModelId::Genus(0) => build(&ModelId::SphereTetra),
        ModelId::Genus(g) => {
            let torus = build(&ModelId::Torus)?;
            let mut surface = torus.clone();
            for _ in 1..*g {
                surface = connected_sum(&surface, &torus)?;
            }
            Ok(surface)
        }
        ModelId::Crosscaps(0) => Err(Error::InvalidParameter(
            "crosscap count must be at least 1".into(),
        )),
        ModelId::Crosscaps(k) => {
            let plane = build(&ModelId::ProjectivePlane)?;
            let mut surface = plane.clone();
            for _ in 1..*k {
                surface = connected_sum(&surface, &plane)?;
            }
            Ok(surface)
        }
    }
}

/// Triangles of the 3x3 grid quotient. Both coordinates wrap; with
/// `reverse_seam` the horizontal wrap flips the vertical coordinate, which
/// turns the torus into a Klein bottle.
fn grid_quotient(reverse_seam: bool) -> Vec<[u32; 3]> {
    let vert = |x: u32, y: u32| -> u32 {
        let (x, y) = if x == 3 && reverse_seam {
            (0, (3 - y % 3) % 3)
        } else {
            (x % 3, y % 3)
        };
        3 * y + x
    };
    let mut triangles = Vec::with_capacity(18);
    for x in 0..3u32 {
        for y in 0..3u32 {
            let a = vert(x, y);
            let b = vert(x + 1, y);
            let c = vert(x + 1, y + 1);
            let d = vert(x, y + 1);
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    }
    triangles
}

/// Expected classification of a catalog model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelExpectation {
    pub chi: i64,
    pub closed: bool,
    pub orientable: bool,
    /// Genus or crosscap count; absent for the pseudo-surface.
    pub genus: Option<u32>,
    pub pinch_count: usize,
}

/// One representative per model variant, paired with what classification
/// must find. Serves as the shared fixture registry for tests and examples.
pub fn model_catalog() -> Vec<(ModelId, ModelExpectation)> {
    let closed = |chi: i64, orientable: bool, genus: u32| ModelExpectation {
        chi,
        closed: true,
        orientable,
        genus: Some(genus),
        pinch_count: 0,
    };
    vec![
        (ModelId::SphereTetra, closed(2, true, 0)),
        (ModelId::SphereCube, closed(2, true, 0)),
        (ModelId::Torus, closed(0, true, 1)),
        (ModelId::Klein, closed(0, false, 2)),
        (ModelId::ProjectivePlane, closed(1, false, 1)),
        (
            ModelId::PinchedTorus,
            ModelExpectation {
                chi: 1,
                closed: false,
                orientable: true,
                genus: None,
                pinch_count: 1,
            },
        ),
        (ModelId::Genus(2), closed(-2, true, 2)),
        (ModelId::Crosscaps(3), closed(-1, false, 3)),
    ]
}
