//! OFF mesh ingestion and fan triangulation.
//!
//! Only the plain ASCII subset is read: an `OFF` header line, a counts line
//! `nv nf ne`, `nv` coordinate lines, and `nf` face lines of the form
//! `k v1 .. vk`. Color and normal extensions are not accepted. Coordinates
//! are parsed and then dropped; everything downstream is combinatorial.
//!
//! [`fan_triangulate`] splits every k-gon into `k - 2` triangles by
//! diagonals from one anchor vertex. A diagonal that would coincide with an
//! existing mesh edge, or with a diagonal from another face, would corrupt
//! the edge count, so the fan is re-anchored at the next vertex; only when
//! every anchor collides does ingestion fail. On success the alternating sum
//! of the complex equals `V - E + F` of the mesh.

use std::collections::BTreeSet;

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A polygonal mesh: a vertex count and faces as cyclic vertex sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonMesh {
    pub vertex_count: usize,
    pub faces: Vec<Vec<u32>>,
}

impl PolygonMesh {
    /// Distinct unordered vertex pairs over all face boundaries.
    pub fn edge_count(&self) -> usize {
        self.boundary_edges().len()
    }

    fn boundary_edges(&self) -> BTreeSet<(u32, u32)> {
        let mut edges = BTreeSet::new();
        for face in &self.faces {
            for i in 0..face.len() {
                let a = face[i];
                let b = face[(i + 1) % face.len()];
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges
    }

    /// `V - E + F` with edges counted as distinct unordered pairs.
    pub fn euler_count(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

/// Parses the ASCII OFF subset into a [`PolygonMesh`].
pub fn parse_off(text: &str) -> Result<PolygonMesh> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    });

    let mut next_line = |expected: &str| {
        lines.next().ok_or(Error::Parse {
            line: 0,
            message: format!("unexpected end of file, expected {expected}"),
        })
    };

    let (line_no, header) = next_line("OFF header")?;
    if header != "OFF" {
        return Err(Error::Parse {
            line: line_no,
            message: format!("bad header {header:?}, expected OFF"),
        });
    }
    let (line_no, counts) = next_line("counts line")?;
    let fields: Vec<&str> = counts.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse {
            line: line_no,
            message: "counts line must hold three integers".into(),
        });
    }
    let parse_count = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad count {s:?}"),
        })
    };
    let nv = parse_count(fields[0])?;
    let nf = parse_count(fields[1])?;
    let _ne = parse_count(fields[2])?;

    for _ in 0..nv {
        let (line_no, coords) = next_line("vertex line")?;
        let values: Vec<&str> = coords.split_whitespace().collect();
        if values.len() < 3 || values.iter().any(|v| v.parse::<f64>().is_err()) {
            return Err(Error::Parse {
                line: line_no,
                message: "vertex line must hold three coordinates".into(),
            });
        }
        // coordinates are intentionally dropped
    }

    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line_no, face) = next_line("face line")?;
        let tokens: Vec<&str> = face.split_whitespace().collect();
        let arity: usize = tokens
            .first()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: line_no,
                message: "face line must start with its vertex count".into(),
            })?;
        if arity < 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("face needs at least 3 vertices, got {arity}"),
            });
        }
        if tokens.len() != arity + 1 {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "face declares {arity} vertices but lists {}",
                    tokens.len() - 1
                ),
            });
        }
        let mut indices = Vec::with_capacity(arity);
        for t in &tokens[1..] {
            let idx: usize = t.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex index {t:?}"),
            })?;
            if idx >= nv {
                return Err(Error::IndexOutOfRange {
                    line: line_no,
                    index: idx,
                    limit: nv,
                });
            }
            indices.push(idx as u32);
        }
        faces.push(indices);
    }
    if let Some((line_no, extra)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("trailing content {extra:?}"),
        });
    }
    Ok(PolygonMesh {
        vertex_count: nv,
        faces,
    })
}

/// Fan-triangulates every face and returns the face closure, including one
/// 0-simplex per declared mesh vertex so isolated vertices survive.
pub fn fan_triangulate(mesh: &PolygonMesh) -> Result<SimplicialComplex> {
    let mut seen_faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for (i, face) in mesh.faces.iter().enumerate() {
        let mut sorted = face.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateFace { face: i });
        }
        if !seen_faces.insert(sorted) {
            return Err(Error::DuplicateMaximalFace {
                vertices: face.iter().map(|&v| VertexId(v)).collect(),
                line: None,
            });
        }
    }

    let mesh_edges = mesh.boundary_edges();
    let mut diagonals: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut triangles: Vec<[u32; 3]> = Vec::new();

    for (i, face) in mesh.faces.iter().enumerate() {
        let k = face.len();
        if k == 3 {
            triangles.push([face[0], face[1], face[2]]);
            continue;
        }
        let fan_of = |anchor: usize| -> Vec<(u32, u32)> {
            (2..k - 1)
                .map(|step| {
                    let a = face[anchor];
                    let b = face[(anchor + step) % k];
                    (a.min(b), a.max(b))
                })
                .collect()
        };
        let anchor = (0..k).find(|&a| {
            fan_of(a)
                .iter()
                .all(|d| !mesh_edges.contains(d) && !diagonals.contains(d))
        });
        let Some(anchor) = anchor else {
            return Err(Error::DiagonalCollision { face: i });
        };
        diagonals.extend(fan_of(anchor));
        for step in 1..k - 1 {
            triangles.push([
                face[anchor],
                face[(anchor + step) % k],
                face[(anchor + step + 1) % k],
            ]);
        }
    }

    let mut generators: Vec<Vec<u32>> = triangles.iter().map(|t| t.to_vec()).collect();
    generators.extend((0..mesh.vertex_count as u32).map(|v| vec![v]));
    SimplicialComplex::from_maximal(generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CountVector;

    const CUBE: &str = "OFF
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

    #[test]
    fn parses_cube_quads() {
        let mesh = parse_off(CUBE).unwrap();
        assert_eq!(mesh.vertex_count, 8);
        assert_eq!(mesh.faces.len(), 6);
        assert!(mesh.faces.iter().all(|f| f.len() == 4));
        assert_eq!(mesh.edge_count(), 12);
        assert_eq!(mesh.euler_count(), 2);
    }

    #[test]
    fn cube_triangulates_to_a_sphere() {
        let mesh = parse_off(CUBE).unwrap();
        let c = fan_triangulate(&mesh).unwrap();
        assert_eq!(c.counts(), CountVector(vec![8, 18, 12]));
        assert_eq!(c.euler_characteristic().unwrap(), 2);
        assert!(c.validate(Some(2)).is_valid());
    }

    #[test]
    fn hexagon_fan() {
        let mesh = PolygonMesh {
            vertex_count: 6,
            faces: vec![vec![0, 1, 2, 3, 4, 5]],
        };
        let c = fan_triangulate(&mesh).unwrap();
        let counts = c.counts();
        assert_eq!(counts.get(2), 4);
        assert_eq!(counts.get(1), 6 + 3); // boundary plus three diagonals
        assert_eq!(c.euler_characteristic().unwrap(), mesh.euler_count());
    }

    #[test]
    fn triangle_face_passes_through() {
        let mesh = PolygonMesh {
            vertex_count: 3,
            faces: vec![vec![0, 1, 2]],
        };
        let c = fan_triangulate(&mesh).unwrap();
        assert_eq!(c.counts(), CountVector(vec![3, 3, 1]));
    }

    #[test]
    fn out_of_range_index() {
        let text = "OFF\n8 1 0\n0 0 0\n0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n3 0 1 99\n";
        assert!(matches!(
            parse_off(text),
            Err(Error::IndexOutOfRange {
                index: 99,
                limit: 8,
                ..
            })
        ));
    }

    #[test]
    fn header_and_shape_errors() {
        assert!(matches!(parse_off("OBJ\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_off("OFF\n1 1\n"), Err(Error::Parse { .. })));
        // face with a color extension is refused
        let text = "OFF\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2 255\n";
        assert!(matches!(parse_off(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn degenerate_face_is_refused() {
        let mesh = PolygonMesh {
            vertex_count: 4,
            faces: vec![vec![0, 1, 1, 2]],
        };
        assert_eq!(fan_triangulate(&mesh), Err(Error::DegenerateFace { face: 0 }));
    }

    #[test]
    fn fan_reanchors_around_existing_diagonal() {
        // the triangle (0,2,4) forces the hexagon fan away from anchor 0,
        // whose diagonals (0,2) and (0,4) both collide
        let mesh = PolygonMesh {
            vertex_count: 6,
            faces: vec![vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]],
        };
        let c = fan_triangulate(&mesh).unwrap();
        assert_eq!(c.euler_characteristic().unwrap(), mesh.euler_count());
    }

    #[test]
    fn collision_on_every_anchor_is_an_error() {
        // both candidate diagonals of the quad, (0,2) and (1,3), already
        // exist as edges of the two triangles
        let mesh = PolygonMesh {
            vertex_count: 6,
            faces: vec![vec![0, 2, 4], vec![1, 3, 5], vec![0, 1, 2, 3]],
        };
        let err = fan_triangulate(&mesh).unwrap_err();
        assert!(matches!(err, Error::DiagonalCollision { face: 2 }));
    }

    #[test]
    fn duplicate_face_sets_are_refused() {
        let mesh = PolygonMesh {
            vertex_count: 4,
            faces: vec![vec![0, 1, 2, 3], vec![0, 3, 1, 2]],
        };
        assert!(matches!(
            fan_triangulate(&mesh),
            Err(Error::DuplicateMaximalFace { .. })
        ));
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let mesh = PolygonMesh {
            vertex_count: 5,
            faces: vec![vec![0, 1, 2]],
        };
        let c = fan_triangulate(&mesh).unwrap();
        assert_eq!(c.counts().get(0), 5);
        assert_eq!(c.euler_characteristic().unwrap(), mesh.euler_count());
    }
}
