//! Closed-surface recognition, genus, homeomorphism type, and connected sums.
//!
//! A pure 2-complex is a closed surface when every edge lies in exactly two
//! triangles and the link of every vertex is a single cycle. If all edges
//! have degree two but some link splits into several cycles the complex is a
//! pseudo-surface and the offending vertices are its pinch points.
//!
//! Genus is derived from the alternating count: a closed orientable surface
//! satisfies `χ = 2 - 2g`, a closed non-orientable one `χ = 2 - k` where `k`
//! counts crosscaps. Both numbers land in the same `genus` field of
//! [`SurfaceReport`], disambiguated by the orientability flag.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::orientation::orientability_check;

/// The link of a vertex: a graph on its neighbors with one edge `{a, b}` for
/// every triangle `{v, a, b}` at the apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    apex: VertexId,
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl VertexLink {
    pub fn apex(&self) -> VertexId {
        self.apex
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Decomposes the link into cycles when every link vertex has degree
    /// two; otherwise `None`. Each cycle starts at its smallest vertex and
    /// runs toward the smaller neighbor first.
    pub fn cycles(&self) -> Option<Vec<Vec<VertexId>>> {
        if self
            .adjacency
            .values()
            .any(|neighbors| neighbors.len() != 2)
        {
            return None;
        }
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in self.adjacency.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut prev = start;
            let mut cur = *self.adjacency[&start].iter().next().expect("degree two");
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                let next = *self.adjacency[&cur]
                    .iter()
                    .find(|&&n| n != prev)
                    .expect("degree two");
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Some(cycles)
    }

    pub fn is_single_cycle(&self) -> bool {
        matches!(self.cycles(), Some(cs) if cs.len() == 1)
    }
}

/// Computes the link of `v` in a complex. The complex is expected to be a
/// pure 2-complex; triangles at `v` are all that is inspected.
pub fn vertex_link(c: &SimplicialComplex, v: VertexId) -> Result<VertexLink> {
    if !c.contains_vertex(v) {
        return Err(Error::VertexNotFound(v));
    }
    let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for t in c.simplices(2) {
        if !t.contains_vertex(v) {
            continue;
        }
        let others: Vec<VertexId> = t
            .vertices()
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect();
        adjacency.entry(others[0]).or_default().insert(others[1]);
        adjacency.entry(others[1]).or_default().insert(others[0]);
    }
    Ok(VertexLink { apex: v, adjacency })
}

/// Why a complex fails to be a closed surface or pseudo-surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NotSurfaceReason {
    Empty,
    /// Not a pure 2-complex.
    NotPure,
    Disconnected,
    /// An edge lies in exactly one triangle.
    BoundaryEdge(Simplex),
    /// An edge lies in three or more triangles.
    OverusedEdge { edge: Simplex, degree: usize },
}

impl std::fmt::Display for NotSurfaceReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotSurfaceReason::Empty => write!(f, "empty complex"),
            NotSurfaceReason::NotPure => write!(f, "not a pure 2-complex"),
            NotSurfaceReason::Disconnected => write!(f, "disconnected"),
            NotSurfaceReason::BoundaryEdge(e) => write!(f, "boundary edge {e}"),
            NotSurfaceReason::OverusedEdge { edge, degree } => {
                write!(f, "edge {edge} lies in {degree} triangles")
            }
        }
    }
}

/// Verdict of [`surface_kind`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SurfaceKind {
    ClosedSurface,
    /// All edges have degree two but these vertices have disconnected links.
    PseudoSurface { pinches: Vec<VertexId> },
    NotSurface { reason: NotSurfaceReason },
}

/// Classifies a complex as closed surface, pseudo-surface, or neither.
/// The verdict encodes every failure; this never errors.
pub fn surface_kind(c: &SimplicialComplex) -> SurfaceKind {
    if c.is_empty() {
        return SurfaceKind::NotSurface {
            reason: NotSurfaceReason::Empty,
        };
    }
    if c.dim() != Some(2) || !c.is_pure(2) {
        return SurfaceKind::NotSurface {
            reason: NotSurfaceReason::NotPure,
        };
    }
    if !c.is_connected() {
        return SurfaceKind::NotSurface {
            reason: NotSurfaceReason::Disconnected,
        };
    }
    for (e, ts) in c.triangles_by_edge() {
        match ts.len() {
            1 => {
                return SurfaceKind::NotSurface {
                    reason: NotSurfaceReason::BoundaryEdge(e),
                }
            }
            2 => {}
            d => {
                return SurfaceKind::NotSurface {
                    reason: NotSurfaceReason::OverusedEdge { edge: e, degree: d },
                }
            }
        }
    }
    // all edges have degree two, so every link is a disjoint union of cycles
    let mut pinches = Vec::new();
    for v in c.vertex_ids() {
        let link = vertex_link(c, v).expect("vertex present");
        let cycles = link.cycles().expect("degree-two links");
        if cycles.len() > 1 {
            pinches.push(v);
        }
    }
    if pinches.is_empty() {
        SurfaceKind::ClosedSurface
    } else {
        SurfaceKind::PseudoSurface { pinches }
    }
}

/// Full classification of a pure, connected 2-complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub chi: i64,
    pub closed: bool,
    pub pinch_vertices: Vec<VertexId>,
    /// `None` when the complex is not a surface or pseudo-surface.
    pub orientable: Option<bool>,
    /// Genus for closed orientable surfaces, crosscap count for closed
    /// non-orientable ones, absent otherwise.
    pub genus: Option<u32>,
    pub label: String,
}

impl std::fmt::Display for SurfaceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.orientable, self.genus) {
            (Some(o), Some(g)) => write!(
                f,
                "{}, genus {}, chi {}",
                if o { "orientable" } else { "non-orientable" },
                g,
                self.chi
            ),
            (Some(o), None) => write!(
                f,
                "{}, chi {}",
                if o { "orientable" } else { "non-orientable" },
                self.chi
            ),
            (None, _) => write!(f, "chi {}", self.chi),
        }
    }
}

/// Computes χ, surface kind, orientability, and genus, and names the
/// homeomorphism type. Requires a pure, connected 2-complex; a complex that
/// then fails to be a (pseudo-)surface is still reported, with the failure
/// in the label.
pub fn classify(c: &SimplicialComplex) -> Result<SurfaceReport> {
    if c.is_empty() || c.dim() != Some(2) || !c.is_pure(2) {
        return Err(Error::NotPure(2));
    }
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let chi = c.euler_characteristic()?;
    match surface_kind(c) {
        SurfaceKind::ClosedSurface => {
            let orientable = orientability_check(c)?.is_orientable();
            let genus = if orientable {
                debug_assert!((2 - chi) % 2 == 0);
                ((2 - chi) / 2) as u32
            } else {
                (2 - chi) as u32
            };
            let label = if orientable {
                format!("orientable genus-{genus} surface")
            } else if genus == 1 {
                "connected sum of 1 projective plane".to_string()
            } else {
                format!("connected sum of {genus} projective planes")
            };
            Ok(SurfaceReport {
                chi,
                closed: true,
                pinch_vertices: Vec::new(),
                orientable: Some(orientable),
                genus: Some(genus),
                label,
            })
        }
        SurfaceKind::PseudoSurface { pinches } => {
            let orientable = orientability_check(c)?.is_orientable();
            let label = format!(
                "pseudo-surface with {} pinch {}",
                pinches.len(),
                if pinches.len() == 1 { "vertex" } else { "vertices" }
            );
            Ok(SurfaceReport {
                chi,
                closed: false,
                pinch_vertices: pinches,
                orientable: Some(orientable),
                genus: None,
                label,
            })
        }
        SurfaceKind::NotSurface { reason } => Ok(SurfaceReport {
            chi,
            closed: false,
            pinch_vertices: Vec::new(),
            orientable: None,
            genus: None,
            label: format!("not a surface: {reason}"),
        }),
    }
}

/// Connected sum: removes the canonically smallest triangle from each
/// operand (keeping its faces), relabels `b` disjointly, and identifies the
/// two boundary 3-cycles with opposite cyclic orders, smallest vertex to
/// smallest vertex.
///
/// The alternating count of the result is `χ(a) + χ(b) - 2`.
pub fn connected_sum(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    for operand in [a, b] {
        if operand.is_empty() || operand.dim() != Some(2) || !operand.is_pure(2) {
            return Err(Error::NotPure(2));
        }
        if !operand.is_connected() {
            return Err(Error::Disconnected);
        }
        for (e, ts) in operand.triangles_by_edge() {
            if ts.len() > 2 {
                return Err(Error::NotASurfaceComplex {
                    edge: e,
                    degree: ts.len(),
                });
            }
        }
    }
    let ta = a.simplices(2).next().ok_or(Error::NoTriangle)?.clone();
    let tb = b.simplices(2).next().ok_or(Error::NoTriangle)?.clone();

    let offset = a.max_vertex_id().expect("nonempty").0 + 1;
    // a's cycle (a0,a1,a2) meets b's (b0,b1,b2) reversed: b0->a0, b1->a2, b2->a1
    let va = ta.vertices();
    let vb = tb.vertices();
    let mut rename: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    rename.insert(vb[0], va[0]);
    rename.insert(vb[1], va[2]);
    rename.insert(vb[2], va[1]);

    let map_vertex = |v: VertexId| -> VertexId {
        rename
            .get(&v)
            .copied()
            .unwrap_or(VertexId(v.0 + offset))
    };

    let mut glued: BTreeSet<Simplex> = a.all_simplices().cloned().collect();
    glued.remove(&ta);

    // the identified boundary faces are the only b-simplices allowed to
    // land on existing a-simplices
    let boundary_faces: BTreeSet<Simplex> = gluing_faces(&ta).into_iter().collect();

    for s in b.all_simplices() {
        if *s == tb {
            continue;
        }
        let mapped = Simplex::new(s.vertices().iter().map(|&v| map_vertex(v)))
            .expect("injective rename");
        if glued.contains(&mapped) && !boundary_faces.contains(&mapped) {
            return Err(Error::GluingCollision(mapped));
        }
        glued.insert(mapped);
    }
    Ok(SimplicialComplex::from_simplices(glued))
}

/// The proper faces of a triangle: its vertices and edges, the simplices a
/// gluing is meant to identify.
fn gluing_faces(t: &Simplex) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = t
        .vertices()
        .iter()
        .map(|&v| Simplex::new([v]).expect("vertex"))
        .collect();
    out.extend(t.faces().expect("triangle"));
    out
}
