//! Dimension-generic abstract simplicial complexes.
//!
//! A simplex is a finite set of distinct vertices, stored in strictly
//! increasing order so that every simplex has exactly one representation.
//! A [`SimplicialComplex`] is a family of simplices indexed by dimension;
//! a well-formed complex is closed under taking faces, which
//! [`SimplicialComplex::validate`] checks and [`SimplicialComplex::from_maximal`]
//! guarantees by construction.
//!
//! Complexes are purely combinatorial. There are no coordinates and no
//! geometric realization; two complexes are equal exactly when they contain
//! the same simplices. All values are immutable after construction, so they
//! can be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of a vertex. Ids are arbitrary non-negative integers; they carry no
/// meaning beyond identity and their canonical sorted order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

/// A simplex in canonical form: a strictly increasing tuple of distinct
/// vertices. Its dimension is the vertex count minus one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from an arbitrary collection of vertices. The
    /// vertices are sorted into canonical order; a repeated vertex is a
    /// [`Error::DegenerateSimplex`], as is an empty collection.
    pub fn new<I, V>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        vs.sort_unstable();
        if vs.is_empty() || vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSimplex {
                vertices: vs,
                line: None,
            });
        }
        Ok(Simplex { vertices: vs })
    }

    /// The sorted vertex tuple.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Dimension, i.e. vertex count minus one.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True when every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// Vertices shared with `other`, in canonical order.
    pub fn common_vertices(&self, other: &Simplex) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| other.contains_vertex(*v))
            .collect()
    }

    /// The codimension-1 faces, listed in omitted-vertex order: the i-th
    /// entry drops the i-th vertex of the canonical tuple.
    ///
    /// A 0-simplex has no faces and signals [`Error::ZeroDimensional`].
    pub fn faces(&self) -> Result<Vec<Simplex>> {
        if self.dim() == 0 {
            return Err(Error::ZeroDimensional);
        }
        Ok((0..self.vertices.len())
            .map(|i| {
                let mut vs = self.vertices.clone();
                vs.remove(i);
                Simplex { vertices: vs }
            })
            .collect())
    }

    /// All nonempty subsets of the vertex tuple, including the simplex itself.
    fn subsimplices(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1 << n) {
            let vs: Vec<VertexId> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Simplex { vertices: vs });
        }
        out
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Per-dimension simplex tallies: entry `i` counts the i-simplices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountVector(pub Vec<usize>);

impl CountVector {
    /// Count at dimension `dim`, zero past the top dimension.
    pub fn get(&self, dim: usize) -> usize {
        self.0.get(dim).copied().unwrap_or(0)
    }

    /// Alternating sum of the counts.
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, n)| if i % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// Findings from [`SimplicialComplex::validate`]. An empty report means the
/// complex is face-closed (and pure, when purity was requested).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Pairs `(owner, missing_face)`: `owner` is present but its face is not.
    pub missing_faces: Vec<(Simplex, Simplex)>,
    /// Simplices that are not a face of any simplex of the requested
    /// dimension. Empty unless purity was requested.
    pub impure: Vec<Simplex>,
}

impl ValidationReport {
    /// True when face closure holds.
    pub fn is_closed(&self) -> bool {
        self.missing_faces.is_empty()
    }

    /// True when no findings at all were recorded.
    pub fn is_valid(&self) -> bool {
        self.missing_faces.is_empty() && self.impure.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "ok");
        }
        for (owner, face) in &self.missing_faces {
            writeln!(f, "missing face {face} of {owner}")?;
        }
        for s in &self.impure {
            writeln!(f, "impure: {s} is not a face of any top-dimensional simplex")?;
        }
        Ok(())
    }
}

/// A family of simplices grouped by dimension.
///
/// Use [`SimplicialComplex::from_maximal`] for the face closure of a set of
/// generating simplices, or [`SimplicialComplex::from_simplices`] to take a
/// family exactly as given (useful for feeding deliberately broken input to
/// [`SimplicialComplex::validate`]).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    by_dim: Vec<BTreeSet<Simplex>>,
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Self {
        SimplicialComplex::default()
    }

    /// Face closure of the given vertex tuples. Tuples may be listed in any
    /// order and may overlap; set semantics collapse repeats of the same
    /// simplex. A tuple with a repeated vertex (or an empty tuple) is a
    /// [`Error::DegenerateSimplex`].
    pub fn from_maximal<I, T, V>(maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut complex = SimplicialComplex::default();
        for tuple in maximal {
            let s = Simplex::new(tuple)?;
            complex.insert_with_closure(&s);
        }
        Ok(complex)
    }

    /// A complex holding exactly the given simplices, with no closure taken.
    pub fn from_simplices<I>(simplices: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut complex = SimplicialComplex::default();
        for s in simplices {
            complex.insert_one(s);
        }
        complex
    }

    fn insert_one(&mut self, s: Simplex) {
        let d = s.dim();
        if self.by_dim.len() <= d {
            self.by_dim.resize_with(d + 1, BTreeSet::new);
        }
        self.by_dim[d].insert(s);
    }

    fn insert_with_closure(&mut self, s: &Simplex) {
        for sub in s.subsimplices() {
            self.insert_one(sub);
        }
    }

    /// Removes exactly `s`, leaving its faces and cofaces untouched.
    pub(crate) fn remove_only(&mut self, s: &Simplex) {
        if let Some(set) = self.by_dim.get_mut(s.dim()) {
            set.remove(s);
        }
        while self.by_dim.last().is_some_and(|set| set.is_empty()) {
            self.by_dim.pop();
        }
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.iter().rposition(|set| !set.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.dim().is_none()
    }

    /// Per-dimension tallies. The empty complex yields an empty vector.
    pub fn counts(&self) -> CountVector {
        match self.dim() {
            None => CountVector(Vec::new()),
            Some(d) => CountVector((0..=d).map(|i| self.by_dim[i].len()).collect()),
        }
    }

    /// Alternating sum of the simplex counts, exact in integer arithmetic.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(self.counts().alternating_sum())
    }

    /// Simplices of one dimension, in canonical order.
    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = &Simplex> {
        self.by_dim.get(dim).into_iter().flatten()
    }

    /// All simplices, lowest dimension first.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.by_dim
            .get(s.dim())
            .map(|set| set.contains(s))
            .unwrap_or(false)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.simplices(0).any(|s| s.vertices()[0] == v)
    }

    /// Vertex ids present in the complex, ascending. Only vertices that occur
    /// as 0-simplices are reported; in a face-closed complex that is every
    /// vertex of every simplex.
    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.simplices(0).map(|s| s.vertices()[0]).collect()
    }

    /// Largest vertex id in use, or `None` for the empty complex.
    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.all_simplices()
            .flat_map(|s| s.vertices().iter().copied())
            .max()
    }

    /// Simplices not properly contained in any other simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (d, set) in self.by_dim.iter().enumerate() {
            for s in set {
                let covered = self
                    .by_dim
                    .get(d + 1)
                    .map(|above| above.iter().any(|t| s.is_face_of(t)))
                    .unwrap_or(false);
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// Checks face closure, and purity at dimension `require_pure` when
    /// requested. All findings are collected into the report; nothing fails
    /// early.
    pub fn validate(&self, require_pure: Option<usize>) -> ValidationReport {
        let mut report = ValidationReport::default();
        for set in self.by_dim.iter().skip(1) {
            for s in set {
                for face in s.faces().expect("dim >= 1") {
                    if !self.contains(&face) {
                        report.missing_faces.push((s.clone(), face));
                    }
                }
            }
        }
        if let Some(k) = require_pure {
            let tops: Vec<&Simplex> = self.simplices(k).collect();
            for s in self.all_simplices() {
                if !tops.iter().any(|t| s.is_face_of(t)) {
                    report.impure.push(s.clone());
                }
            }
        }
        report
    }

    /// True when every simplex is a face of some `k`-simplex.
    pub fn is_pure(&self, k: usize) -> bool {
        self.validate(Some(k)).impure.is_empty()
    }

    /// Replaces the triangle `t` by the cone over its boundary from a fresh
    /// vertex (largest existing id plus one). Counts change by (+1, +3, +2)
    /// and the alternating sum is unchanged.
    pub fn star_subdivide(&self, t: &Simplex) -> Result<Self> {
        if t.dim() != 2 || !self.contains(t) {
            return Err(Error::SimplexNotFound(t.clone()));
        }
        let apex = VertexId(self.max_vertex_id().map(|v| v.0 + 1).unwrap_or(0));
        let mut next = self.clone();
        next.remove_only(t);
        let vs = t.vertices();
        next.insert_one(Simplex::new([apex]).expect("fresh vertex"));
        for &v in vs {
            next.insert_one(Simplex::new([v, apex]).expect("distinct"));
        }
        for pair in [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])] {
            next.insert_one(Simplex::new([pair.0, pair.1, apex]).expect("distinct"));
        }
        Ok(next)
    }

    /// Triangles containing each edge, for the 2-skeleton.
    pub(crate) fn triangles_by_edge(&self) -> BTreeMap<Simplex, Vec<Simplex>> {
        let mut map: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
        for t in self.simplices(2) {
            for e in t.faces().expect("triangle") {
                map.entry(e).or_default().push(t.clone());
            }
        }
        map
    }

    /// Connected components, each returned as its own complex. Connectivity
    /// is taken over shared vertices. Components are ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<SimplicialComplex> {
        let vertices: Vec<VertexId> = self
            .all_simplices()
            .flat_map(|s| s.vertices().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut dsu = Dsu::new(vertices.len());
        for s in self.all_simplices() {
            let vs = s.vertices();
            for w in vs.windows(2) {
                dsu.union(index[&w[0]], index[&w[1]]);
            }
        }
        let mut groups: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
        for s in self.all_simplices() {
            let root = dsu.find(index[&s.vertices()[0]]);
            groups.entry(root).or_default().push(s.clone());
        }
        groups
            .into_values()
            .map(SimplicialComplex::from_simplices)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
