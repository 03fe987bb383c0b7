//! Oriented simplices, the signed boundary operator, and the orientability
//! decision for surface complexes.
//!
//! An orientation of a simplex is an ordering of its vertices up to even
//! permutation, so every simplex has exactly two orientations. We represent
//! one as the canonical sorted tuple together with a sign: the parity of the
//! permutation taking the defining ordering to sorted order.
//!
//! The boundary of an oriented simplex is the alternating sum of its faces,
//! `∂[v0,..,vk] = Σ_i (-1)^i [v0,..,v̂i,..,vk]`, extended linearly to integer
//! chains. Two edge-adjacent triangles are compatibly oriented when they
//! induce opposite signs on the shared edge; a pure 2-complex is orientable
//! when compatible orientations can be propagated to all triangles without
//! contradiction, and [`orientability_check`] decides this by breadth-first
//! propagation over the triangle adjacency graph.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Orientation sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A simplex with a chosen orientation: canonical base plus the parity of
/// the ordering that defined it. Negation flips the sign only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedSimplex {
    base: Simplex,
    sign: Sign,
}

impl OrientedSimplex {
    pub fn new(base: Simplex, sign: Sign) -> Self {
        OrientedSimplex { base, sign }
    }

    pub fn base(&self) -> &Simplex {
        &self.base
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn negate(&self) -> OrientedSimplex {
        OrientedSimplex {
            base: self.base.clone(),
            sign: self.sign.flip(),
        }
    }

    /// Signed boundary chain, `sign · Σ_i (-1)^i face_i` over the canonical
    /// vertex order. Undefined for vertices.
    pub fn boundary(&self) -> Result<Chain> {
        if self.base.dim() == 0 {
            return Err(Error::ZeroDimensional);
        }
        let mut terms = BTreeMap::new();
        for (i, face) in self.base.faces()?.into_iter().enumerate() {
            let coeff = if i % 2 == 0 { 1 } else { -1 } * self.sign.as_i64();
            terms.insert(face, coeff);
        }
        Ok(Chain { terms })
    }
}

impl std::fmt::Display for OrientedSimplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.sign, self.base)
    }
}

/// Orients a simplex by an explicit vertex ordering. The sign records the
/// parity of the permutation that sorts the ordering, so two orderings yield
/// the same value exactly when they differ by an even permutation.
pub fn orient<I, V>(ordering: I) -> Result<OrientedSimplex>
where
    I: IntoIterator<Item = V>,
    V: Into<VertexId>,
{
    let vs: Vec<VertexId> = ordering.into_iter().map(Into::into).collect();
    let base = Simplex::new(vs.iter().copied())?;
    // count inversions; the tuple is short, the quadratic scan is fine
    let mut inversions = 0usize;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i] > vs[j] {
                inversions += 1;
            }
        }
    }
    Ok(OrientedSimplex::new(base, Sign::from_parity(inversions % 2 == 1)))
}

/// An integer-weighted formal sum of simplices of one common dimension.
/// Simplices with coefficient zero are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Chain {
    terms: BTreeMap<Simplex, i64>,
}

impl Chain {
    pub fn zero() -> Chain {
        Chain::default()
    }

    /// Builds a chain from `(simplex, coefficient)` terms, summing repeats
    /// and dropping zeros. Mixing dimensions is an error.
    pub fn from_terms<I>(terms: I) -> Result<Chain>
    where
        I: IntoIterator<Item = (Simplex, i64)>,
    {
        let mut chain = Chain::zero();
        for (s, c) in terms {
            if let Some(d) = chain.dimension() {
                if s.dim() != d {
                    return Err(Error::MixedDimension);
                }
            }
            let entry = chain.terms.entry(s).or_insert(0);
            *entry += c;
            if *entry == 0 {
                chain.terms.retain(|_, v| *v != 0);
            }
        }
        Ok(chain)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common dimension of the terms, `None` for the zero chain.
    pub fn dimension(&self) -> Option<usize> {
        self.terms.keys().next().map(|s| s.dim())
    }

    pub fn coefficient(&self, s: &Simplex) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.terms.iter().map(|(s, c)| (s, *c))
    }

    /// Coefficient-wise sum. The zero chain is compatible with anything;
    /// otherwise both operands must have the same dimension.
    pub fn add(&self, other: &Chain) -> Result<Chain> {
        match (self.dimension(), other.dimension()) {
            (Some(a), Some(b)) if a != b => return Err(Error::MixedDimension),
            _ => {}
        }
        let mut terms = self.terms.clone();
        for (s, c) in &other.terms {
            let entry = terms.entry(s.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(s);
            }
        }
        Ok(Chain { terms })
    }

    pub fn scale(&self, k: i64) -> Chain {
        if k == 0 {
            return Chain::zero();
        }
        Chain {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
        }
    }

    pub fn negate(&self) -> Chain {
        self.scale(-1)
    }

    /// Linear extension of the boundary operator. The zero chain maps to
    /// itself; a chain of vertices has no boundary to take.
    pub fn boundary(&self) -> Result<Chain> {
        match self.dimension() {
            None => Ok(Chain::zero()),
            Some(0) => Err(Error::ZeroDimensional),
            Some(_) => {
                let mut out = Chain::zero();
                for (s, c) in &self.terms {
                    let d = OrientedSimplex::new(s.clone(), Sign::Plus).boundary()?;
                    out = out.add(&d.scale(*c))?;
                }
                Ok(out)
            }
        }
    }
}

impl From<&OrientedSimplex> for Chain {
    fn from(os: &OrientedSimplex) -> Chain {
        Chain {
            terms: BTreeMap::from([(os.base().clone(), os.sign().as_i64())]),
        }
    }
}

/// Given an oriented triangle `src` and a neighbor `dst` meeting it exactly
/// in the edge `shared`, returns the unique orientation of `dst` inducing
/// the opposite sign on `shared`. Anything else is [`Error::NotAdjacent`].
pub fn compatible_orientation(
    src: &OrientedSimplex,
    dst: &Simplex,
    shared: &Simplex,
) -> Result<OrientedSimplex> {
    if src.base().dim() != 2
        || dst.dim() != 2
        || shared.dim() != 1
        || !shared.is_face_of(src.base())
        || !shared.is_face_of(dst)
        || src.base().common_vertices(dst).len() != 2
    {
        return Err(Error::NotAdjacent);
    }
    let src_coeff = src.boundary()?.coefficient(shared);
    let plus = OrientedSimplex::new(dst.clone(), Sign::Plus);
    let plus_coeff = plus.boundary()?.coefficient(shared);
    debug_assert!(src_coeff.abs() == 1 && plus_coeff.abs() == 1);
    if plus_coeff == -src_coeff {
        Ok(plus)
    } else {
        Ok(plus.negate())
    }
}

/// A sign for every triangle of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationAssignment {
    signs: BTreeMap<Simplex, Sign>,
}

impl OrientationAssignment {
    pub fn sign(&self, t: &Simplex) -> Option<Sign> {
        self.signs.get(t).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, Sign)> {
        self.signs.iter().map(|(s, g)| (s, *g))
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// The oriented triangle chosen by the assignment.
    pub fn oriented(&self, t: &Simplex) -> Option<OrientedSimplex> {
        self.sign(t).map(|g| OrientedSimplex::new(t.clone(), g))
    }

    /// Sum of the signed boundaries of all triangles. For a coherent
    /// assignment every edge shared by two triangles cancels.
    pub fn total_boundary(&self) -> Result<Chain> {
        let mut out = Chain::zero();
        for (t, g) in &self.signs {
            out = out.add(&OrientedSimplex::new(t.clone(), *g).boundary()?)?;
        }
        Ok(out)
    }
}

/// Verdict of [`orientability_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Orientability {
    /// A coherent orientation exists; the assignment covers every triangle.
    Orientable(OrientationAssignment),
    /// No coherent orientation exists. The witness is a closed chain of
    /// triangles, consecutive ones sharing an interior edge, along which
    /// propagating compatible orientations returns to the start flipped.
    NonOrientable(Vec<Simplex>),
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable(_))
    }
}

/// Decides orientability of a connected pure 2-complex in which every edge
/// lies in one or two triangles.
///
/// Propagation starts from the canonically smallest triangle with sign `+`
/// and runs breadth first; only edges of triangle-degree two transmit a
/// constraint, so boundary edges are unconstrained. The first conflict found
/// determines the witness cycle, which makes the output deterministic.
pub fn orientability_check(c: &SimplicialComplex) -> Result<Orientability> {
    if c.is_empty() || c.dim() != Some(2) || !c.is_pure(2) {
        return Err(Error::NotPure(2));
    }
    let by_edge = c.triangles_by_edge();
    for (e, ts) in &by_edge {
        if ts.len() > 2 {
            return Err(Error::NotASurfaceComplex {
                edge: e.clone(),
                degree: ts.len(),
            });
        }
    }
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }

    let root = c.simplices(2).next().expect("nonempty").clone();
    let mut signs: BTreeMap<Simplex, Sign> = BTreeMap::from([(root.clone(), Sign::Plus)]);
    let mut parent: BTreeMap<Simplex, Simplex> = BTreeMap::new();
    let mut queue = VecDeque::from([root.clone()]);

    while let Some(t) = queue.pop_front() {
        let t_sign = signs[&t];
        let oriented_t = OrientedSimplex::new(t.clone(), t_sign);
        let mut edges = t.faces().expect("triangle");
        edges.sort();
        for e in edges {
            let neighbors = &by_edge[&e];
            if neighbors.len() != 2 {
                continue;
            }
            let u = if neighbors[0] == t {
                &neighbors[1]
            } else {
                &neighbors[0]
            };
            let induced = compatible_orientation(&oriented_t, u, &e)?;
            match signs.get(u) {
                None => {
                    signs.insert(u.clone(), induced.sign());
                    parent.insert(u.clone(), t.clone());
                    queue.push_back(u.clone());
                }
                Some(existing) => {
                    if *existing != induced.sign() {
                        return Ok(Orientability::NonOrientable(witness_cycle(
                            &parent, &t, u,
                        )));
                    }
                }
            }
        }
    }

    debug_assert_eq!(signs.len(), c.simplices(2).count());
    Ok(Orientability::Orientable(OrientationAssignment { signs }))
}

/// Per-component verdicts for complexes that need not be connected. Each
/// component must still be a pure 2-complex with edge degrees at most two.
pub fn orientability_by_component(c: &SimplicialComplex) -> Result<Vec<Orientability>> {
    c.components()
        .iter()
        .map(orientability_check)
        .collect()
}

/// Closed triangle chain through the breadth-first tree: root .. t, u .. root.
/// Consecutive entries share a degree-two edge, as do the last and the first.
fn witness_cycle(
    parent: &BTreeMap<Simplex, Simplex>,
    t: &Simplex,
    u: &Simplex,
) -> Vec<Simplex> {
    let path_to_root = |mut s: Simplex| {
        let mut path = vec![s.clone()];
        while let Some(p) = parent.get(&s) {
            path.push(p.clone());
            s = p.clone();
        }
        path
    };
    let mut up = path_to_root(t.clone());
    up.reverse(); // root .. t
    let down = path_to_root(u.clone()); // u .. root

    // walk u's ancestry until it meets the root..t path, then drop everything
    // above the meeting point so the cycle passes it exactly once
    let mut cycle = up;
    for s in down {
        if let Some(pos) = cycle.iter().position(|x| *x == s) {
            cycle.drain(..pos);
            break;
        }
        cycle.push(s);
    }
    cycle
}

/// True when consecutive triangles of `cycle` (cyclically) each share an
/// edge and propagating a compatible orientation around the cycle flips the
/// starting sign. This is the defining property of a non-orientability
/// witness.
pub fn witness_flips_sign(cycle: &[Simplex]) -> bool {
    if cycle.len() < 2 {
        return false;
    }
    let mut current = OrientedSimplex::new(cycle[0].clone(), Sign::Plus);
    for i in 0..cycle.len() {
        let next = &cycle[(i + 1) % cycle.len()];
        let shared = current.base().common_vertices(next);
        if shared.len() != 2 {
            return false;
        }
        let edge = Simplex::new(shared).expect("two distinct vertices");
        match compatible_orientation(&current, next, &edge) {
            Ok(os) => current = os,
            Err(_) => return false,
        }
    }
    current.base() == &cycle[0] && current.sign() == Sign::Minus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CountVector;
    use itertools::Itertools;

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    #[test]
    fn orient_examples() {
        let os = orient([0u32, 1, 2]).unwrap();
        assert_eq!(os, OrientedSimplex::new(simplex(&[0, 1, 2]), Sign::Plus));

        let os = orient([0u32, 2, 1]).unwrap();
        assert_eq!(os, OrientedSimplex::new(simplex(&[0, 1, 2]), Sign::Minus));

        let os = orient([2u32, 0, 1]).unwrap();
        assert_eq!(os, OrientedSimplex::new(simplex(&[0, 1, 2]), Sign::Plus));

        assert!(matches!(
            orient([0u32, 0, 1]),
            Err(Error::DegenerateSimplex { .. })
        ));
    }

    #[test]
    fn orient_respects_parity_exhaustively() {
        // all orderings of 3 and of 4 symbols
        for n in [3usize, 4] {
            let ids: Vec<u32> = (0..n as u32).collect();
            for perm in ids.iter().copied().permutations(n) {
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let expected = if inv % 2 == 0 { Sign::Plus } else { Sign::Minus };
                let os = orient(perm.clone()).unwrap();
                assert_eq!(os.sign(), expected, "ordering {perm:?}");
                assert_eq!(os.base(), &Simplex::new(ids.clone()).unwrap());
            }
        }
    }

    #[test]
    fn boundary_of_triangle() {
        let os = orient([0u32, 1, 2]).unwrap();
        let b = os.boundary().unwrap();
        assert_eq!(b.coefficient(&simplex(&[1, 2])), 1);
        assert_eq!(b.coefficient(&simplex(&[0, 2])), -1);
        assert_eq!(b.coefficient(&simplex(&[0, 1])), 1);

        let neg = os.negate().boundary().unwrap();
        assert_eq!(neg, b.negate());

        let e = orient([0u32, 1]).unwrap().boundary().unwrap();
        assert_eq!(e.coefficient(&simplex(&[1])), 1);
        assert_eq!(e.coefficient(&simplex(&[0])), -1);

        assert_eq!(
            orient([5u32]).unwrap().boundary(),
            Err(Error::ZeroDimensional)
        );
    }

    #[test]
    fn boundary_squared_vanishes() {
        let os = orient([0u32, 1, 2]).unwrap();
        let once = os.boundary().unwrap();
        assert!(once.boundary().unwrap().is_zero());
        assert!(Chain::zero().boundary().unwrap().is_zero());
    }

    #[test]
    fn adjacent_coherent_triangles_cancel_shared_edge() {
        let a = orient([0u32, 1, 2]).unwrap();
        let b = compatible_orientation(&a, &simplex(&[1, 2, 3]), &simplex(&[1, 2])).unwrap();
        let sum = Chain::from(&a).add(&Chain::from(&b)).unwrap();
        let boundary = sum.boundary().unwrap();
        assert_eq!(boundary.coefficient(&simplex(&[1, 2])), 0);
        assert_eq!(boundary.terms().count(), 4);
    }

    #[test]
    fn chain_from_terms_checks_dimension() {
        let err = Chain::from_terms([(simplex(&[0, 1]), 1), (simplex(&[2]), 1)]).unwrap_err();
        assert_eq!(err, Error::MixedDimension);
        let c = Chain::from_terms([(simplex(&[0, 1]), 2), (simplex(&[0, 1]), -2)]).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn compatible_orientation_examples() {
        let src = orient([0u32, 1, 2]).unwrap();
        let dst = simplex(&[1, 2, 3]);
        let shared = simplex(&[1, 2]);
        let os = compatible_orientation(&src, &dst, &shared).unwrap();
        let src_coeff = src.boundary().unwrap().coefficient(&shared);
        let dst_coeff = os.boundary().unwrap().coefficient(&shared);
        assert_eq!(src_coeff + dst_coeff, 0);

        // swapping roles returns the original orientation of src
        let back = compatible_orientation(&os, src.base(), &shared).unwrap();
        assert_eq!(back, src);

        // sharing only a vertex
        let err = compatible_orientation(&src, &simplex(&[2, 5, 6]), &simplex(&[2, 5]));
        assert_eq!(err, Err(Error::NotAdjacent));
    }

    #[test]
    fn single_triangle_is_orientable() {
        let c = SimplicialComplex::from_maximal([[0u32, 1, 2]]).unwrap();
        match orientability_check(&c).unwrap() {
            Orientability::Orientable(a) => {
                assert_eq!(a.len(), 1);
                assert_eq!(a.sign(&simplex(&[0, 1, 2])), Some(Sign::Plus));
            }
            other => panic!("expected orientable, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let c =
            SimplicialComplex::from_maximal([vec![0u32, 1, 2], vec![10, 11, 12]]).unwrap();
        assert_eq!(orientability_check(&c), Err(Error::Disconnected));
        let verdicts = orientability_by_component(&c).unwrap();
        assert_eq!(verdicts.len(), 2);
        assert!(verdicts.iter().all(|v| v.is_orientable()));
    }

    #[test]
    fn overused_edge_is_rejected() {
        let c = SimplicialComplex::from_maximal([
            vec![0u32, 1, 2],
            vec![0, 1, 3],
            vec![0, 1, 4],
        ])
        .unwrap();
        assert!(matches!(
            orientability_check(&c),
            Err(Error::NotASurfaceComplex { degree: 3, .. })
        ));
    }

    #[test]
    fn impure_input_is_rejected() {
        let c = SimplicialComplex::from_maximal([vec![0u32, 1, 2], vec![2, 9]]).unwrap();
        assert_eq!(orientability_check(&c), Err(Error::NotPure(2)));
        let counts = c.counts();
        assert_eq!(counts, CountVector(vec![4, 4, 1]));
    }
}
