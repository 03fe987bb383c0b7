//! Triangle-removal reduction with per-step count bookkeeping.
//!
//! The process starts by removing one open triangle (the seed), leaving a
//! hole whose boundary is tracked as a closed walk through the residual
//! 1-skeleton. Two moves grow the hole without changing the alternating sum
//! `n0 - n1 + n2`:
//!
//! * operation I removes a triangle together with the single hole edge it
//!   borders, rerouting the boundary through its opposite vertex
//!   (deltas `(0, -1, -1)`);
//! * operation II removes a triangle bordering the hole along two edges,
//!   together with both edges and their common vertex
//!   (deltas `(-1, -2, -1)`).
//!
//! After the 2-skeleton is exhausted, operation III repeatedly collapses
//! dangling segments, removing an edge and its free endpoint
//! (deltas `(-1, -1, 0)`). Only the seed changes the alternating sum, by
//! exactly one, so the sum of the original complex is always the residual
//! sum plus one; [`ReductionTrace`] records this per step.
//!
//! [`apply_op_i`] and [`apply_op_ii`] enforce a strictly simple boundary
//! walk: no vertex is ever visited twice. That discipline suffices to shrink
//! any sphere down to one last protected triangle, but a counting argument
//! shows it cannot exhaust a surface with `χ < 2`: each operation I consumes
//! a never-visited vertex and each operation II deletes a visited one while
//! the walk stays a cycle, so at most `2(V - 3)` triangles can follow the
//! seed, and a closed surface has `2(V - χ)` of them. [`reduce`] therefore
//! runs the strictly simple moves for as long as any exists, then switches
//! to moves justified by the residual structure alone (operation I on any
//! edge bounding exactly one triangle, operation II at a vertex whose star
//! is a single triangle) and stops tracking the walk. Residual connectivity
//! is preserved by every move either way, and each step still lands on the
//! fixed delta table. A bounded backtracking search recovers from dead ends
//! before a [`Error::Stalled`] verdict is issued.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{CountVector, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::surface::{surface_kind, SurfaceKind};

/// Kind of a reduction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepKind {
    Seed,
    OpI,
    OpII,
    OpIII,
}

impl std::fmt::Display for StepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepKind::Seed => write!(f, "seed"),
            StepKind::OpI => write!(f, "op I"),
            StepKind::OpII => write!(f, "op II"),
            StepKind::OpIII => write!(f, "op III"),
        }
    }
}

/// One executed step: what was removed and how the counts moved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// Simplices removed by this step, triangle first.
    pub removed: Vec<Simplex>,
    /// Change of `(n0, n1, n2)`.
    pub deltas: (i64, i64, i64),
}

impl ReductionStep {
    /// The fixed delta table.
    pub fn expected_deltas(kind: StepKind) -> (i64, i64, i64) {
        match kind {
            StepKind::Seed => (0, 0, -1),
            StepKind::OpI => (0, -1, -1),
            StepKind::OpII => (-1, -2, -1),
            StepKind::OpIII => (-1, -1, 0),
        }
    }
}

impl std::fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: removed", self.kind)?;
        for s in &self.removed {
            write!(f, " {s}")?;
        }
        write!(
            f,
            ", deltas ({},{},{})",
            self.deltas.0, self.deltas.1, self.deltas.2
        )
    }
}

/// State of a reduction in progress.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionState {
    residual: SimplicialComplex,
    hole_boundary: Vec<VertexId>,
    removed_counts: CountVector,
}

impl ReductionState {
    /// Wraps an arbitrary complex with an empty hole boundary. Useful for
    /// driving operation III over plain graphs.
    pub fn over(complex: SimplicialComplex) -> Self {
        ReductionState {
            residual: complex,
            hole_boundary: Vec::new(),
            removed_counts: CountVector(vec![0, 0, 0]),
        }
    }

    pub fn residual(&self) -> &SimplicialComplex {
        &self.residual
    }

    /// The hole boundary as a cyclic vertex sequence. The strict operations
    /// keep it a simple cycle; [`reduce`] clears it once it leaves the
    /// strictly simple regime.
    pub fn hole_boundary(&self) -> &[VertexId] {
        &self.hole_boundary
    }

    /// Running tally of removed simplices per dimension.
    pub fn removed_counts(&self) -> &CountVector {
        &self.removed_counts
    }

    /// Alternating sum contributed by everything removed so far.
    pub fn removed_alternating(&self) -> i64 {
        self.removed_counts.alternating_sum()
    }

    fn bump_removed(&mut self, dim: usize) {
        self.removed_counts.0[dim] += 1;
    }
}

/// Settings for [`reduce_with`].
#[derive(Debug, Clone)]
pub struct ReductionConfig {
    /// Seed triangle; the canonically smallest one when absent.
    pub seed: Option<Simplex>,
    /// How many exhausted choice points one dead end may unwind.
    pub backtrack_depth: usize,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            seed: None,
            backtrack_depth: 8,
        }
    }
}

/// Complete record of a reduction run.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub residual: SimplicialComplex,
    pub residual_chi: i64,
    /// `residual_chi + 1`: the seed triangle is the one removal that changes
    /// the alternating sum. Equals the sum of the original complex.
    pub total_chi: i64,
}

/// Removes the seed triangle of a closed-surface complex. Its edges and
/// vertices stay; the hole boundary is the triangle's vertex cycle.
pub fn seed(c: &SimplicialComplex, t: Option<&Simplex>) -> Result<ReductionState> {
    match surface_kind(c) {
        SurfaceKind::ClosedSurface => {}
        SurfaceKind::PseudoSurface { .. } => {
            return Err(Error::NotClosedSurface("pseudo-surface with pinch vertices".into()))
        }
        SurfaceKind::NotSurface { reason } => {
            return Err(Error::NotClosedSurface(reason.to_string()))
        }
    }
    let t = match t {
        Some(t) => {
            if t.dim() != 2 || !c.contains(t) {
                return Err(Error::SimplexNotFound(t.clone()));
            }
            t.clone()
        }
        None => c.simplices(2).next().expect("closed surface").clone(),
    };
    let mut residual = c.clone();
    residual.remove_only(&t);
    Ok(ReductionState {
        residual,
        hole_boundary: t.vertices().to_vec(),
        removed_counts: CountVector(vec![0, 0, 1]),
    })
}

/// Consecutive pairs of the walk as edges, with their starting index.
fn walk_pairs(walk: &[VertexId]) -> Vec<(usize, Simplex)> {
    let n = walk.len();
    if n < 2 {
        return Vec::new();
    }
    (0..n)
        .filter_map(|i| {
            let (a, b) = (walk[i], walk[(i + 1) % n]);
            Simplex::new([a, b]).ok().map(|e| (i, e))
        })
        .collect()
}

fn occurrences(walk: &[VertexId], v: VertexId) -> usize {
    walk.iter().filter(|&&w| w == v).count()
}

/// Facts the move checks need about one candidate triangle.
struct HoleContact {
    /// Distinct edges of the triangle that lie on the walk.
    shared: Vec<Simplex>,
    /// Walk positions per shared edge.
    positions: BTreeMap<Simplex, Vec<usize>>,
}

fn hole_contact(t: &Simplex, pairs: &[(usize, Simplex)]) -> HoleContact {
    let edges = t.faces().expect("triangle");
    let mut shared = Vec::new();
    let mut positions: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for e in edges {
        let hits: Vec<usize> = pairs
            .iter()
            .filter(|(_, pe)| *pe == e)
            .map(|(i, _)| *i)
            .collect();
        if !hits.is_empty() {
            shared.push(e.clone());
            positions.insert(e, hits);
        }
    }
    HoleContact { shared, positions }
}

fn edge_degree_is_one(residual: &SimplicialComplex, e: &Simplex, t: &Simplex) -> bool {
    let mut found = 0;
    for tri in residual.simplices(2) {
        if e.is_face_of(tri) {
            if tri != t {
                return false;
            }
            found += 1;
        }
    }
    found == 1
}

fn apex_is_free(residual: &SimplicialComplex, apex: VertexId, t: &Simplex) -> bool {
    for tri in residual.simplices(2) {
        if tri.contains_vertex(apex) && tri != t {
            return false;
        }
    }
    let allowed: Vec<Simplex> = t
        .faces()
        .expect("triangle")
        .into_iter()
        .filter(|e| e.contains_vertex(apex))
        .collect();
    for e in residual.simplices(1) {
        if e.contains_vertex(apex) && !allowed.contains(e) {
            return false;
        }
    }
    true
}

/// Operation I under the strictly simple boundary walk: `t` must border the
/// hole along exactly one edge, and the rerouted walk must not revisit a
/// vertex.
pub fn apply_op_i(st: &ReductionState, t: &Simplex) -> Result<ReductionState> {
    if t.dim() != 2 || !st.residual.contains(t) {
        return Err(Error::SimplexNotFound(t.clone()));
    }
    let pairs = walk_pairs(&st.hole_boundary);
    let contact = hole_contact(t, &pairs);
    if contact.shared.len() != 1 {
        return Err(Error::NotEligible(format!(
            "triangle {t} borders the hole along {} edges, operation I needs exactly one",
            contact.shared.len()
        )));
    }
    let e = contact.shared[0].clone();
    let hits = &contact.positions[&e];
    if hits.len() != 1 {
        return Err(Error::NotEligible(format!(
            "hole boundary traverses {e} more than once"
        )));
    }
    if !edge_degree_is_one(&st.residual, &e, t) {
        return Err(Error::NotEligible(format!("{e} still bounds another triangle")));
    }
    let w = *t
        .vertices()
        .iter()
        .find(|v| !e.contains_vertex(**v))
        .expect("triangle has a vertex off each edge");
    if st.hole_boundary.contains(&w) {
        return Err(Error::NotEligible(format!(
            "rerouting through {w} would revisit a boundary vertex"
        )));
    }
    Ok(perform_op_i(st, t, &e, hits[0], w))
}

fn perform_op_i(
    st: &ReductionState,
    t: &Simplex,
    e: &Simplex,
    pos: usize,
    w: VertexId,
) -> ReductionState {
    let mut next = st.clone();
    next.residual.remove_only(t);
    next.residual.remove_only(e);
    next.hole_boundary.insert(pos + 1, w);
    next.bump_removed(1);
    next.bump_removed(2);
    next
}

/// Operation II under the strictly simple boundary walk: `t` must border the
/// hole along exactly two edges meeting at a vertex that no other simplex
/// uses, and the shrunken walk must stay a closed cycle.
pub fn apply_op_ii(st: &ReductionState, t: &Simplex) -> Result<ReductionState> {
    if t.dim() != 2 || !st.residual.contains(t) {
        return Err(Error::SimplexNotFound(t.clone()));
    }
    let pairs = walk_pairs(&st.hole_boundary);
    let contact = hole_contact(t, &pairs);
    if contact.shared.len() != 2 {
        return Err(Error::NotEligible(format!(
            "triangle {t} borders the hole along {} edges, operation II needs exactly two",
            contact.shared.len()
        )));
    }
    let apex_pos = find_apex(&st.hole_boundary, t)
        .ok_or_else(|| Error::NotEligible(format!(
            "the two hole edges of {t} are not consecutive on the boundary"
        )))?;
    let apex = st.hole_boundary[apex_pos];
    if occurrences(&st.hole_boundary, apex) != 1 {
        return Err(Error::NotEligible(format!(
            "boundary visits {apex} more than once"
        )));
    }
    if st.hole_boundary.len() < 4 {
        return Err(Error::NotEligible(
            "removing the vertex would degenerate the boundary walk".into(),
        ));
    }
    let (e1, e2) = apex_edges(&st.hole_boundary, apex_pos);
    for e in [&e1, &e2] {
        if !edge_degree_is_one(&st.residual, e, t) {
            return Err(Error::NotEligible(format!("{e} still bounds another triangle")));
        }
    }
    if !apex_is_free(&st.residual, apex, t) {
        return Err(Error::VertexStillUsed(apex));
    }
    Ok(perform_op_ii(st, t, apex_pos))
}

/// Walk position whose vertex sits between two walk edges of `t`.
fn find_apex(walk: &[VertexId], t: &Simplex) -> Option<usize> {
    let n = walk.len();
    if n < 3 {
        return None;
    }
    (0..n).find(|&i| {
        let prev = walk[(i + n - 1) % n];
        let apex = walk[i];
        let next = walk[(i + 1) % n];
        if prev == next {
            return false;
        }
        t.contains_vertex(prev)
            && t.contains_vertex(apex)
            && t.contains_vertex(next)
            && Simplex::new([prev, apex]).map(|e| e.is_face_of(t)).unwrap_or(false)
            && Simplex::new([apex, next]).map(|e| e.is_face_of(t)).unwrap_or(false)
    })
}

fn apex_edges(walk: &[VertexId], apex_pos: usize) -> (Simplex, Simplex) {
    let n = walk.len();
    let prev = walk[(apex_pos + n - 1) % n];
    let apex = walk[apex_pos];
    let next = walk[(apex_pos + 1) % n];
    (
        Simplex::new([prev, apex]).expect("distinct"),
        Simplex::new([apex, next]).expect("distinct"),
    )
}

fn perform_op_ii(st: &ReductionState, t: &Simplex, apex_pos: usize) -> ReductionState {
    let (e1, e2) = apex_edges(&st.hole_boundary, apex_pos);
    let apex = st.hole_boundary[apex_pos];
    let mut next = st.clone();
    next.residual.remove_only(t);
    next.residual.remove_only(&e1);
    next.residual.remove_only(&e2);
    next.residual
        .remove_only(&Simplex::new([apex]).expect("vertex"));
    next.hole_boundary.remove(apex_pos);
    next.bump_removed(0);
    next.bump_removed(1);
    next.bump_removed(1);
    next.bump_removed(2);
    next
}

/// Operation III: collapses a dangling segment. `e` may not lie in any
/// triangle and must have an endpoint of degree one in the 1-skeleton; the
/// edge and that endpoint are removed.
pub fn apply_op_iii(st: &ReductionState, e: &Simplex) -> Result<ReductionState> {
    if e.dim() != 1 || !st.residual.contains(e) {
        return Err(Error::SimplexNotFound(e.clone()));
    }
    if st.residual.simplices(2).any(|t| e.is_face_of(t)) {
        return Err(Error::NotFree(e.clone()));
    }
    let degree = |v: VertexId| {
        st.residual
            .simplices(1)
            .filter(|f| f.contains_vertex(v))
            .count()
    };
    let free = e
        .vertices()
        .iter()
        .copied()
        .find(|&v| degree(v) == 1)
        .ok_or_else(|| Error::NotFree(e.clone()))?;
    let mut next = st.clone();
    next.residual.remove_only(e);
    next.residual
        .remove_only(&Simplex::new([free]).expect("vertex"));
    next.bump_removed(0);
    next.bump_removed(1);
    Ok(next)
}

/// Runs the whole reduction with default settings: canonical seed, strict
/// moves first, backtracking depth 8.
pub fn reduce(c: &SimplicialComplex) -> Result<ReductionTrace> {
    reduce_with(c, &ReductionConfig::default())
}

#[derive(Clone)]
struct Search {
    st: ReductionState,
    steps: Vec<ReductionStep>,
}

#[derive(Clone, Debug)]
enum EngineMove {
    /// Operation I keeping the boundary walk strictly simple.
    StrictI {
        t: Simplex,
        e: Simplex,
        pos: usize,
        w: VertexId,
    },
    /// Operation II keeping the boundary walk strictly simple.
    StrictII {
        t: Simplex,
        apex_pos: usize,
    },
    /// Operation II by star shape alone: the apex lies in nothing but `t`
    /// and its two edges. Ends walk tracking.
    FreeII {
        t: Simplex,
        apex: VertexId,
    },
    /// Operation I by edge degree alone: `e` bounds only `t`. Ends walk
    /// tracking.
    FreeI {
        t: Simplex,
        e: Simplex,
    },
}

struct Frame {
    before: Search,
    moves: Vec<EngineMove>,
    next: usize,
}

const SEARCH_CAP: usize = 500_000;

/// Runs the reduction: seed, a searched loop of operations I and II, then
/// exhaustive operation III.
pub fn reduce_with(c: &SimplicialComplex, config: &ReductionConfig) -> Result<ReductionTrace> {
    let original_chi = c.euler_characteristic()?;
    let st = seed(c, config.seed.as_ref())?;
    let seed_triangle = {
        // reconstruct which triangle the seed removed
        match &config.seed {
            Some(t) => t.clone(),
            None => c.simplices(2).next().expect("closed surface").clone(),
        }
    };
    let mut cur = Search {
        st,
        steps: vec![ReductionStep {
            kind: StepKind::Seed,
            removed: vec![seed_triangle],
            deltas: ReductionStep::expected_deltas(StepKind::Seed),
        }],
    };

    let mut frames: Vec<Frame> = Vec::new();
    let mut visited = 0usize;
    loop {
        visited += 1;
        if visited > SEARCH_CAP {
            return Err(Error::Stalled(Box::new(cur.st)));
        }
        if is_terminal(&cur.st) {
            break;
        }
        let moves = enumerate_moves(&cur.st);
        if let Some(first) = moves.first().cloned() {
            frames.push(Frame {
                before: cur.clone(),
                moves,
                next: 1,
            });
            apply_engine_move(&mut cur, &first);
            continue;
        }
        // dead end: retry alternatives, unwinding at most backtrack_depth
        // exhausted choice points
        let stuck = cur.st.clone();
        let mut pops = 0usize;
        loop {
            match frames.last_mut() {
                None => return Err(Error::Stalled(Box::new(stuck))),
                Some(f) if f.next < f.moves.len() => {
                    let mv = f.moves[f.next].clone();
                    f.next += 1;
                    cur = f.before.clone();
                    apply_engine_move(&mut cur, &mv);
                    break;
                }
                Some(_) => {
                    if pops >= config.backtrack_depth {
                        return Err(Error::Stalled(Box::new(stuck)));
                    }
                    frames.pop();
                    pops += 1;
                }
            }
        }
    }

    if cur.st.residual.counts().get(2) == 0 {
        cur.st.hole_boundary.clear();
    }
    collapse_dangling(&mut cur);

    let residual_chi = cur.st.residual.euler_characteristic()?;
    let total_chi = residual_chi + 1;
    debug_assert_eq!(total_chi, original_chi);
    Ok(ReductionTrace {
        steps: cur.steps,
        residual: cur.st.residual,
        residual_chi,
        total_chi,
    })
}

/// Done when no triangles remain, or exactly one remains and the residual is
/// precisely that triangle with its faces.
fn is_terminal(st: &ReductionState) -> bool {
    let counts = st.residual.counts();
    match counts.get(2) {
        0 => true,
        1 => counts == CountVector(vec![3, 3, 1]),
        _ => false,
    }
}

/// All applicable moves, best first. While the simple boundary walk can
/// make progress only its moves are offered, operation I before operation
/// II. Once it cannot, moves justified by the residual structure alone take
/// over: operation II at a vertex whose star is exactly one triangle, then
/// operation I on any edge bounding exactly one triangle, ordered to
/// strand as few triangle-free edges as possible.
fn enumerate_moves(st: &ReductionState) -> Vec<EngineMove> {
    let pairs = walk_pairs(&st.hole_boundary);
    let mut strict_i = Vec::new();
    let mut strict_ii = Vec::new();

    for t in st.residual.simplices(2) {
        let contact = hole_contact(t, &pairs);
        match contact.shared.len() {
            1 => {
                let e = contact.shared[0].clone();
                let hits = &contact.positions[&e];
                if hits.len() != 1 || !edge_degree_is_one(&st.residual, &e, t) {
                    continue;
                }
                let w = *t
                    .vertices()
                    .iter()
                    .find(|v| !e.contains_vertex(**v))
                    .expect("triangle");
                if !st.hole_boundary.contains(&w) {
                    strict_i.push(EngineMove::StrictI {
                        t: t.clone(),
                        e,
                        pos: hits[0],
                        w,
                    });
                }
            }
            2 => {
                if st.hole_boundary.len() < 4 {
                    continue;
                }
                let Some(apex_pos) = find_apex(&st.hole_boundary, t) else {
                    continue;
                };
                let apex = st.hole_boundary[apex_pos];
                if occurrences(&st.hole_boundary, apex) != 1 {
                    continue;
                }
                let (e1, e2) = apex_edges(&st.hole_boundary, apex_pos);
                if edge_degree_is_one(&st.residual, &e1, t)
                    && edge_degree_is_one(&st.residual, &e2, t)
                    && apex_is_free(&st.residual, apex, t)
                {
                    strict_ii.push(EngineMove::StrictII {
                        t: t.clone(),
                        apex_pos,
                    });
                }
            }
            _ => {}
        }
    }

    let mut moves = strict_i;
    moves.extend(strict_ii);

    let mut free_ii = Vec::new();
    let mut free_i: Vec<(usize, EngineMove)> = Vec::new();
    for t in st.residual.simplices(2) {
        for &apex in t.vertices() {
            if apex_is_free(&st.residual, apex, t) {
                free_ii.push(EngineMove::FreeII { t: t.clone(), apex });
            }
        }
        for e in t.faces().expect("triangle") {
            if !edge_degree_is_one(&st.residual, &e, t) {
                continue;
            }
            let stranded = t
                .faces()
                .expect("triangle")
                .into_iter()
                .filter(|f| *f != e && edge_degree_is_one(&st.residual, f, t))
                .count();
            free_i.push((stranded, EngineMove::FreeI { t: t.clone(), e }));
        }
    }
    free_i.sort_by_key(|m| m.0);
    moves.extend(free_ii);
    moves.extend(free_i.into_iter().map(|(_, mv)| mv));
    moves
}

fn apply_engine_move(search: &mut Search, mv: &EngineMove) {
    match mv {
        EngineMove::StrictI { t, e, pos, w } => {
            search.st = perform_op_i(&search.st, t, e, *pos, *w);
            search.steps.push(ReductionStep {
                kind: StepKind::OpI,
                removed: vec![t.clone(), e.clone()],
                deltas: ReductionStep::expected_deltas(StepKind::OpI),
            });
        }
        EngineMove::StrictII { t, apex_pos } => {
            let (e1, e2) = apex_edges(&search.st.hole_boundary, *apex_pos);
            let apex = search.st.hole_boundary[*apex_pos];
            search.st = perform_op_ii(&search.st, t, *apex_pos);
            search.steps.push(ReductionStep {
                kind: StepKind::OpII,
                removed: vec![
                    t.clone(),
                    e1,
                    e2,
                    Simplex::new([apex]).expect("vertex"),
                ],
                deltas: ReductionStep::expected_deltas(StepKind::OpII),
            });
        }
        EngineMove::FreeII { t, apex } => {
            let edges: Vec<Simplex> = t
                .faces()
                .expect("triangle")
                .into_iter()
                .filter(|e| e.contains_vertex(*apex))
                .collect();
            search.st.residual.remove_only(t);
            for e in &edges {
                search.st.residual.remove_only(e);
            }
            search
                .st
                .residual
                .remove_only(&Simplex::new([*apex]).expect("vertex"));
            search.st.hole_boundary.clear();
            search.st.bump_removed(0);
            search.st.bump_removed(1);
            search.st.bump_removed(1);
            search.st.bump_removed(2);
            let mut removed = vec![t.clone()];
            removed.extend(edges);
            removed.push(Simplex::new([*apex]).expect("vertex"));
            search.steps.push(ReductionStep {
                kind: StepKind::OpII,
                removed,
                deltas: ReductionStep::expected_deltas(StepKind::OpII),
            });
        }
        EngineMove::FreeI { t, e } => {
            search.st.residual.remove_only(t);
            search.st.residual.remove_only(e);
            search.st.hole_boundary.clear();
            search.st.bump_removed(1);
            search.st.bump_removed(2);
            search.steps.push(ReductionStep {
                kind: StepKind::OpI,
                removed: vec![t.clone(), e.clone()],
                deltas: ReductionStep::expected_deltas(StepKind::OpI),
            });
        }
    }
}

/// Exhaustive operation III, canonical order.
fn collapse_dangling(search: &mut Search) {
    loop {
        let candidate = search
            .st
            .residual
            .simplices(1)
            .find(|e| {
                !search.st.residual.simplices(2).any(|t| e.is_face_of(t))
                    && e.vertices().iter().any(|&v| {
                        search
                            .st
                            .residual
                            .simplices(1)
                            .filter(|f| f.contains_vertex(v))
                            .count()
                            == 1
                    })
            })
            .cloned();
        let Some(e) = candidate else { break };
        let next = apply_op_iii(&search.st, &e).expect("candidate checked");
        let freed: Vec<Simplex> = search
            .st
            .residual
            .simplices(0)
            .filter(|v| !next.residual().contains(v))
            .cloned()
            .collect();
        search.st = next;
        let mut removed = vec![e];
        removed.extend(freed);
        search.steps.push(ReductionStep {
            kind: StepKind::OpIII,
            removed,
            deltas: ReductionStep::expected_deltas(StepKind::OpIII),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build, ModelId};

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    fn tetra() -> SimplicialComplex {
        build(&ModelId::SphereTetra).unwrap()
    }

    #[test]
    fn seed_tetrahedron() {
        let st = seed(&tetra(), Some(&simplex(&[0, 1, 2]))).unwrap();
        assert_eq!(st.residual().counts(), CountVector(vec![4, 6, 3]));
        assert_eq!(st.hole_boundary(), &[VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(st.removed_counts(), &CountVector(vec![0, 0, 1]));
    }

    #[test]
    fn seed_torus_chi_bookkeeping() {
        let torus = build(&ModelId::Torus).unwrap();
        let st = seed(&torus, None).unwrap();
        assert_eq!(st.residual().euler_characteristic().unwrap(), -1);
        assert_eq!(st.removed_alternating(), 1);
    }

    #[test]
    fn seed_rejects_non_surfaces() {
        let triangle = SimplicialComplex::from_maximal([[0u32, 1, 2]]).unwrap();
        assert!(matches!(seed(&triangle, None), Err(Error::NotClosedSurface(_))));
        let pinched = build(&ModelId::PinchedTorus).unwrap();
        assert!(matches!(seed(&pinched, None), Err(Error::NotClosedSurface(_))));
        assert!(matches!(
            seed(&tetra(), Some(&simplex(&[0, 1, 9]))),
            Err(Error::SimplexNotFound(_))
        ));
    }

    #[test]
    fn op_i_reroutes_boundary() {
        let st = seed(&tetra(), Some(&simplex(&[0, 1, 2]))).unwrap();
        let st = apply_op_i(&st, &simplex(&[0, 1, 3])).unwrap();
        assert_eq!(
            st.hole_boundary(),
            &[VertexId(0), VertexId(3), VertexId(1), VertexId(2)]
        );
        assert!(!st.residual().contains(&simplex(&[0, 1])));
        assert!(!st.residual().contains(&simplex(&[0, 1, 3])));
        // running alternating sum is unchanged by the move
        assert_eq!(
            st.residual().euler_characteristic().unwrap() + st.removed_alternating(),
            2
        );
    }

    #[test]
    fn op_i_rejects_two_shared_edges() {
        let st = seed(&tetra(), Some(&simplex(&[0, 1, 2]))).unwrap();
        let st = apply_op_i(&st, &simplex(&[0, 1, 3])).unwrap();
        // both remaining triangles now touch the hole along two edges
        let err = apply_op_i(&st, &simplex(&[0, 2, 3])).unwrap_err();
        assert!(matches!(err, Error::NotEligible(_)));
    }

    #[test]
    fn op_ii_shrinks_boundary_to_triangle() {
        let st = seed(&tetra(), Some(&simplex(&[0, 1, 2]))).unwrap();
        let st = apply_op_i(&st, &simplex(&[0, 1, 3])).unwrap();
        let st = apply_op_ii(&st, &simplex(&[0, 2, 3])).unwrap();
        assert_eq!(st.hole_boundary(), &[VertexId(3), VertexId(1), VertexId(2)]);
        assert_eq!(st.residual().counts(), CountVector(vec![3, 3, 1]));
        assert_eq!(st.residual().euler_characteristic().unwrap(), 1);
    }

    #[test]
    fn op_ii_rejects_single_shared_edge() {
        let st = seed(&tetra(), Some(&simplex(&[0, 1, 2]))).unwrap();
        let err = apply_op_ii(&st, &simplex(&[0, 1, 3])).unwrap_err();
        assert!(matches!(err, Error::NotEligible(_)));
    }

    #[test]
    fn op_iii_collapses_path_graph() {
        let path = SimplicialComplex::from_maximal([[0u32, 1], [1, 2]]).unwrap();
        let st = ReductionState::over(path);
        let st = apply_op_iii(&st, &simplex(&[0, 1])).unwrap();
        assert_eq!(st.residual().counts(), CountVector(vec![2, 1]));
        let st = apply_op_iii(&st, &simplex(&[1, 2])).unwrap();
        assert_eq!(st.residual().counts(), CountVector(vec![1]));
    }

    #[test]
    fn op_iii_rejects_supported_edges() {
        let c = SimplicialComplex::from_maximal([[0u32, 1, 2]]).unwrap();
        let st = ReductionState::over(c);
        assert!(matches!(
            apply_op_iii(&st, &simplex(&[0, 1])),
            Err(Error::NotFree(_))
        ));
        let square = SimplicialComplex::from_maximal([[0u32, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let st = ReductionState::over(square);
        assert!(matches!(
            apply_op_iii(&st, &simplex(&[0, 1])),
            Err(Error::NotFree(_))
        ));
    }

    #[test]
    fn reduce_tetrahedron_to_last_triangle() {
        let trace = reduce(&tetra()).unwrap();
        assert_eq!(trace.residual.counts(), CountVector(vec![3, 3, 1]));
        assert_eq!(trace.residual_chi, 1);
        assert_eq!(trace.total_chi, 2);
        assert_eq!(trace.steps.len(), 3);
        assert_eq!(trace.steps[0].kind, StepKind::Seed);
        assert_eq!(trace.steps[1].kind, StepKind::OpI);
        assert_eq!(trace.steps[2].kind, StepKind::OpII);
    }

    #[test]
    fn reduce_cube_sphere_to_last_triangle() {
        let cube = build(&ModelId::SphereCube).unwrap();
        let trace = reduce(&cube).unwrap();
        assert_eq!(trace.residual.counts(), CountVector(vec![3, 3, 1]));
        assert_eq!(trace.total_chi, 2);
        // cross-check against the direct count
        assert_eq!(trace.total_chi, cube.euler_characteristic().unwrap());
    }

    #[test]
    fn reduce_torus_to_one_complex() {
        let torus = build(&ModelId::Torus).unwrap();
        let trace = reduce(&torus).unwrap();
        let counts = trace.residual.counts();
        assert_eq!(counts.get(2), 0, "residual must be a 1-complex");
        assert_eq!(counts.get(1), counts.get(0) + 1);
        assert_eq!(trace.residual_chi, -1);
        assert_eq!(trace.total_chi, 0);
    }

    #[test]
    fn reduce_respects_chosen_seed() {
        let t = simplex(&[1, 2, 3]);
        let config = ReductionConfig {
            seed: Some(t.clone()),
            backtrack_depth: 8,
        };
        let trace = reduce_with(&tetra(), &config).unwrap();
        assert_eq!(trace.steps[0].removed, vec![t]);
        assert_eq!(trace.total_chi, 2);
    }

    #[test]
    fn reduce_rejects_open_complexes() {
        let strip =
            SimplicialComplex::from_maximal([vec![0u32, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(matches!(reduce(&strip), Err(Error::NotClosedSurface(_))));
    }

    #[test]
    fn step_deltas_match_table() {
        for kind in [StepKind::Seed, StepKind::OpI, StepKind::OpII, StepKind::OpIII] {
            let (d0, d1, d2) = ReductionStep::expected_deltas(kind);
            let neutral = d0 - d1 + d2;
            match kind {
                StepKind::Seed => assert_eq!(neutral, -1),
                _ => assert_eq!(neutral, 0),
            }
        }
    }
}
