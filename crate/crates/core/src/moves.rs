//! Edge substitution and vertex relocation.
//!
//! Both moves are expressed as set updates on the face set and the result
//! is re-validated through [`Triangulation::build`]. The second case of edge
//! substitution (the other diagonal already present) is applied as a
//! symmetric difference so that faces removed and re-added cancel when one
//! end of the substituted edge coincides with a corner of the far faces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangulation::{DualPath, Triangulation};
use crate::types::{Edge, Face, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum Move {
    /// Remove `edge` and insert the edge determined by its neighborhood.
    #[serde(rename = "flip")]
    EdgeSubstitution { edge: Edge },
    /// Move a degree-3 vertex into another face.
    #[serde(rename = "relocate")]
    VertexRelocation { vertex: VertexId, face: Face },
}

impl Move {
    pub fn flip(edge: Edge) -> Self {
        Move::EdgeSubstitution { edge }
    }

    pub fn relocate(vertex: VertexId, face: Face) -> Self {
        Move::VertexRelocation { vertex, face }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSequence(Vec<Move>);

impl MoveSequence {
    pub fn new() -> Self {
        MoveSequence(Vec::new())
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, m: Move) {
        self.0.push(m);
    }

    pub fn extend(&mut self, other: MoveSequence) {
        self.0.extend(other.0);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.0.iter()
    }

    pub fn is_flip_only(&self) -> bool {
        self.0.iter().all(|m| matches!(m, Move::EdgeSubstitution { .. }))
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }
}

impl From<Vec<Move>> for MoveSequence {
    fn from(moves: Vec<Move>) -> Self {
        MoveSequence(moves)
    }
}

impl FromIterator<Move> for MoveSequence {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSequence(iter.into_iter().collect())
    }
}

impl IntoIterator for MoveSequence {
    type Item = Move;
    type IntoIter = std::vec::IntoIter<Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a MoveSequence {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// What an edge substitution would do, before it is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionPlan {
    pub removed: Edge,
    pub added: Edge,
    /// Faces read by the move: two in the first case, four in the second.
    pub touched: Vec<Face>,
    /// Net face changes after cancellation.
    pub faces_out: Vec<Face>,
    pub faces_in: Vec<Face>,
}

impl SubstitutionPlan {
    pub fn is_second_case(&self) -> bool {
        self.touched.len() == 4
    }
}

fn require_moves_allowed(g: &Triangulation) -> Result<()> {
    if g.n() < 5 {
        Err(Error::TooSmall { n: g.n(), min: 5 })
    } else {
        Ok(())
    }
}

/// Works out the edge substitution on `e` without building the result.
pub fn plan_substitution(g: &Triangulation, e: Edge) -> Result<SubstitutionPlan> {
    require_moves_allowed(g)?;
    let (a, b) = (e.lo(), e.hi());
    let (c, d) = g.opposite_vertices(e)?;
    let cd = Edge::of(c, d);

    if !g.has_edge(cd) {
        return Ok(SubstitutionPlan {
            removed: e,
            added: cd,
            touched: vec![Face::of(a, b, c), Face::of(a, b, d)],
            faces_out: vec![Face::of(a, b, c), Face::of(a, b, d)],
            faces_in: vec![Face::of(a, c, d), Face::of(b, c, d)],
        });
    }

    let (e2, f2) = g.opposite_vertices(cd)?;
    let ef = Edge::of(e2, f2);
    if ef == e {
        return Err(Error::InternalContradiction(format!(
            "substituting {e} closes a K4 component, impossible with n >= 5"
        )));
    }
    if g.has_edge(ef) {
        return Err(Error::InternalContradiction(format!(
            "edge {ef} already present while substituting {e}; the graph would contain K3,3"
        )));
    }

    let out = [Face::of(a, b, c), Face::of(a, b, d), Face::of(c, d, e2), Face::of(c, d, f2)];
    let inn = [Face::of(a, c, d), Face::of(b, c, d), Face::of(c, e2, f2), Face::of(d, e2, f2)];
    let mut net: BTreeMap<Face, i32> = BTreeMap::new();
    for f in out {
        *net.entry(f).or_default() -= 1;
    }
    for f in inn {
        *net.entry(f).or_default() += 1;
    }
    Ok(SubstitutionPlan {
        removed: e,
        added: ef,
        touched: out.to_vec(),
        faces_out: net.iter().filter(|(_, &k)| k < 0).map(|(&f, _)| f).collect(),
        faces_in: net.iter().filter(|(_, &k)| k > 0).map(|(&f, _)| f).collect(),
    })
}

/// The edge that substituting `e` would insert.
pub fn substitution_target(g: &Triangulation, e: Edge) -> Result<Edge> {
    plan_substitution(g, e).map(|p| p.added)
}

/// Substitutes edge `e`; returns the new triangulation and the inserted edge.
pub fn edge_substitute(g: &Triangulation, e: Edge) -> Result<(Triangulation, Edge)> {
    let plan = plan_substitution(g, e)?;
    let mut faces = g.faces().clone();
    for f in &plan.faces_out {
        if !faces.remove(f) {
            return Err(Error::InternalContradiction(format!("face {f} missing during substitution")));
        }
    }
    for &f in &plan.faces_in {
        if !faces.insert(f) {
            return Err(Error::InternalContradiction(format!("face {f} duplicated during substitution")));
        }
    }
    let next = Triangulation::build(g.n(), faces)?;
    debug_assert!(next.has_edge(plan.added) && !next.has_edge(e));
    Ok((next, plan.added))
}

fn check_relocation(g: &Triangulation, u: VertexId, f: Face) -> Result<[VertexId; 3]> {
    require_moves_allowed(g)?;
    let degree = g.degree(u)?;
    if degree != 3 {
        return Err(Error::DegreeNot3 { vertex: u, degree });
    }
    if !g.has_face(f) {
        return Err(Error::FaceNotPresent(f));
    }
    let nb = g.neighbors(u)?;
    Ok([nb[0], nb[1], nb[2]])
}

/// Removes the degree-3 vertex `u` and reinserts it into face `f`. Returns
/// `g` unchanged when `u` is already a corner of `f`.
pub fn vertex_relocate(g: &Triangulation, u: VertexId, f: Face) -> Result<Triangulation> {
    let [a, b, c] = check_relocation(g, u, f)?;
    if f.contains(u) {
        return Ok(g.clone());
    }
    let [p, q, r] = f.corners();
    let mut faces = g.faces().clone();
    for old in [Face::of(a, b, u), Face::of(b, c, u), Face::of(a, c, u), f] {
        faces.remove(&old);
    }
    faces.extend([Face::of(a, b, c), Face::of(p, q, u), Face::of(q, r, u), Face::of(p, r, u)]);
    Triangulation::build(g.n(), faces)
}

/// The dual path that [`relocation_as_flips`] walks: from `f` to the nearest
/// face around `u`, all faces before the last avoiding `u`. Empty when `u`
/// is a corner of `f`.
pub fn relocation_path(g: &Triangulation, u: VertexId, f: Face) -> Result<DualPath> {
    check_relocation(g, u, f)?;
    if f.contains(u) {
        return g.dual_shortest_path(f, f, None);
    }
    let mut best: Option<DualPath> = None;
    for &target in g.faces().iter().filter(|t| t.contains(u)) {
        let path = match g.dual_shortest_path(f, target, Some(u)) {
            Ok(p) => p,
            Err(Error::NoPath { .. }) => g.dual_shortest_path(f, target, None)?,
            Err(e) => return Err(e),
        };
        let better = match &best {
            None => true,
            Some(b) => (path.len(), path.faces()) < (b.len(), b.faces()),
        };
        if better {
            best = Some(path);
        }
    }
    let path = best.expect("degree-3 vertex lies on three faces");
    // Stop at the first face around u; the proof's retargeting rule.
    let cut = path.faces().iter().position(|x| x.contains(u)).expect("path ends at a face around u");
    Ok(DualPath::from_faces(path.faces()[..=cut].to_vec()))
}

/// Compiles the vertex relocation `(u, f)` into edge substitutions only.
///
/// Each step takes the last two faces of the dual path, `{a,b,d}` avoiding
/// `u` and `{a,b,u}` around it, and substitutes `{a,b}` then `{c,u}` with
/// `c` the third neighbor of `u`. That moves `u` into `{a,b,d}` and shortens
/// the path by one, so the sequence has twice the path length.
pub fn relocation_as_flips(g: &Triangulation, u: VertexId, f: Face) -> Result<MoveSequence> {
    let path = relocation_path(g, u, f)?;
    let mut faces = path.faces().to_vec();
    let mut cur = g.clone();
    let mut out = MoveSequence::new();

    while faces.len() > 1 {
        let s = faces.len() - 1;
        let (prev, last) = (faces[s - 1], faces[s]);
        let ab = prev.shared_edge(last).ok_or_else(|| {
            Error::InternalContradiction(format!("dual path faces {prev} and {last} are not adjacent"))
        })?;
        if prev.contains(u) || !last.contains(u) {
            return Err(Error::InternalContradiction(format!("dual path step {prev} -> {last} misplaced")));
        }
        let c = cur
            .neighbors(u)?
            .iter()
            .copied()
            .find(|&x| !ab.contains(x))
            .expect("u has a neighbor off the shared edge");
        let cu = Edge::of(c, u);

        cur = edge_substitute(&cur, ab)?.0;
        cur = edge_substitute(&cur, cu)?.0;
        out.push(Move::flip(ab));
        out.push(Move::flip(cu));

        if s == 1 {
            break;
        }
        let before = faces[s - 2];
        let link = before.shared_edge(prev).expect("consecutive path faces share an edge");
        let (f1, f2) = cur.faces_of_edge(link)?;
        let next_last = if f1 == before { f2 } else { f1 };
        if !next_last.contains(u) {
            return Err(Error::InternalContradiction(format!(
                "after moving {u} the face across {link} is {next_last}"
            )));
        }
        faces.truncate(s - 1);
        faces.push(next_last);
    }
    Ok(out)
}

pub fn apply_move(g: &Triangulation, m: &Move) -> Result<Triangulation> {
    match *m {
        Move::EdgeSubstitution { edge } => edge_substitute(g, edge).map(|(next, _)| next),
        Move::VertexRelocation { vertex, face } => vertex_relocate(g, vertex, face),
    }
}

/// Applies the moves left to right; each intermediate is fully validated.
pub fn apply_sequence(g: &Triangulation, seq: &MoveSequence) -> Result<Triangulation> {
    let mut cur = g.clone();
    for (index, m) in seq.iter().enumerate() {
        cur = apply_move(&cur, m).map_err(|e| Error::MoveFailed { index, source: Box::new(e) })?;
    }
    Ok(cur)
}

/// A sequence taking `apply_sequence(g, seq)` back to `g`.
pub fn invert_sequence(g: &Triangulation, seq: &MoveSequence) -> Result<MoveSequence> {
    let mut cur = g.clone();
    let mut inverse = Vec::with_capacity(seq.len());
    for (index, m) in seq.iter().enumerate() {
        let wrap = |e| Error::MoveFailed { index, source: Box::new(e) };
        match *m {
            Move::EdgeSubstitution { edge } => {
                let (next, added) = edge_substitute(&cur, edge).map_err(wrap)?;
                inverse.push(Move::flip(added));
                cur = next;
            }
            Move::VertexRelocation { vertex, face } => {
                let next = vertex_relocate(&cur, vertex, face).map_err(wrap)?;
                let back = if face.contains(vertex) {
                    face
                } else {
                    let nb = cur.neighbors(vertex).map_err(wrap)?;
                    Face::of(nb[0], nb[1], nb[2])
                };
                inverse.push(Move::relocate(vertex, back));
                cur = next;
            }
        }
    }
    inverse.reverse();
    Ok(MoveSequence(inverse))
}
