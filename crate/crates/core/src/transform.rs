//! Flip-only transformation between any two triangulations on the same
//! vertex set.
//!
//! Up to [`TransformOptions::exact_max_n`] vertices the sequence comes from a
//! bidirectional breadth-first search in the labeled flip graph and is a
//! shortest one. Above that, the highest-labelled vertex `n` is flipped down
//! to degree 3 in both graphs, the problem is solved recursively on the
//! remaining `n - 1` vertices, and each recursive flip is lifted back. When a
//! lifted flip would disturb the face holding `n`, the vertex is first
//! relocated to a nearby untouched face using [`relocation_as_flips`]; a final
//! relocation puts it in its target face.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::moves::{
    apply_sequence, edge_substitute, invert_sequence, plan_substitution, relocation_as_flips, Move,
    MoveSequence,
};
use crate::packed::{shortest_flip_path, MAX_PACKED_N};
use crate::triangulation::Triangulation;
use crate::types::{Edge, Face, VertexId};

#[derive(Clone, Debug)]
pub struct TransformOptions {
    /// Largest n solved by exact search. Clamped to `5..=11`.
    pub exact_max_n: usize,
    /// Maximum number of triangulations the exact search may visit.
    pub search_budget: usize,
}

impl Default for TransformOptions {
    fn default() -> Self {
        TransformOptions { exact_max_n: 8, search_budget: 20_000_000 }
    }
}

/// Edge substitutions taking `g` to `h`.
pub fn transform(g: &Triangulation, h: &Triangulation) -> Result<MoveSequence> {
    transform_with(g, h, &TransformOptions::default())
}

pub fn transform_with(g: &Triangulation, h: &Triangulation, options: &TransformOptions) -> Result<MoveSequence> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch { left: g.n(), right: h.n() });
    }
    if g == h {
        return Ok(MoveSequence::new());
    }
    let exact_max_n = options.exact_max_n.clamp(5, MAX_PACKED_N);
    let seq = if g.n() <= exact_max_n {
        shortest_flip_path(g, h, options.search_budget)?
            .into_iter()
            .map(Move::flip)
            .collect()
    } else {
        peel(g, h, options)?
    };
    let end = apply_sequence(g, &seq)?;
    if &end != h {
        return Err(Error::InternalContradiction("transform sequence misses its target".into()));
    }
    Ok(seq)
}

fn peel(g: &Triangulation, h: &Triangulation, options: &TransformOptions) -> Result<MoveSequence> {
    let v = g.n() as VertexId;
    let (g1, mut out) = lower_to_degree_three(g, v)?;
    let (h1, h_down) = lower_to_degree_three(h, v)?;
    let g_small = remove_degree_three(&g1, v)?;
    let h_small = remove_degree_three(&h1, v)?;
    let inner = transform_with(&g_small, &h_small, options)?;

    let mut cur = g1;
    let mut cur_small = g_small;
    for m in inner {
        let Move::EdgeSubstitution { edge } = m else {
            return Err(Error::InternalContradiction("transform produced a relocation".into()));
        };
        let touched = plan_substitution(&cur_small, edge)?.touched;
        let host = host_face(&cur, v)?;
        if touched.contains(&host) {
            let refuge = nearest_face_outside(&cur_small, host, &touched);
            let detour = relocation_as_flips(&cur, v, refuge)?;
            cur = apply_sequence(&cur, &detour)?;
            out.extend(detour);
        }
        cur = edge_substitute(&cur, edge)?.0;
        cur_small = edge_substitute(&cur_small, edge)?.0;
        out.push(m);
    }

    let target = host_face(&h1, v)?;
    if host_face(&cur, v)? != target {
        out.extend(relocation_as_flips(&cur, v, target)?);
    }
    out.extend(invert_sequence(h, &h_down)?);
    Ok(out)
}

/// Repeatedly substitutes a spoke `{v, x}` whose two link neighbors are not
/// adjacent, which lowers the degree of `v` by one each time. Such a spoke
/// exists whenever the degree exceeds 3, since the chords skipping `x` for
/// consecutive `x` would cross.
pub fn lower_to_degree_three(g: &Triangulation, v: VertexId) -> Result<(Triangulation, MoveSequence)> {
    let mut cur = g.clone();
    let mut seq = MoveSequence::new();
    while cur.degree(v)? > 3 {
        let link = cur.link_of_vertex(v)?;
        let k = link.len();
        let spoke = (0..k)
            .find(|&i| !cur.has_edge(Edge::of(link[(i + k - 1) % k], link[(i + 1) % k])))
            .map(|i| Edge::of(v, link[i]))
            .ok_or_else(|| Error::InternalContradiction(format!("no reducible spoke at vertex {v}")))?;
        cur = edge_substitute(&cur, spoke)?.0;
        seq.push(Move::flip(spoke));
    }
    Ok((cur, seq))
}

fn host_face(g: &Triangulation, v: VertexId) -> Result<Face> {
    let nb = g.neighbors(v)?;
    if nb.len() != 3 {
        return Err(Error::DegreeNot3 { vertex: v, degree: nb.len() });
    }
    Ok(Face::of(nb[0], nb[1], nb[2]))
}

/// Deletes the degree-3 vertex `v = n`, merging its three faces.
fn remove_degree_three(g: &Triangulation, v: VertexId) -> Result<Triangulation> {
    debug_assert_eq!(v as usize, g.n());
    let host = host_face(g, v)?;
    let mut faces: BTreeSet<Face> = g.faces().iter().copied().filter(|f| !f.contains(v)).collect();
    faces.insert(host);
    Triangulation::build(g.n() - 1, faces)
}

fn nearest_face_outside(g: &Triangulation, from: Face, excluded: &[Face]) -> Face {
    let dual = g.dual_graph();
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if !excluded.contains(&f) {
            return f;
        }
        for g in dual[&f] {
            if seen.insert(g) {
                queue.push_back(g);
            }
        }
    }
    unreachable!("a triangulation has more faces than a substitution touches")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_graphs_need_nothing() {
        let g = Triangulation::stacked(6).unwrap();
        assert!(transform(&g, &g).unwrap().is_empty());
        let k4 = Triangulation::stacked(4).unwrap();
        assert!(transform(&k4, &k4).unwrap().is_empty());
    }

    #[test]
    fn single_flip_is_found() {
        let faces = [[1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]];
        let g = Triangulation::build(5, faces.map(|[a, b, c]| Face::of(a, b, c))).unwrap();
        let (h, _) = edge_substitute(&g, Edge::of(1, 2)).unwrap();
        let seq = transform(&g, &h).unwrap();
        assert_eq!(seq.moves(), &[Move::flip(Edge::of(1, 2))]);
    }

    #[test]
    fn size_mismatch() {
        let g = Triangulation::stacked(5).unwrap();
        let h = Triangulation::stacked(6).unwrap();
        assert!(matches!(transform(&g, &h), Err(Error::SizeMismatch { left: 5, right: 6 })));
    }

    #[test]
    fn degree_lowering() {
        let g = Triangulation::stacked(8).unwrap();
        for v in g.vertices() {
            let (h, seq) = lower_to_degree_three(&g, v).unwrap();
            assert_eq!(h.degree(v).unwrap(), 3);
            assert_eq!(apply_sequence(&g, &seq).unwrap(), h);
            assert_eq!(seq.len(), g.degree(v).unwrap() - 3);
        }
    }

    #[test]
    fn peeling_reaches_target() {
        let g = Triangulation::stacked(7).unwrap();
        let mut h = g.clone();
        for e in [Edge::of(1, 2), Edge::of(3, 4), Edge::of(1, 4)] {
            if h.has_edge(e) {
                h = edge_substitute(&h, e).unwrap().0;
            }
        }
        let options = TransformOptions { exact_max_n: 5, ..Default::default() };
        let seq = transform_with(&g, &h, &options).unwrap();
        assert!(seq.is_flip_only());
        assert_eq!(apply_sequence(&g, &seq).unwrap(), h);
    }
}
