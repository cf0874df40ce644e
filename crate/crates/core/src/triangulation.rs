//! Validated maximal planar graphs stored as a face set.
//!
//! A [`Triangulation`] on vertices `1..=n` holds its edge set, its face set
//! (unoriented triangles) and an index from every edge to its two faces.
//! Values are immutable; moves build new values through the validating
//! constructor.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::planarity::{is_connected, is_planar};
use crate::scalar::Weight;
use crate::types::{Edge, Face, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationFile", into = "TriangulationFile")]
pub struct Triangulation {
    n: usize,
    edges: BTreeSet<Edge>,
    faces: BTreeSet<Face>,
    edge_faces: BTreeMap<Edge, [Face; 2]>,
    adjacency: Vec<Vec<VertexId>>,
}

/// On-disk shape: `{"n": 5, "faces": [[1,2,4], ...]}`, faces sorted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub n: usize,
    pub faces: Vec<[VertexId; 3]>,
}

impl TryFrom<TriangulationFile> for Triangulation {
    type Error = Error;

    fn try_from(file: TriangulationFile) -> Result<Self> {
        let faces = file
            .faces
            .into_iter()
            .map(Face::try_from)
            .collect::<Result<Vec<_>>>()?;
        Triangulation::build(file.n, faces)
    }
}

impl From<Triangulation> for TriangulationFile {
    fn from(g: Triangulation) -> Self {
        TriangulationFile {
            n: g.n,
            faces: g.faces.iter().map(|f| f.corners()).collect(),
        }
    }
}

/// A walk through the dual graph: consecutive faces share an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPath(Vec<Face>);

impl DualPath {
    pub(crate) fn from_faces(faces: Vec<Face>) -> Self {
        debug_assert!(!faces.is_empty());
        DualPath(faces)
    }

    pub fn faces(&self) -> &[Face] {
        &self.0
    }

    /// Number of steps, i.e. faces minus one.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shared_edges(&self) -> Vec<Edge> {
        self.0
            .windows(2)
            .map(|w| w[0].shared_edge(w[1]).expect("consecutive dual path faces are adjacent"))
            .collect()
    }
}

impl Triangulation {
    /// Validating constructor.
    pub fn build<I>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        if n < 4 {
            return Err(Error::TooSmall { n, min: 4 });
        }
        let mut face_set = BTreeSet::new();
        for f in faces {
            for v in f.corners() {
                if v == 0 || v as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if !face_set.insert(f) {
                return Err(Error::DuplicateFace(f));
            }
        }

        let mut incidence: BTreeMap<Edge, Vec<Face>> = BTreeMap::new();
        for &f in &face_set {
            for e in f.edges() {
                incidence.entry(e).or_default().push(f);
            }
        }

        let (expected_edges, expected_faces) = (3 * n - 6, 2 * n - 4);
        if incidence.len() != expected_edges || face_set.len() != expected_faces {
            return Err(Error::EulerViolation {
                edges: incidence.len(),
                faces: face_set.len(),
                expected_edges,
                expected_faces,
            });
        }

        let mut edge_faces = BTreeMap::new();
        for (e, fs) in incidence {
            match fs.as_slice() {
                &[f1, f2] => {
                    edge_faces.insert(e, [f1.min(f2), f1.max(f2)]);
                }
                _ => return Err(Error::NonManifold { edge: e, count: fs.len() }),
            }
        }
        let edges: BTreeSet<Edge> = edge_faces.keys().copied().collect();

        if !is_connected(n, &edges) {
            return Err(Error::Disconnected);
        }
        if !is_planar(n, edges.iter().copied()) {
            return Err(Error::NotPlanar);
        }

        let mut adjacency = vec![Vec::new(); n + 1];
        for e in &edges {
            adjacency[e.lo() as usize].push(e.hi());
            adjacency[e.hi() as usize].push(e.lo());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let g = Triangulation { n, edges, faces: face_set, edge_faces, adjacency };
        // Every vertex link must be a single cycle, otherwise the face set
        // describes a pinched surface rather than the sphere.
        for v in 1..=n as VertexId {
            g.link_of_vertex(v)?;
        }
        Ok(g)
    }

    /// Builds a triangulation from a maximal planar edge set, recovering the
    /// faces as the non-separating triangles.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n < 4 {
            return Err(Error::TooSmall { n, min: 4 });
        }
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.hi() as usize > n || e.lo() == 0 {
                return Err(Error::VertexOutOfRange { vertex: e.hi().max(e.lo()), n });
            }
        }
        if edges.len() != 3 * n - 6 {
            return Err(Error::EulerViolation {
                edges: edges.len(),
                faces: 0,
                expected_edges: 3 * n - 6,
                expected_faces: 2 * n - 4,
            });
        }
        if !is_connected(n, &edges) {
            return Err(Error::Disconnected);
        }
        if !is_planar(n, edges.iter().copied()) {
            return Err(Error::NotPlanar);
        }
        let mut adjacency = vec![BTreeSet::new(); n + 1];
        for e in &edges {
            adjacency[e.lo() as usize].insert(e.hi());
            adjacency[e.hi() as usize].insert(e.lo());
        }
        let mut faces = Vec::new();
        for a in 1..=n as VertexId {
            for &b in adjacency[a as usize].range(a + 1..) {
                for &c in adjacency[b as usize].range(b + 1..) {
                    if adjacency[a as usize].contains(&c) && !separates(n, &adjacency, [a, b, c]) {
                        faces.push(Face::of(a, b, c));
                    }
                }
            }
        }
        Triangulation::build(n, faces)
    }

    /// K4 on `{1,2,3,4}`, then each vertex `k = 5..=n` inserted into face
    /// `{1, 2, k-1}`.
    pub fn stacked(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooSmall { n, min: 4 });
        }
        let mut faces: BTreeSet<Face> =
            [Face::of(1, 2, 3), Face::of(1, 2, 4), Face::of(1, 3, 4), Face::of(2, 3, 4)].into();
        for k in 5..=n as VertexId {
            faces.remove(&Face::of(1, 2, k - 1));
            faces.insert(Face::of(1, 2, k));
            faces.insert(Face::of(1, k - 1, k));
            faces.insert(Face::of(2, k - 1, k));
        }
        Triangulation::build(n, faces)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn has_face(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n as VertexId
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v == 0 || v as usize > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v as usize])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// The two faces on `e`, lexicographically ordered.
    pub fn faces_of_edge(&self, e: Edge) -> Result<(Face, Face)> {
        self.edge_faces
            .get(&e)
            .map(|&[f1, f2]| (f1, f2))
            .ok_or(Error::EdgeNotPresent(e))
    }

    /// Third corners of the two faces on `e`, ascending.
    pub fn opposite_vertices(&self, e: Edge) -> Result<(VertexId, VertexId)> {
        let (f1, f2) = self.faces_of_edge(e)?;
        let c = f1.apex(e).expect("incident face contains the edge");
        let d = f2.apex(e).expect("incident face contains the edge");
        Ok((c.min(d), c.max(d)))
    }

    /// Neighbors of `v` in the cyclic order of the faces around it, starting
    /// at the smallest neighbor and heading toward the smaller of its two
    /// link neighbors.
    pub fn link_of_vertex(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        let mut link: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &f in self.faces.iter().filter(|f| f.contains(v)) {
            let [x, y] = other_two(f, v);
            link.entry(x).or_default().push(y);
            link.entry(y).or_default().push(x);
        }
        let degree = self.adjacency[v as usize].len();
        if link.len() != degree || degree < 3 || link.values().any(|adj| adj.len() != 2) {
            return Err(Error::InternalContradiction(format!("link of vertex {v} is not a cycle")));
        }
        let start = *link.keys().next().expect("degree >= 3");
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *link[&start].iter().min().expect("two link neighbors");
        while cur != start {
            cycle.push(cur);
            let next = link[&cur].iter().copied().find(|&x| x != prev).expect("two link neighbors");
            prev = cur;
            cur = next;
            if cycle.len() > degree {
                break;
            }
        }
        if cycle.len() != degree {
            return Err(Error::InternalContradiction(format!(
                "link of vertex {v} splits into several cycles"
            )));
        }
        Ok(cycle)
    }

    /// Face adjacency: each face maps to its three neighbors, sorted.
    pub fn dual_graph(&self) -> BTreeMap<Face, [Face; 3]> {
        self.faces
            .iter()
            .map(|&f| (f, self.dual_neighbors(f)))
            .collect()
    }

    fn dual_neighbors(&self, f: Face) -> [Face; 3] {
        let mut out = f.edges().map(|e| {
            let [f1, f2] = self.edge_faces[&e];
            if f1 == f {
                f2
            } else {
                f1
            }
        });
        out.sort_unstable();
        out
    }

    /// Shortest face sequence from `src` to `dst` by breadth-first search
    /// over the dual graph, visiting neighbors in lexicographic order. With
    /// `avoid`, faces strictly between the endpoints never contain that
    /// vertex.
    pub fn dual_shortest_path(&self, src: Face, dst: Face, avoid: Option<VertexId>) -> Result<DualPath> {
        for f in [src, dst] {
            if !self.has_face(f) {
                return Err(Error::FaceNotPresent(f));
            }
        }
        if src == dst {
            return Ok(DualPath(vec![src]));
        }
        let mut parent: BTreeMap<Face, Face> = BTreeMap::new();
        let mut queue = VecDeque::from([src]);
        while let Some(f) = queue.pop_front() {
            if f != src && avoid.is_some_and(|u| f.contains(u)) {
                continue;
            }
            for g in self.dual_neighbors(f) {
                if g == src || parent.contains_key(&g) {
                    continue;
                }
                parent.insert(g, f);
                if g == dst {
                    let mut path = vec![dst];
                    let mut cur = dst;
                    while cur != src {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Ok(DualPath(path));
                }
                queue.push_back(g);
            }
        }
        Err(Error::NoPath { from: src, to: dst })
    }

    /// Total weight of the edges, absent instance edges counting zero.
    pub fn weight<W: Weight>(&self, instance: &WeightedInstance<W>) -> Result<W> {
        if instance.n() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: instance.n() });
        }
        Ok(self
            .edges
            .iter()
            .fold(W::zero(), |acc, &e| acc + instance.weight(e)))
    }

    /// Sorted edge list as `1-2,1-3,...`. Equal keys iff equal edge sets.
    pub fn canonical_key(&self) -> Vec<u8> {
        let parts: Vec<String> = self.edges.iter().map(|e| format!("{}-{}", e.lo(), e.hi())).collect();
        parts.join(",").into_bytes()
    }

    /// Faces with a coherent orientation of the sphere, each rotated to start
    /// at its smallest corner. The smallest face keeps ascending order.
    pub fn oriented_faces(&self) -> Vec<[VertexId; 3]> {
        let mut oriented: BTreeMap<Face, [VertexId; 3]> = BTreeMap::new();
        let first = *self.faces.iter().next().expect("nonempty face set");
        oriented.insert(first, first.corners());
        let mut queue = VecDeque::from([first]);
        while let Some(f) = queue.pop_front() {
            let cycle = oriented[&f];
            for i in 0..3 {
                let (x, y) = (cycle[i], cycle[(i + 1) % 3]);
                let [f1, f2] = self.edge_faces[&Edge::of(x, y)];
                let g = if f1 == f { f2 } else { f1 };
                if oriented.contains_key(&g) {
                    continue;
                }
                let z = g.apex(Edge::of(x, y)).expect("adjacent face");
                oriented.insert(g, rotate_min([y, x, z]));
                queue.push_back(g);
            }
        }
        oriented.into_values().collect()
    }
}

fn other_two(f: Face, v: VertexId) -> [VertexId; 2] {
    let mut it = f.corners().into_iter().filter(|&x| x != v);
    [it.next().expect("face has three corners"), it.next().expect("face has three corners")]
}

fn rotate_min(c: [VertexId; 3]) -> [VertexId; 3] {
    let i = (0..3).min_by_key(|&i| c[i]).expect("three corners");
    [c[i], c[(i + 1) % 3], c[(i + 2) % 3]]
}

/// Whether deleting the triangle's corners disconnects the rest.
fn separates(n: usize, adjacency: &[BTreeSet<VertexId>], tri: [VertexId; 3]) -> bool {
    let Some(start) = (1..=n as VertexId).find(|v| !tri.contains(v)) else {
        return false;
    };
    let mut seen = vec![false; n + 1];
    seen[start as usize] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v as usize] {
            if !seen[w as usize] && !tri.contains(&w) {
                seen[w as usize] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached != n - 3
}
