//! Vertex, edge and face labels.
//!
//! Vertices are 1-based. Edges and faces are unordered and always stored in
//! canonical (ascending) form, so derived `Ord` gives the lexicographic order
//! used for tie-breaking everywhere in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// Unordered pair of distinct vertices, smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[VertexId; 2]", into = "[VertexId; 2]")]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }

    /// Panics on a loop. For internal use where distinctness is structural.
    pub(crate) fn of(a: VertexId, b: VertexId) -> Self {
        Edge::new(a, b).expect("edge endpoints must be distinct")
    }

    pub fn lo(self) -> VertexId {
        self.0
    }

    pub fn hi(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: VertexId) -> Option<VertexId> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl TryFrom<[VertexId; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [VertexId; 2]) -> Result<Self> {
        Edge::new(a, b)
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        e.endpoints()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Unordered triple of distinct vertices, ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[VertexId; 3]", into = "[VertexId; 3]")]
pub struct Face([VertexId; 3]);

impl Face {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self> {
        let mut corners = [a, b, c];
        corners.sort_unstable();
        if corners[0] == corners[1] || corners[1] == corners[2] {
            return Err(Error::InvalidFace([a, b, c]));
        }
        Ok(Face(corners))
    }

    pub(crate) fn of(a: VertexId, b: VertexId, c: VertexId) -> Self {
        Face::new(a, b, c).expect("face corners must be distinct")
    }

    pub fn corners(self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn has_edge(self, e: Edge) -> bool {
        self.contains(e.lo()) && self.contains(e.hi())
    }

    pub fn edges(self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge(a, b), Edge(a, c), Edge(b, c)]
    }

    /// Corner opposite to `e`, if `e` is a side of this face.
    pub fn apex(self, e: Edge) -> Option<VertexId> {
        if !self.has_edge(e) {
            return None;
        }
        self.0.iter().copied().find(|&v| !e.contains(v))
    }

    /// The side shared with `other`, if the two faces are distinct and adjacent.
    pub fn shared_edge(self, other: Face) -> Option<Edge> {
        if self == other {
            return None;
        }
        self.edges().into_iter().find(|&e| other.has_edge(e))
    }
}

impl TryFrom<[VertexId; 3]> for Face {
    type Error = Error;

    fn try_from([a, b, c]: [VertexId; 3]) -> Result<Self> {
        Face::new(a, b, c)
    }
}

impl From<Face> for [VertexId; 3] {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}
