use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::planarity::{find, is_connected};
use crate::scalar::Weight;
use crate::types::Edge;

/// A spanning tree on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTree {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl SpanningTree {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| e.lo() == 0 || e.hi() as usize > n) {
            return Err(Error::VertexOutOfRange { vertex: e.hi(), n });
        }
        if n == 0 || edges.len() != n - 1 || !is_connected(n, &edges) {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree { n, edges })
    }

    /// The path `1-2-...-n`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n as u32).map(|v| Edge::of(v, v + 1)).collect();
        SpanningTree { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn weight<W: Weight>(&self, instance: &WeightedInstance<W>) -> W {
        self.edges.iter().fold(W::zero(), |acc, &e| acc + instance.weight(e))
    }
}

/// Greedy (Kruskal) maximum spanning tree over all pairs, heaviest first and
/// lexicographic among ties. Zero-weight pairs fill in when the positive
/// edges do not connect the vertex set.
pub fn maximum_spanning_tree<W: Weight>(instance: &WeightedInstance<W>) -> SpanningTree {
    kruskal(instance, true).expect("complete graph always spans")
}

/// As [`maximum_spanning_tree`] but restricted to positive-weight edges.
pub fn maximum_spanning_tree_positive<W: Weight>(instance: &WeightedInstance<W>) -> Result<SpanningTree> {
    kruskal(instance, false)
}

fn kruskal<W: Weight>(instance: &WeightedInstance<W>, zero_fillers: bool) -> Result<SpanningTree> {
    let n = instance.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    let mut edges = BTreeSet::new();
    for (e, w) in instance.pairs_by_weight() {
        if edges.len() + 1 == n.max(1) {
            break;
        }
        if w.is_zero() && !zero_fillers {
            break;
        }
        let (a, b) = (find(&mut parent, e.lo() as usize), find(&mut parent, e.hi() as usize));
        if a != b {
            parent[a] = b;
            edges.insert(e);
        }
    }
    if edges.len() + 1 != n.max(1) {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree { n, edges })
}
