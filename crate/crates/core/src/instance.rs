use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::types::{Edge, VertexId};

/// Nonnegative edge weights on the complete graph over `1..=n`.
///
/// Pairs without an entry weigh zero, so every maximal planar graph on the
/// vertex set is a feasible solution. Zero entries are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedInstance<W> {
    n: usize,
    weights: BTreeMap<Edge, W>,
}

impl<W: Weight> WeightedInstance<W> {
    pub fn new(n: usize) -> Self {
        WeightedInstance { n, weights: BTreeMap::new() }
    }

    pub fn from_weights<I>(n: usize, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, W)>,
    {
        let mut instance = WeightedInstance::new(n);
        for (e, w) in weights {
            instance.set(e, w)?;
        }
        Ok(instance)
    }

    /// Every pair of `1..=n` gets weight `w`.
    pub fn uniform(n: usize, w: W) -> Self {
        let mut instance = WeightedInstance::new(n);
        for e in all_pairs(n) {
            instance.set(e, w.clone()).expect("uniform weight is admissible");
        }
        instance
    }

    pub fn set(&mut self, e: Edge, w: W) -> Result<()> {
        if e.lo() == 0 || e.hi() as usize > self.n {
            return Err(Error::VertexOutOfRange { vertex: e.hi().max(e.lo()), n: self.n });
        }
        if !w.is_admissible() {
            return Err(Error::InvalidWeight { edge: e });
        }
        if w.is_zero() {
            self.weights.remove(&e);
        } else {
            self.weights.insert(e, w);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, e: Edge) -> W {
        self.weights.get(&e).cloned().unwrap_or_else(W::zero)
    }

    /// Positive-weight entries in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, &W)> {
        self.weights.iter().map(|(&e, w)| (e, w))
    }

    pub fn max_weight(&self) -> W {
        self.weights
            .values()
            .fold(W::zero(), |acc, w| if *w > acc { w.clone() } else { acc })
    }

    /// Pointwise sum of two instances over the same vertex set.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (e, w) in other.iter() {
            out.set(e, out.weight(e) + w.clone())?;
        }
        Ok(out)
    }

    /// All pairs sorted by descending weight, lexicographic among ties.
    pub(crate) fn pairs_by_weight(&self) -> Vec<(Edge, W)> {
        let mut pairs: Vec<(Edge, W)> = all_pairs(self.n).map(|e| (e, self.weight(e))).collect();
        pairs.sort_by(|(e1, w1), (e2, w2)| {
            w2.partial_cmp(w1).unwrap_or(std::cmp::Ordering::Equal).then(e1.cmp(e2))
        });
        pairs
    }
}

/// Every pair of distinct vertices in `1..=n`, lexicographically.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Edge> {
    let n = n as VertexId;
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| Edge::of(a, b)))
}
