use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::planarity::is_planar;
use crate::scalar::Weight;
use crate::spanning::maximum_spanning_tree;
use crate::triangulation::Triangulation;

/// Starts from a maximum spanning tree and adds the remaining pairs in
/// descending weight order whenever the result stays planar. Ties break
/// lexicographically.
pub fn mst_greedy<W: Weight>(instance: &WeightedInstance<W>) -> Result<Triangulation> {
    let n = instance.n();
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let target = 3 * n - 6;
    let mut edges: BTreeSet<_> = maximum_spanning_tree(instance).edges().clone();
    for (e, _) in instance.pairs_by_weight() {
        if edges.len() == target {
            break;
        }
        if edges.contains(&e) {
            continue;
        }
        edges.insert(e);
        if !is_planar(n, edges.iter().copied()) {
            edges.remove(&e);
        }
    }
    Triangulation::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::solver::counterexample_instance;
    use crate::spanning::SpanningTree;

    #[test]
    fn contains_the_spanning_tree() {
        let w: WeightedInstance<Exact> = counterexample_instance();
        let g = mst_greedy(&w).unwrap();
        assert!(SpanningTree::path(8).edges().iter().all(|&e| g.has_edge(e)));
        assert_eq!(g.edges().len(), 18);
    }

    #[test]
    fn zero_weights_still_triangulate() {
        for n in 4..12 {
            let w: WeightedInstance<f64> = WeightedInstance::new(n);
            assert_eq!(mst_greedy(&w).unwrap().edges().len(), 3 * n - 6);
        }
    }

    #[test]
    fn too_small() {
        let w: WeightedInstance<f64> = WeightedInstance::new(3);
        assert!(matches!(mst_greedy(&w), Err(Error::TooSmall { .. })));
    }
}
