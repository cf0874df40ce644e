use crate::instance::WeightedInstance;
use crate::scalar::Weight;
use crate::spanning::SpanningTree;
use crate::triangulation::Triangulation;
use crate::types::Edge;

const HEAVY: [(u32, u32); 7] = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)];
const LIGHT: [(u32, u32); 12] = [
    (1, 3), (1, 4), (1, 5), (1, 8), (2, 5), (2, 6),
    (2, 8), (3, 6), (3, 8), (4, 6), (4, 7), (5, 7),
];

/// Eight-vertex instance whose unique maximum spanning tree, the path
/// `1-2-...-8`, lies in no optimal planar subgraph. Path edges weigh 2, twelve
/// further edges weigh 1, everything else 0.
pub fn counterexample_instance<W: Weight>() -> WeightedInstance<W> {
    let heavy = HEAVY.iter().map(|&(a, b)| (Edge::of(a, b), W::from_u32(2)));
    let light = LIGHT.iter().map(|&(a, b)| (Edge::of(a, b), W::from_u32(1)));
    WeightedInstance::from_weights(8, heavy.chain(light)).expect("fixed instance is valid")
}

pub fn counterexample_path() -> SpanningTree {
    SpanningTree::path(8)
}

/// The weight-24 optimum: every positive edge except `{7,8}`.
pub fn counterexample_optimum() -> Triangulation {
    let edges = HEAVY[..6].iter().chain(LIGHT.iter()).map(|&(a, b)| Edge::of(a, b));
    Triangulation::from_edges(8, edges).expect("optimum edge set is maximal planar")
}
