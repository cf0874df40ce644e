//! Bitmask triangulations for flip-graph search.
//!
//! Edges live in a `u64` indexed by lexicographic pair rank, faces are
//! 3-bit vertex masks. Substitution follows the same two-case rule as
//! [`crate::moves::edge_substitute`] but skips re-validation, which the
//! move-closure property makes redundant; tests cross-check both paths.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::triangulation::Triangulation;
use crate::types::{Edge, Face, VertexId};

/// Largest vertex count whose pairs fit in a `u64`.
pub(crate) const MAX_PACKED_N: usize = 11;

/// Pair ranks for a fixed vertex count.
#[derive(Clone, Debug)]
pub(crate) struct PairTable {
    n: usize,
    rank: Vec<Vec<u8>>,
    pairs: Vec<(VertexId, VertexId)>,
}

impl PairTable {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n <= MAX_PACKED_N, "packed triangulations support n <= {MAX_PACKED_N}");
        let top = n as VertexId;
        let pairs: Vec<(VertexId, VertexId)> = (1..=top).flat_map(|a| (a + 1..=top).map(move |b| (a, b))).collect();
        let mut rank = vec![vec![u8::MAX; n + 1]; n + 1];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            rank[a as usize][b as usize] = i as u8;
            rank[b as usize][a as usize] = i as u8;
        }
        PairTable { n, rank, pairs }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn bit(&self, a: VertexId, b: VertexId) -> u64 {
        1u64 << self.rank[a as usize][b as usize]
    }

    pub(crate) fn edge(&self, rank: u32) -> Edge {
        let (a, b) = self.pairs[rank as usize];
        Edge::of(a, b)
    }

    pub(crate) fn mask_of(&self, edges: impl IntoIterator<Item = Edge>) -> u64 {
        edges.into_iter().fold(0, |acc, e| acc | self.bit(e.lo(), e.hi()))
    }
}

/// Iterates set bit positions, lowest first.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let r = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(r)
    }
}

fn vbit(v: VertexId) -> u16 {
    1 << (v - 1)
}

fn lone_vertex(mask: u16) -> VertexId {
    debug_assert_eq!(mask.count_ones(), 1);
    mask.trailing_zeros() + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Packed {
    pub(crate) edges: u64,
    faces: Vec<u16>,
}

impl Packed {
    pub(crate) fn from_triangulation(table: &PairTable, g: &Triangulation) -> Self {
        debug_assert_eq!(table.n(), g.n());
        let mut faces: Vec<u16> = g
            .faces()
            .iter()
            .map(|f| f.corners().iter().fold(0, |acc, &v| acc | vbit(v)))
            .collect();
        faces.sort_unstable();
        Packed { edges: table.mask_of(g.edges().iter().copied()), faces }
    }

    pub(crate) fn to_triangulation(&self, table: &PairTable) -> Result<Triangulation> {
        let faces = self.faces.iter().map(|&m| {
            let mut it = (0..16).filter(|i| m >> i & 1 == 1).map(|i| i as VertexId + 1);
            let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
            Face::of(a, b, c)
        });
        Triangulation::build(table.n(), faces)
    }

    fn faces_on(&self, pair: u16) -> Option<(u16, u16)> {
        let mut it = self.faces.iter().copied().filter(|&f| f & pair == pair);
        Some((it.next()?, it.next()?))
    }

    /// Edge substitution on the pair of rank `rank`. Returns the new state and
    /// the rank of the inserted edge.
    pub(crate) fn substitute(&self, table: &PairTable, rank: u32) -> Option<(Packed, u32)> {
        let (a, b) = table.pairs[rank as usize];
        let ab = vbit(a) | vbit(b);
        let (f1, f2) = self.faces_on(ab)?;
        let (c, d) = (f1 & !ab, f2 & !ab);
        let cd_bit = table.bit(lone_vertex(c), lone_vertex(d));
        let mut faces = self.faces.clone();
        let added_bit = if self.edges & cd_bit == 0 {
            faces.retain(|&f| f != f1 && f != f2);
            faces.extend([vbit(a) | c | d, vbit(b) | c | d]);
            cd_bit
        } else {
            let cd = c | d;
            let (g1, g2) = self.faces_on(cd)?;
            let (e, f) = (g1 & !cd, g2 & !cd);
            let ef_bit = table.bit(lone_vertex(e), lone_vertex(f));
            if e | f == ab || self.edges & ef_bit != 0 {
                return None;
            }
            faces.retain(|&x| x != f1 && x != f2 && x != g1 && x != g2);
            faces.extend([vbit(a) | c | d, vbit(b) | c | d, c | e | f, d | e | f]);
            ef_bit
        };
        faces.sort_unstable();
        let edges = (self.edges & !(1u64 << rank)) | added_bit;
        Some((Packed { edges, faces }, added_bit.trailing_zeros()))
    }
}

/// Breadth-first closure under edge substitution, deduplicated by edge set.
pub(crate) struct FlipClosure {
    table: PairTable,
    queue: VecDeque<Packed>,
    seen: HashSet<u64>,
    budget: usize,
    failed: bool,
}

impl FlipClosure {
    pub(crate) fn new(start: &Triangulation, budget: usize) -> Self {
        let table = PairTable::new(start.n());
        let first = Packed::from_triangulation(&table, start);
        let seen = HashSet::from([first.edges]);
        FlipClosure { table, queue: VecDeque::from([first]), seen, budget, failed: false }
    }

    pub(crate) fn table(&self) -> &PairTable {
        &self.table
    }

    pub(crate) fn discovered(&self) -> usize {
        self.seen.len()
    }
}

impl Iterator for FlipClosure {
    type Item = Result<Packed>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let state = self.queue.pop_front()?;
        if self.table.n() >= 5 {
            for rank in BitIter(state.edges) {
                let Some((next, _)) = state.substitute(&self.table, rank) else {
                    self.failed = true;
                    return Some(Err(Error::InternalContradiction(format!(
                        "substitution of {} failed during enumeration",
                        self.table.edge(rank)
                    ))));
                };
                if self.seen.insert(next.edges) {
                    if self.seen.len() > self.budget {
                        self.failed = true;
                        return Some(Err(Error::BudgetExceeded { budget: self.budget }));
                    }
                    self.queue.push_back(next);
                }
            }
        }
        Some(Ok(state))
    }
}

/// A shortest flip sequence between two triangulations, by bidirectional
/// breadth-first search in the labeled flip graph. Returns the edges to
/// substitute, in order.
pub(crate) fn shortest_flip_path(g: &Triangulation, h: &Triangulation, budget: usize) -> Result<Vec<Edge>> {
    let table = PairTable::new(g.n());
    let start = Packed::from_triangulation(&table, g);
    let goal = Packed::from_triangulation(&table, h);
    if start.edges == goal.edges {
        return Ok(Vec::new());
    }

    // state -> (parent state, edge rank to flip in the parent to get here)
    let mut fwd: HashMap<u64, Option<(u64, u32)>> = HashMap::from([(start.edges, None)]);
    // state -> (parent state, edge rank to flip here to get back to the parent)
    let mut bwd: HashMap<u64, Option<(u64, u32)>> = HashMap::from([(goal.edges, None)]);
    let mut fwd_frontier = vec![start];
    let mut bwd_frontier = vec![goal];

    let meet = 'search: loop {
        if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
            return Err(Error::InternalContradiction("flip graph is disconnected".into()));
        }
        let forward = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, seen, other) = if forward {
            (&mut fwd_frontier, &mut fwd, &bwd)
        } else {
            (&mut bwd_frontier, &mut bwd, &fwd)
        };
        let mut next_frontier = Vec::new();
        for state in frontier.iter() {
            for rank in BitIter(state.edges) {
                let (child, added) = state
                    .substitute(&table, rank)
                    .ok_or_else(|| Error::InternalContradiction("substitution failed during search".into()))?;
                let Entry::Vacant(slot) = seen.entry(child.edges) else {
                    continue;
                };
                slot.insert(Some((state.edges, if forward { rank } else { added })));
                if other.contains_key(&child.edges) {
                    break 'search child.edges;
                }
                next_frontier.push(child);
            }
        }
        if fwd.len() + bwd.len() > budget {
            return Err(Error::SearchExhausted { visited: fwd.len() + bwd.len() });
        }
        *frontier = next_frontier;
    };

    let mut head = Vec::new();
    let mut cur = meet;
    while let Some((parent, rank)) = fwd[&cur] {
        head.push(table.edge(rank));
        cur = parent;
    }
    head.reverse();
    let mut cur = meet;
    while let Some((parent, rank)) = bwd[&cur] {
        head.push(table.edge(rank));
        cur = parent;
    }
    Ok(head)
}
