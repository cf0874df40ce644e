//! Planarity predicates.
//!
//! [`is_planar`] is a left-right (de Fraysseix–Rosenstiehl) planarity test
//! in its testing-only form: a DFS orientation pass computing lowpoints and
//! nesting depths, then a second DFS that maintains a stack of conflict
//! pairs of return-edge intervals. No embedding is produced; faces of
//! maximal planar graphs are recovered separately from their non-separating
//! triangles.

use std::collections::BTreeSet;

use crate::types::Edge;

const UNSET: usize = usize::MAX;

/// Whether the simple graph on `1..=n` with the given edges is planar.
///
/// Duplicate edges are ignored. Edges must have endpoints in `1..=n`.
pub fn is_planar<I>(n: usize, edges: I) -> bool
where
    I: IntoIterator<Item = Edge>,
{
    let edges: BTreeSet<Edge> = edges.into_iter().collect();
    debug_assert!(edges.iter().all(|e| e.lo() >= 1 && e.hi() as usize <= n));
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    if n <= 4 {
        return true;
    }
    LeftRight::new(n, &edges).run()
}

/// Whether the graph is planar with the maximum possible edge count.
pub fn is_maximal_planar<I>(n: usize, edges: I) -> bool
where
    I: IntoIterator<Item = Edge>,
{
    let edges: BTreeSet<Edge> = edges.into_iter().collect();
    if n < 3 {
        return edges.len() == n * n.saturating_sub(1) / 2;
    }
    edges.len() == 3 * n - 6 && is_connected(n, &edges) && is_planar(n, edges.iter().copied())
}

pub(crate) fn is_connected(n: usize, edges: &BTreeSet<Edge>) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    let mut components = n;
    for e in edges {
        let (a, b) = (find(&mut parent, e.lo() as usize), find(&mut parent, e.hi() as usize));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval { low: Some(e), high: Some(e) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LeftRight {
    adj: Vec<Vec<(usize, usize)>>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    oriented: Vec<bool>,
    // Per oriented edge.
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<usize>>,
    refs: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
}

impl LeftRight {
    fn new(n: usize, edges: &BTreeSet<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            let (a, b) = (e.lo() as usize - 1, e.hi() as usize - 1);
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        let m = edges.len();
        LeftRight {
            adj,
            height: vec![UNSET; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            oriented: vec![false; m],
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting: Vec::with_capacity(m),
            out_edges: vec![Vec::new(); n],
            stack_bottom: vec![0; m],
            lowpt_edge: vec![None; m],
            refs: vec![None; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        for v in 0..self.adj.len() {
            if self.height[v] == UNSET {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.out_edges.len() {
            let mut out = std::mem::take(&mut self.out_edges[v]);
            out.sort_by_key(|&e| self.nesting[e]);
            self.out_edges[v] = out;
        }
        let roots = std::mem::take(&mut self.roots);
        roots.into_iter().all(|root| self.test(root))
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let (w, undirected) = self.adj[v][i];
            if self.oriented[undirected] {
                continue;
            }
            self.oriented[undirected] = true;
            let vw = self.src.len();
            self.src.push(v);
            self.dst.push(w);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting.push(0);
            self.out_edges[v].push(vw);

            if self.height[w] == UNSET {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }

            self.nesting[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < self.height[v]);

            if let Some(e) = parent {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let out = self.out_edges[v].clone();
        for (i, &ei) in out.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair { left: Interval::default(), right: Interval::single(ei) });
            }

            if self.lowpt[ei] < self.height[v] {
                // Only non-root vertices have edges returning below them.
                let e = parent.expect("return edge below the root");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn conflicting(&self, interval: &Interval, edge: usize) -> bool {
        match interval.high {
            Some(h) => self.lowpt[h] > self.lowpt[edge],
            None => false,
        }
    }

    fn lowest(&self, pair: &ConflictPair) -> usize {
        match (pair.left.low, pair.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => UNSET,
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut merged = ConflictPair::default();

        // Return edges of ei go to the right.
        loop {
            let Some(mut q) = self.stack.pop() else {
                return false;
            };
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("nonempty interval has a low end");
            if self.lowpt[q_low] > self.lowpt[e] {
                if merged.right.is_empty() {
                    merged.right = q.right;
                } else if let Some(low) = merged.right.low {
                    self.refs[low] = q.right.high;
                }
                merged.right.low = q.right.low;
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }

        // Conflicting return edges of earlier siblings go to the left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if merged.right.is_empty() {
                merged.right = q.right;
            } else {
                if let Some(low) = merged.right.low {
                    self.refs[low] = q.right.high;
                }
                if q.right.low.is_some() {
                    merged.right.low = q.right.low;
                }
            }
            if merged.left.is_empty() {
                merged.left.high = q.left.high;
            } else if let Some(low) = merged.left.low {
                self.refs[low] = q.left.high;
            }
            merged.left.low = q.left.low;
        }

        if !(merged.left.is_empty() && merged.right.is_empty()) {
            self.stack.push(merged);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                self.stack.pop();
            } else {
                break;
            }
        }

        if let Some(mut pair) = self.stack.pop() {
            while let Some(h) = pair.left.high {
                if self.dst[h] != u {
                    break;
                }
                pair.left.high = self.refs[h];
            }
            if pair.left.high.is_none() {
                if let Some(low) = pair.left.low.take() {
                    self.refs[low] = pair.right.low;
                }
            }
            while let Some(h) = pair.right.high {
                if self.dst[h] != u {
                    break;
                }
                pair.right.high = self.refs[h];
            }
            if pair.right.high.is_none() {
                if let Some(low) = pair.right.low.take() {
                    self.refs[low] = pair.left.low;
                }
            }
            self.stack.push(pair);
        }

        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("edge with a return edge leaves a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }
}
