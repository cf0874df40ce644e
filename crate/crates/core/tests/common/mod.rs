#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use mwpsp::{edge_substitute, is_planar, Edge, Exact, ExactInstance, Face, Triangulation};
use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn edge(a: u32, b: u32) -> Edge {
    Edge::new(a, b).unwrap()
}

pub fn face(a: u32, b: u32, c: u32) -> Face {
    Face::new(a, b, c).unwrap()
}

pub fn path_edges(n: u32) -> BTreeSet<Edge> {
    (1..n).map(|v| edge(v, v + 1)).collect()
}

/// `steps` uniformly random flips starting from the stacked triangulation.
pub fn random_triangulation(n: usize, steps: usize, rng: &mut impl Rng) -> Triangulation {
    let mut g = Triangulation::stacked(n).unwrap();
    for _ in 0..steps {
        let e = *g.edges().iter().choose(rng).unwrap();
        g = edge_substitute(&g, e).unwrap().0;
    }
    g
}

/// Integer weights in `0..=max`, zero with probability one half.
pub fn random_instance(n: usize, max: i64, rng: &mut impl Rng) -> ExactInstance {
    let mut w = ExactInstance::new(n);
    for a in 1..=n as u32 {
        for b in a + 1..=n as u32 {
            if rng.gen_bool(0.5) {
                w.set(edge(a, b), Exact::from_integer(rng.gen_range(1..=max))).unwrap();
            }
        }
    }
    w
}

/// Structural checks written against the face list alone.
pub fn invariant_violations(g: &Triangulation) -> Vec<String> {
    let n = g.n();
    let mut problems = Vec::new();
    if g.edges().len() != 3 * n - 6 {
        problems.push(format!("|E| = {} != {}", g.edges().len(), 3 * n - 6));
    }
    if g.faces().len() != 2 * n - 4 {
        problems.push(format!("|F| = {} != {}", g.faces().len(), 2 * n - 4));
    }
    let mut incidence: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for f in g.faces() {
        let [a, b, c] = f.corners();
        if !(1 <= a && a < b && b < c && c as usize <= n) {
            problems.push(format!("bad face {a} {b} {c}"));
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            *incidence.entry((x, y)).or_default() += 1;
        }
    }
    for (&(a, b), &k) in &incidence {
        if k != 2 {
            problems.push(format!("edge {a}-{b} lies on {k} faces"));
        }
    }
    let from_faces: BTreeSet<(u32, u32)> = incidence.keys().copied().collect();
    let listed: BTreeSet<(u32, u32)> = g.edges().iter().map(|e| (e.lo(), e.hi())).collect();
    if from_faces != listed {
        problems.push("edge set differs from face boundaries".into());
    }
    if !is_planar(n, g.edges().iter().copied()) {
        problems.push("not planar".into());
    }
    problems
}
