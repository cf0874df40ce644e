//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{invariant_violations, path_edges, random_instance, random_triangulation, rng};
use mwpsp::solver::{
    counterexample_instance, count_triangulations, exact_mwpsp, is_flip_local_optimum, local_search, mst_greedy,
    no_optimum_contains, Policy,
};
use mwpsp::{
    apply_move, apply_sequence, edge_substitute, lower_to_degree_three, maximum_spanning_tree, relocation_as_flips,
    relocation_path, transform, vertex_relocate, Exact, ExactInstance, Move, SpanningTree, Triangulation, Weight,
};
use rand::seq::IteratorRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counterexample() -> ExactInstance {
    counterexample_instance()
}

fn counterexample_optimum() -> Outcome {
    let started = Instant::now();
    let report = exact_mwpsp(&counterexample(), &BTreeSet::new()).map_err(|e| e.to_string())?;
    ensure(report.best_weight == Exact::from_integer(24), || format!("best_weight {}", report.best_weight))?;
    let w = counterexample();
    for g in &report.best_graphs {
        ensure(g.weight(&w).unwrap() == report.best_weight, || "listed optimum has a different weight".into())?;
    }
    Ok(format!(
        "best_weight {} over {} triangulations, {} optima, {:.1?}",
        report.best_weight.to_decimal(),
        report.explored,
        report.best_graphs.len(),
        started.elapsed()
    ))
}

fn forced_path_bound() -> Outcome {
    let w = counterexample();
    let first = exact_mwpsp(&w, &path_edges(8)).map_err(|e| e.to_string())?;
    let second = exact_mwpsp(&w, &path_edges(8)).map_err(|e| e.to_string())?;
    ensure(first.best_weight <= Exact::from_integer(23), || format!("best_weight {}", first.best_weight))?;
    ensure(first == second, || "two runs disagree".into())?;
    // Recorded attained value.
    ensure(first.best_weight == Exact::from_integer(23), || {
        format!("attained value changed to {}", first.best_weight)
    })?;
    for g in &first.best_graphs {
        ensure(path_edges(8).iter().all(|&e| g.has_edge(e)), || "optimum misses a forced edge".into())?;
    }
    Ok(format!(
        "best_weight {} with all 7 path edges, {} optima, stable across runs",
        first.best_weight.to_decimal(),
        first.best_graphs.len()
    ))
}

fn optima_avoid_path() -> Outcome {
    let w = counterexample();
    let holds = no_optimum_contains(&w, &SpanningTree::path(8)).map_err(|e| e.to_string())?;
    ensure(holds, || "some optimum contains the path".into())?;
    let optima = exact_mwpsp(&w, &BTreeSet::new()).map_err(|e| e.to_string())?;
    let containing = optima
        .best_graphs
        .iter()
        .filter(|g| path_edges(8).iter().all(|&e| g.has_edge(e)))
        .count();
    ensure(containing == 0 && !optima.optima_capped, || format!("{containing} optima contain the path"))?;
    Ok(format!("none of the {} weight-24 optima contains the path", optima.best_graphs.len()))
}

fn unique_mst() -> Outcome {
    let w = counterexample();
    let t = maximum_spanning_tree(&w);
    ensure(t.edges() == &path_edges(8), || format!("tree {:?}", t.edges()))?;
    ensure(t.weight(&w) == Exact::from_integer(14), || format!("weight {}", t.weight(&w)))?;
    // Any other spanning tree swaps in an edge of weight at most 1 for a path edge.
    let heavier_off_path = w.iter().filter(|(e, x)| !path_edges(8).contains(e) && **x >= Exact::from_integer(2)).count();
    ensure(heavier_off_path == 0, || "another tree could tie".into())?;
    Ok("path 1-2-...-8, weight 14, unique".into())
}

fn relocation_equivalence() -> Outcome {
    let mut r = rng(2);
    let mut total_len = 0;
    for trial in 0..1000 {
        let n = r.gen_range(5..=12);
        let g = random_triangulation(n, 4 * n, &mut r);
        let u = r.gen_range(1..=n as u32);
        let (g, _) = lower_to_degree_three(&g, u).map_err(|e| format!("trial {trial}: {e}"))?;
        let f = *g.faces().iter().choose(&mut r).unwrap();
        let direct = vertex_relocate(&g, u, f).map_err(|e| format!("trial {trial}: {e}"))?;
        let seq = relocation_as_flips(&g, u, f).map_err(|e| format!("trial {trial}: {e}"))?;
        let path = relocation_path(&g, u, f).map_err(|e| format!("trial {trial}: {e}"))?;
        let replayed = apply_sequence(&g, &seq).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(replayed.edges() == direct.edges() && replayed.faces() == direct.faces(), || {
            format!("trial {trial}: relocating {u} into {f} differs")
        })?;
        ensure(seq.len() == 2 * path.len(), || {
            format!("trial {trial}: {} moves for a dual path of length {}", seq.len(), path.len())
        })?;
        total_len += seq.len();
    }
    Ok(format!("1000 triples, zero failures, {total_len} flips in total"))
}

fn transform_soundness() -> Outcome {
    let mut r = rng(3);
    let mut slowest = Duration::ZERO;
    let mut total_len = 0;
    for trial in 0..200 {
        let n = r.gen_range(5..=8);
        let g = random_triangulation(n, 5 * n, &mut r);
        let h = random_triangulation(n, 5 * n, &mut r);
        let started = Instant::now();
        let seq = transform(&g, &h).map_err(|e| format!("trial {trial}: {e}"))?;
        let elapsed = started.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < Duration::from_secs(10), || format!("trial {trial}: took {elapsed:?}"))?;
        let mut cur = g.clone();
        for (i, m) in seq.iter().enumerate() {
            ensure(matches!(m, Move::EdgeSubstitution { .. }), || format!("trial {trial}: move {i} is not a flip"))?;
            cur = apply_move(&cur, m).map_err(|e| format!("trial {trial}, move {i}: {e}"))?;
            let problems = invariant_violations(&cur);
            ensure(problems.is_empty(), || format!("trial {trial}, move {i}: {problems:?}"))?;
        }
        ensure(cur == h, || format!("trial {trial}: replay does not reach the target"))?;
        total_len += seq.len();
    }
    Ok(format!("200 pairs, zero failures, {total_len} flips, slowest {slowest:.1?}"))
}

fn closure_completeness() -> Outcome {
    // Edge-subset brute force, see tests/oracles.rs and tools/oracles.py.
    const EXPECTED: [(usize, u64); 4] = [(4, 1), (5, 10), (6, 195), (7, 5712)];
    let mut found = Vec::new();
    for (n, expected) in EXPECTED {
        let count = count_triangulations(n, usize::MAX).map_err(|e| e.to_string())?;
        ensure(count == expected, || format!("n = {n}: {count} != {expected}"))?;
        found.push(format!("n={n}: {count}"));
    }
    Ok(found.join(", "))
}

fn flip_fuzzing() -> Outcome {
    let mut r = rng(4);
    let mut flips = 0;
    let mut second_case = 0;
    while flips < 10_000 {
        let n = r.gen_range(5..=14);
        let mut g = random_triangulation(n, 2 * n, &mut r);
        for _ in 0..100 {
            let e = *g.edges().iter().choose(&mut r).unwrap();
            if mwpsp::plan_substitution(&g, e).map_err(|x| x.to_string())?.is_second_case() {
                second_case += 1;
            }
            let (h, added) = edge_substitute(&g, e).map_err(|x| format!("flip {flips}: {x}"))?;
            let problems = invariant_violations(&h);
            ensure(problems.is_empty(), || format!("flip {flips}: {problems:?}"))?;
            ensure(h.has_edge(added) && !h.has_edge(e), || format!("flip {flips}: wrong edges"))?;
            let (back, readded) = edge_substitute(&h, added).map_err(|x| format!("flip {flips}: {x}"))?;
            ensure(back == g && readded == e, || format!("flip {flips}: not reversible"))?;
            g = h;
            flips += 1;
        }
    }
    Ok(format!("{flips} flips ({second_case} of the second kind), zero violations"))
}

fn heuristic_contracts() -> Outcome {
    let mut r = rng(5);
    let mut gaps = 0;
    for trial in 0..50 {
        let w = random_instance(6, 9, &mut r);
        let optimum = exact_mwpsp(&w, &BTreeSet::new()).map_err(|e| e.to_string())?.best_weight;

        let g0 = mst_greedy(&w).map_err(|e| format!("trial {trial}: {e}"))?;
        let tree = maximum_spanning_tree(&w);
        ensure(tree.edges().iter().all(|&e| g0.has_edge(e)), || format!("trial {trial}: MST edge missing"))?;
        let rebuilt = Triangulation::build(6, g0.faces().iter().copied()).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(rebuilt == g0, || format!("trial {trial}: greedy output fails validation"))?;

        for start in [g0.clone(), random_triangulation(6, 30, &mut r)] {
            let report = local_search(&start, &w, &Policy::Steepest).map_err(|e| format!("trial {trial}: {e}"))?;
            let trace = report.trace.clone().unwrap_or_default();
            let mut cur = start.clone();
            let mut weight = cur.weight(&w).unwrap();
            for m in trace.iter() {
                cur = apply_move(&cur, m).map_err(|e| format!("trial {trial}: {e}"))?;
                let next = cur.weight(&w).unwrap();
                ensure(next >= weight, || format!("trial {trial}: weight decreased"))?;
                weight = next;
            }
            ensure(cur == report.best_graphs[0], || format!("trial {trial}: trace does not replay"))?;
            ensure(is_flip_local_optimum(&cur, &w).unwrap(), || format!("trial {trial}: improving flip left"))?;
            ensure(report.best_weight <= optimum, || format!("trial {trial}: heuristic beats exact"))?;
            if report.best_weight < optimum {
                gaps += 1;
            }
        }
        ensure(g0.weight(&w).unwrap() <= optimum, || format!("trial {trial}: greedy beats exact"))?;
    }
    Ok(format!("50 instances, 100 local searches, {gaps} ended below the optimum"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("counterexample optimum is 24", counterexample_optimum),
        ("forced path optimum is at most 23", forced_path_bound),
        ("no optimum contains the spanning path", optima_avoid_path),
        ("maximum spanning tree is the unique path", unique_mst),
        ("relocation compiles to flips", relocation_equivalence),
        ("transform replays between random pairs", transform_soundness),
        ("flip closure counts match brute force", closure_completeness),
        ("random flips keep invariants and reverse", flip_fuzzing),
        ("heuristic contracts on random n=6 instances", heuristic_contracts),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
