use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::packed::{BitIter, FlipClosure, Packed, PairTable};
use crate::scalar::Weight;
use crate::spanning::SpanningTree;
use crate::triangulation::Triangulation;
use crate::types::Edge;

use super::enumerate::check_range;
use super::report::SolveReport;

/// Knobs for [`exact_mwpsp_with`].
#[derive(Clone, Debug)]
pub struct ExactOptions {
    /// Maximum number of optimal triangulations kept in the report.
    pub optima_cap: usize,
    /// Abort with `BudgetExceeded` after this many distinct triangulations.
    pub budget: usize,
    /// Threads used for weight evaluation. Results do not depend on it.
    pub workers: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { optima_cap: 100_000, budget: usize::MAX, workers: 1 }
    }
}

const BATCH: usize = 1 << 14;

/// Streams the flip closure in batches, handing each state with its weight to
/// `visit` in enumeration order.
fn scan<W: Weight>(
    instance: &WeightedInstance<W>,
    opts: &ExactOptions,
    mut visit: impl FnMut(&PairTable, &Packed, &W),
) -> Result<u64> {
    let n = instance.n();
    check_range(n)?;
    let start = Triangulation::stacked(n)?;
    let mut closure = FlipClosure::new(&start, opts.budget);
    let table = closure.table().clone();
    let rank_weight: Vec<W> = (0..(n * (n - 1) / 2) as u32).map(|r| instance.weight(table.edge(r))).collect();
    let weigh = |p: &Packed| BitIter(p.edges).fold(W::zero(), |acc, r| acc + rank_weight[r as usize].clone());
    let workers = opts.workers.max(1);

    let mut explored = 0u64;
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for state in closure.by_ref().take(BATCH) {
            batch.push(state?);
        }
        if batch.is_empty() {
            break;
        }
        let weights: Vec<W> = if workers == 1 || batch.len() < 2 * workers {
            batch.iter().map(weigh).collect()
        } else {
            let chunk = batch.len().div_ceil(workers);
            std::thread::scope(|s| {
                let handles: Vec<_> = batch
                    .chunks(chunk)
                    .map(|part| s.spawn(|| part.iter().map(weigh).collect::<Vec<W>>()))
                    .collect();
                handles.into_iter().flat_map(|h| h.join().expect("weight worker panicked")).collect()
            })
        };
        for (state, w) in batch.iter().zip(&weights) {
            visit(&table, state, w);
        }
        explored += batch.len() as u64;
    }
    Ok(explored)
}

fn forced_mask(table: &PairTable, n: usize, forced: &BTreeSet<Edge>) -> Result<u64> {
    for e in forced {
        if e.hi() as usize > n {
            return Err(Error::VertexOutOfRange { vertex: e.hi(), n });
        }
    }
    Ok(table.mask_of(forced.iter().copied()))
}

/// Exhaustive maximum-weight triangulation search, optionally restricted to
/// triangulations containing every edge of `forced`.
pub fn exact_mwpsp<W: Weight>(instance: &WeightedInstance<W>, forced: &BTreeSet<Edge>) -> Result<SolveReport<W>> {
    exact_mwpsp_with(instance, forced, &ExactOptions::default())
}

pub fn exact_mwpsp_with<W: Weight>(
    instance: &WeightedInstance<W>,
    forced: &BTreeSet<Edge>,
    opts: &ExactOptions,
) -> Result<SolveReport<W>> {
    let n = instance.n();
    check_range(n)?;
    let mask = forced_mask(&PairTable::new(n), n, forced)?;

    let mut best: Option<W> = None;
    let mut optima: Vec<Packed> = Vec::new();
    let mut capped = false;
    let explored = scan(instance, opts, |_, state, w| {
        if state.edges & mask != mask {
            return;
        }
        match best.as_ref().map(|b| w.partial_cmp(b)) {
            None | Some(Some(std::cmp::Ordering::Greater)) => {
                best = Some(w.clone());
                optima.clear();
                optima.push(state.clone());
                capped = false;
            }
            Some(Some(std::cmp::Ordering::Equal)) => {
                if optima.len() < opts.optima_cap {
                    optima.push(state.clone());
                } else {
                    capped = true;
                }
            }
            _ => {}
        }
    })?;

    let best_weight = best.ok_or(Error::NoFeasible)?;
    let table = PairTable::new(n);
    let mut best_graphs = optima.iter().map(|p| p.to_triangulation(&table)).collect::<Result<Vec<_>>>()?;
    best_graphs.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(SolveReport {
        method: "exact".into(),
        seed: None,
        best_weight,
        best_graphs,
        optima_capped: capped,
        explored,
        trace: None,
    })
}

/// True when no maximum-weight triangulation contains every edge of `tree`.
pub fn no_optimum_contains<W: Weight>(instance: &WeightedInstance<W>, tree: &SpanningTree) -> Result<bool> {
    let n = instance.n();
    if tree.n() != n {
        return Err(Error::SizeMismatch { left: n, right: tree.n() });
    }
    check_range(n)?;
    let mask = forced_mask(&PairTable::new(n), n, tree.edges())?;

    let mut best: Option<W> = None;
    let mut best_containing: Option<W> = None;
    scan(instance, &ExactOptions::default(), |_, state, w| {
        if best.as_ref().is_none_or(|b| w > b) {
            best = Some(w.clone());
        }
        if state.edges & mask == mask && best_containing.as_ref().is_none_or(|b| w > b) {
            best_containing = Some(w.clone());
        }
    })?;
    Ok(match (best, best_containing) {
        (_, None) => true,
        (Some(b), Some(c)) => c < b,
        (None, Some(_)) => unreachable!("a containing triangulation was seen"),
    })
}
