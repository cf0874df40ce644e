use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::moves::{edge_substitute, substitution_target, Move, MoveSequence};
use crate::scalar::Weight;
use crate::triangulation::Triangulation;
use crate::types::Edge;

use super::report::SolveReport;

/// Geometric cooling schedule for simulated annealing.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealSchedule {
    pub seed: u64,
    /// Defaults to the maximum edge weight of the instance.
    pub start_temperature: Option<f64>,
    /// Temperature factor applied after every sweep.
    pub cooling: f64,
    /// Number of sweeps; one sweep proposes `|E|` random flips.
    pub sweeps: usize,
}

impl AnnealSchedule {
    pub fn with_seed(seed: u64) -> Self {
        AnnealSchedule { seed, start_temperature: None, cooling: 0.95, sweeps: 100 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Policy {
    Steepest,
    FirstImprovement,
    Anneal(AnnealSchedule),
}

impl Policy {
    fn tag(&self) -> &'static str {
        match self {
            Policy::Steepest => "steepest",
            Policy::FirstImprovement => "first-improvement",
            Policy::Anneal(_) => "anneal",
        }
    }
}

fn delta<W: Weight>(g: &Triangulation, w: &WeightedInstance<W>, e: Edge) -> Result<W> {
    let added = substitution_target(g, e)?;
    Ok(w.weight(added) - w.weight(e))
}

/// True when no edge substitution strictly increases the weight of `g`.
pub fn is_flip_local_optimum<W: Weight>(g: &Triangulation, w: &WeightedInstance<W>) -> Result<bool> {
    for &e in g.edges() {
        if delta(g, w, e)? > W::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flip-based improvement of `start`. Steepest and first-improvement climb
/// until no flip has positive gain; annealing runs its full schedule and
/// reports the best graph seen.
pub fn local_search<W: Weight>(
    start: &Triangulation,
    w: &WeightedInstance<W>,
    policy: &Policy,
) -> Result<SolveReport<W>> {
    if start.n() != w.n() {
        return Err(Error::SizeMismatch { left: start.n(), right: w.n() });
    }
    if start.n() < 5 {
        return Err(Error::TooSmall { n: start.n(), min: 5 });
    }
    let (graph, trace, explored) = match policy {
        Policy::Steepest => climb(start, w, true)?,
        Policy::FirstImprovement => climb(start, w, false)?,
        Policy::Anneal(schedule) => anneal(start, w, schedule)?,
    };
    Ok(SolveReport {
        method: policy.tag().into(),
        seed: match policy {
            Policy::Anneal(s) => Some(s.seed),
            _ => None,
        },
        best_weight: graph.weight(w)?,
        best_graphs: vec![graph],
        optima_capped: false,
        explored,
        trace: Some(trace),
    })
}

fn climb<W: Weight>(
    start: &Triangulation,
    w: &WeightedInstance<W>,
    steepest: bool,
) -> Result<(Triangulation, MoveSequence, u64)> {
    let mut g = start.clone();
    let mut trace = MoveSequence::new();
    let mut explored = 1u64;
    loop {
        let mut choice: Option<(Edge, W)> = None;
        for &e in g.edges() {
            let d = delta(&g, w, e)?;
            explored += 1;
            if d <= W::zero() {
                continue;
            }
            if choice.as_ref().is_none_or(|(_, best)| d > *best) {
                choice = Some((e, d));
                if !steepest {
                    break;
                }
            }
        }
        let Some((e, _)) = choice else { break };
        g = edge_substitute(&g, e)?.0;
        trace.push(Move::flip(e));
    }
    Ok((g, trace, explored))
}

fn anneal<W: Weight>(
    start: &Triangulation,
    w: &WeightedInstance<W>,
    schedule: &AnnealSchedule,
) -> Result<(Triangulation, MoveSequence, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(schedule.seed);
    let mut temperature = schedule
        .start_temperature
        .unwrap_or_else(|| w.max_weight().to_f64().unwrap_or(1.0));
    let mut g = start.clone();
    let mut weight = g.weight(w)?;
    let mut best = (g.clone(), weight.clone(), 0usize);
    let mut trace = MoveSequence::new();
    let mut explored = 1u64;
    let m = g.edges().len();

    for _ in 0..schedule.sweeps {
        for _ in 0..m {
            let e = *g.edges().iter().nth(rng.gen_range(0..m)).expect("index below |E|");
            let d = delta(&g, w, e)?;
            explored += 1;
            let gain = d.to_f64().unwrap_or(0.0);
            let accept = gain >= 0.0 || (temperature > 0.0 && rng.gen::<f64>() < (gain / temperature).exp());
            if !accept {
                continue;
            }
            g = edge_substitute(&g, e)?.0;
            weight = weight + d;
            trace.push(Move::flip(e));
            if weight > best.1 {
                best = (g.clone(), weight.clone(), trace.len());
            }
        }
        temperature *= schedule.cooling;
    }
    trace.truncate(best.2);
    Ok((best.0, trace, explored))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::apply_sequence;
    use crate::scalar::Exact;
    use crate::solver::{counterexample_instance, mst_greedy};

    fn ex(v: i64) -> Exact {
        Exact::from_integer(v)
    }

    #[test]
    fn local_optimum_is_left_alone() {
        let w = WeightedInstance::uniform(6, ex(1));
        let g = Triangulation::stacked(6).unwrap();
        let r = local_search(&g, &w, &Policy::Steepest).unwrap();
        assert_eq!(r.best_graphs[0], g);
        assert!(r.trace.unwrap().is_empty());
    }

    #[test]
    fn climbing_from_greedy_on_counterexample() {
        let w: WeightedInstance<Exact> = counterexample_instance();
        let g0 = mst_greedy(&w).unwrap();
        let w0 = g0.weight(&w).unwrap();
        for policy in [Policy::Steepest, Policy::FirstImprovement] {
            let r = local_search(&g0, &w, &policy).unwrap();
            assert!(r.best_weight >= w0);
            assert!(is_flip_local_optimum(&r.best_graphs[0], &w).unwrap());
            assert_eq!(apply_sequence(&g0, r.trace.as_ref().unwrap()).unwrap(), r.best_graphs[0]);
        }
    }

    #[test]
    fn anneal_is_reproducible_and_replays() {
        let w: WeightedInstance<Exact> = counterexample_instance();
        let g0 = Triangulation::stacked(8).unwrap();
        let policy = Policy::Anneal(AnnealSchedule { sweeps: 20, ..AnnealSchedule::with_seed(3) });
        let a = local_search(&g0, &w, &policy).unwrap();
        let b = local_search(&g0, &w, &policy).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(3));
        assert!(a.best_weight >= g0.weight(&w).unwrap());
        assert_eq!(apply_sequence(&g0, a.trace.as_ref().unwrap()).unwrap(), a.best_graphs[0]);
        assert_eq!(a.best_graphs[0].weight(&w).unwrap(), a.best_weight);
    }

    #[test]
    fn size_mismatch() {
        let w = WeightedInstance::uniform(6, ex(1));
        let g = Triangulation::stacked(7).unwrap();
        assert!(matches!(local_search(&g, &w, &Policy::Steepest), Err(Error::SizeMismatch { .. })));
    }
}
