use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::moves::MoveSequence;
use crate::scalar::Weight;
use crate::triangulation::Triangulation;

/// Outcome of a solver run.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport<W> {
    pub method: String,
    pub seed: Option<u64>,
    pub best_weight: W,
    /// Optimal (or final) triangulations, sorted by edge set.
    pub best_graphs: Vec<Triangulation>,
    /// Set when more optima existed than were kept.
    pub optima_capped: bool,
    /// Distinct triangulations visited.
    pub explored: u64,
    /// Moves leading from the starting triangulation to `best_graphs[0]`.
    pub trace: Option<MoveSequence>,
}

#[derive(Serialize, Deserialize)]
struct ReportFile {
    method: String,
    seed: Option<u64>,
    best_weight: String,
    best_graphs: Vec<Triangulation>,
    optima_capped: bool,
    explored: u64,
    trace: Option<MoveSequence>,
}

impl<W: Weight> Serialize for SolveReport<W> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportFile {
            method: self.method.clone(),
            seed: self.seed,
            best_weight: self.best_weight.to_decimal(),
            best_graphs: self.best_graphs.clone(),
            optima_capped: self.optima_capped,
            explored: self.explored,
            trace: self.trace.clone(),
        }
        .serialize(s)
    }
}

impl<'de, W: Weight> Deserialize<'de> for SolveReport<W> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = ReportFile::deserialize(d)?;
        let best_weight = W::parse_decimal(&f.best_weight)
            .ok_or_else(|| D::Error::custom(format!("invalid weight {:?}", f.best_weight)))?;
        Ok(SolveReport {
            method: f.method,
            seed: f.seed,
            best_weight,
            best_graphs: f.best_graphs,
            optima_capped: f.optima_capped,
            explored: f.explored,
            trace: f.trace,
        })
    }
}
