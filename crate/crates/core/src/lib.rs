//! Maximal planar graphs as face sets, the local moves between them, and
//! solvers for the maximum-weight planar subgraph problem.
//!
//! Vertices are numbered `1..=n`. Edge weights are generic over [`Weight`];
//! use [`Exact`] when comparisons must not round.
//!
//! ```
//! use mwpsp::{edge_substitute, Edge, Triangulation};
//!
//! let g = Triangulation::stacked(5)?;
//! let (h, added) = edge_substitute(&g, Edge::new(1, 2)?)?;
//! assert_eq!(added, Edge::new(3, 5)?);
//! assert_eq!(edge_substitute(&h, added)?.0, g);
//! # Ok::<(), mwpsp::Error>(())
//! ```

mod error;
pub mod io;
mod instance;
mod moves;
mod packed;
pub mod planarity;
mod scalar;
pub mod solver;
mod spanning;
mod transform;
mod triangulation;
mod types;

pub use error::{Error, Result};
pub use instance::{all_pairs, WeightedInstance};
pub use moves::{
    apply_move, apply_sequence, edge_substitute, invert_sequence, plan_substitution, relocation_as_flips,
    relocation_path, substitution_target, vertex_relocate, Move, MoveSequence, SubstitutionPlan,
};
pub use planarity::{is_maximal_planar, is_planar};
pub use scalar::{Exact, Weight};
pub use solver::SolveReport;
pub use spanning::{maximum_spanning_tree, maximum_spanning_tree_positive, SpanningTree};
pub use transform::{lower_to_degree_three, transform, transform_with, TransformOptions};
pub use triangulation::{DualPath, Triangulation};
pub use types::{Edge, Face, VertexId};

pub type ExactInstance = WeightedInstance<Exact>;
pub type InstanceF64 = WeightedInstance<f64>;
pub type InstanceF32 = WeightedInstance<f32>;
pub type ExactReport = SolveReport<Exact>;
pub type ReportF64 = SolveReport<f64>;
