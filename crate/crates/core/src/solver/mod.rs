//! Maximum-weight planar subgraph solvers.
//!
//! Exact search enumerates every labeled triangulation of the vertex set by
//! flip closure and is limited to small n. The heuristics build a solution
//! greedily from a maximum spanning tree and improve it by edge
//! substitutions.

mod counterexample;
mod enumerate;
mod exact;
mod greedy;
mod local_search;
mod report;

pub use counterexample::{counterexample_instance, counterexample_optimum, counterexample_path};
pub use enumerate::{count_triangulations, enumerate_triangulations, Enumeration, MAX_ENUMERATION_N};
pub use exact::{exact_mwpsp, exact_mwpsp_with, no_optimum_contains, ExactOptions};
pub use greedy::mst_greedy;
pub use local_search::{is_flip_local_optimum, local_search, AnnealSchedule, Policy};
pub use report::SolveReport;
