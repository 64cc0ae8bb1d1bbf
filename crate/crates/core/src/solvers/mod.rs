//! Polynomial-time solvers for the tractable cases.

mod single;
mod structured;

pub use single::{greedy_baseline, solve_single_waypoint, SingleMethod};
pub use structured::{shared_between_segments, solve_dag, solve_tree};
