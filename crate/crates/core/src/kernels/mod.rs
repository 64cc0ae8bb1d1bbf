//! Shortest paths, min-cost flow and disjoint shortest pairs.

mod dijkstra;
mod flow;
mod suurballe;

pub use dijkstra::{distances_to, shortest_path, shortest_path_filtered, DistanceLabeling};
pub use flow::{decompose_flow, min_cost_flow, FlowAssignment};
pub use suurballe::{shared_edges, suurballe_pair, DisjointPair};
