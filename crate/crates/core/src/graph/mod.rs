//! Networks, routing instances, walk solutions and structural classification.

mod classify;
mod instance;
mod network;
mod solution;

pub use classify::{
    classify, is_connected, topological_order, treewidth_bound, StructureClass, StructureTag,
};
pub use instance::{InstanceBuilder, WaypointInstance};
pub use network::{Directedness, Edge, EdgeId, Network, NodeId};
pub use solution::{
    cost_and_usage, validate_walk, Path, ValidationReport, Violation, WalkSolution,
};
