use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::instance::WaypointInstance;
use crate::graph::network::{EdgeId, Network, NodeId};
use crate::rational::Rational;

/// A path given as its node sequence together with the edge instance used
/// for each step. `nodes.len() == edges.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(node: NodeId) -> Self {
        Path {
            nodes: vec![node],
            edges: Vec::new(),
        }
    }

    /// Rebuilds the node sequence of an edge sequence starting at `start`.
    pub fn from_edges(network: &Network, start: NodeId, edges: Vec<EdgeId>) -> Result<Self> {
        let mut nodes = Vec::with_capacity(edges.len() + 1);
        nodes.push(start);
        let mut at = start;
        for &e in &edges {
            let edge = network.get_edge(e).ok_or(Error::DanglingEdge(e.0))?;
            if edge.u != at && edge.v != at {
                return Err(Error::InvalidArgument(format!(
                    "edge {} is not incident to {}",
                    network.edge_label(e),
                    network.name(at)
                )));
            }
            at = edge.other(at);
            nodes.push(at);
        }
        Ok(Path { nodes, edges })
    }

    pub fn start(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn end(&self) -> NodeId {
        *self.nodes.last().expect("path has at least one node")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn reversed(&self) -> Path {
        let mut nodes = self.nodes.clone();
        let mut edges = self.edges.clone();
        nodes.reverse();
        edges.reverse();
        Path { nodes, edges }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.nodes.len());
        self.nodes.iter().all(|v| seen.insert(*v))
    }

    pub fn weight(&self, network: &Network) -> Rational {
        self.edges.iter().map(|&e| network.edge(e).weight).sum()
    }

    pub fn describe(&self, network: &Network) -> String {
        self.nodes
            .iter()
            .map(|&v| network.name(v))
            .collect::<Vec<_>>()
            .join("–")
    }
}

/// A routed walk: one simple path per segment, its cost and the demand it
/// places on each edge instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkSolution {
    pub segments: Vec<Path>,
    pub total_cost: Rational,
    pub usage: BTreeMap<EdgeId, Rational>,
}

impl WalkSolution {
    /// Computes cost and usage from the segments. Fails on unknown edges or
    /// a segment count that does not match the instance.
    pub fn from_segments(instance: &WaypointInstance, segments: Vec<Path>) -> Result<Self> {
        if segments.len() != instance.segment_count() {
            return Err(Error::InvalidArgument(format!(
                "expected {} segments, found {}",
                instance.segment_count(),
                segments.len()
            )));
        }
        let (total_cost, usage) = cost_and_usage(instance, &segments)?;
        Ok(WalkSolution {
            segments,
            total_cost,
            usage,
        })
    }

    /// The concatenated node sequence of the whole walk.
    pub fn walk_nodes(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        for (i, seg) in self.segments.iter().enumerate() {
            let skip = if i == 0 { 0 } else { 1 };
            out.extend(seg.nodes.iter().skip(skip));
        }
        out
    }

    pub fn walk_names(&self, network: &Network) -> Vec<String> {
        self.walk_nodes()
            .into_iter()
            .map(|v| network.name(v).to_string())
            .collect()
    }
}

/// Recomputes total weight and demand-weighted usage of a segment list.
/// Segments beyond the instance's demand list are charged the last demand.
pub fn cost_and_usage(
    instance: &WaypointInstance,
    segments: &[Path],
) -> Result<(Rational, BTreeMap<EdgeId, Rational>)> {
    let net = &instance.network;
    let mut cost = Rational::ZERO;
    let mut usage = BTreeMap::new();
    for (i, seg) in segments.iter().enumerate() {
        let demand = instance
            .demands
            .get(i)
            .or(instance.demands.last())
            .copied()
            .unwrap_or(Rational::ONE);
        for &e in &seg.edges {
            let edge = net.get_edge(e).ok_or(Error::DanglingEdge(e.0))?;
            cost += edge.weight;
            *usage.entry(e).or_insert(Rational::ZERO) += demand;
        }
    }
    Ok((cost, usage))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SegmentCount {
        expected: usize,
        found: usize,
    },
    EndpointMismatch {
        segment: usize,
    },
    MalformedSegment {
        segment: usize,
    },
    BrokenStep {
        segment: usize,
        step: usize,
        edge: String,
    },
    NonSimple {
        segment: usize,
        node: String,
    },
    CapacityOverflow {
        edge: EdgeId,
        label: String,
        used: Rational,
        capacity: Rational,
    },
    BoundViolation {
        segment: usize,
        length: Rational,
        bound: Rational,
    },
    UsageMismatch {
        edge: EdgeId,
        recorded: Rational,
        actual: Rational,
    },
    CostMismatch {
        recorded: Rational,
        actual: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SegmentCount { expected, found } => {
                write!(
                    f,
                    "segment count mismatch: expected {expected}, found {found}"
                )
            }
            Violation::EndpointMismatch { segment } => {
                write!(f, "segment {segment} endpoint mismatch")
            }
            Violation::MalformedSegment { segment } => {
                write!(
                    f,
                    "segment {segment} is malformed (node and edge counts disagree)"
                )
            }
            Violation::BrokenStep {
                segment,
                step,
                edge,
            } => write!(f, "segment {segment} step {step} cannot use edge {edge}"),
            Violation::NonSimple { segment, node } => {
                write!(f, "segment {segment} is not simple: revisits {node}")
            }
            Violation::CapacityOverflow {
                label,
                used,
                capacity,
                ..
            } => write!(
                f,
                "capacity overflow on {label}: used {used}, capacity {capacity}"
            ),
            Violation::BoundViolation {
                segment,
                length,
                bound,
            } => write!(f, "segment {segment} length {length} exceeds bound {bound}"),
            Violation::UsageMismatch {
                edge,
                recorded,
                actual,
            } => write!(f, "usage of {edge} recorded as {recorded}, actual {actual}"),
            Violation::CostMismatch { recorded, actual } => {
                write!(f, "total cost recorded as {recorded}, actual {actual}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(|v| v.to_string()).collect()
    }
}

/// Checks every walk invariant and itemizes each violation found.
pub fn validate_walk(
    instance: &WaypointInstance,
    solution: &WalkSolution,
) -> Result<ValidationReport> {
    let net = &instance.network;
    for seg in &solution.segments {
        for &e in &seg.edges {
            if net.get_edge(e).is_none() {
                return Err(Error::DanglingEdge(e.0));
            }
        }
    }
    for e in solution.usage.keys() {
        if net.get_edge(*e).is_none() {
            return Err(Error::DanglingEdge(e.0));
        }
    }

    let mut violations = Vec::new();
    let route = instance.route();
    if solution.segments.len() != instance.segment_count() {
        violations.push(Violation::SegmentCount {
            expected: instance.segment_count(),
            found: solution.segments.len(),
        });
    }

    for (i, seg) in solution.segments.iter().enumerate() {
        if seg.nodes.len() != seg.edges.len() + 1 {
            violations.push(Violation::MalformedSegment { segment: i });
            continue;
        }
        let expected_ends = route.get(i).zip(route.get(i + 1));
        match expected_ends {
            Some((&a, &b)) if seg.start() == a && seg.end() == b => {}
            _ => violations.push(Violation::EndpointMismatch { segment: i }),
        }
        for (step, &e) in seg.edges.iter().enumerate() {
            if !net.traversable(e, seg.nodes[step], seg.nodes[step + 1]) {
                violations.push(Violation::BrokenStep {
                    segment: i,
                    step,
                    edge: net.edge_label(e),
                });
            }
        }
        let mut seen = HashSet::new();
        for &v in &seg.nodes {
            if !seen.insert(v) {
                violations.push(Violation::NonSimple {
                    segment: i,
                    node: net.name(v).to_string(),
                });
                break;
            }
        }
        if let Some(bound) = instance.bounds.as_ref().and_then(|b| b.get(i)) {
            let length = seg.weight(net);
            if length > *bound {
                violations.push(Violation::BoundViolation {
                    segment: i,
                    length,
                    bound: *bound,
                });
            }
        }
    }

    let (actual_cost, actual_usage) = cost_and_usage(instance, &solution.segments)?;
    for (&e, &used) in &actual_usage {
        let cap = net.edge(e).capacity;
        if used > cap {
            violations.push(Violation::CapacityOverflow {
                edge: e,
                label: net.edge_label(e),
                used,
                capacity: cap,
            });
        }
    }
    let keys: std::collections::BTreeSet<EdgeId> = actual_usage
        .keys()
        .chain(solution.usage.keys())
        .copied()
        .collect();
    for e in keys {
        let recorded = solution.usage.get(&e).copied().unwrap_or(Rational::ZERO);
        let actual = actual_usage.get(&e).copied().unwrap_or(Rational::ZERO);
        if recorded != actual {
            violations.push(Violation::UsageMismatch {
                edge: e,
                recorded,
                actual,
            });
        }
    }
    if actual_cost != solution.total_cost {
        violations.push(Violation::CostMismatch {
            recorded: solution.total_cost,
            actual: actual_cost,
        });
    }
    Ok(ValidationReport { violations })
}
