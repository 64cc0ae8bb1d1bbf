//! Optimal routing through one waypoint on undirected networks, by
//! reduction to a pair of arc-disjoint paths between two super terminals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Path, WalkSolution, WaypointInstance};
use crate::kernels::{decompose_flow, min_cost_flow, shortest_path_filtered, suurballe_pair};
use crate::rational::Rational;
use crate::transforms::{
    attach_super_terminals, expand_capacities, orient_undirected, subdivide_parallel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingleMethod {
    Suurballe,
    Flow,
}

impl fmt::Display for SingleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingleMethod::Suurballe => "suurballe",
            SingleMethod::Flow => "flow",
        })
    }
}

impl FromStr for SingleMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "suurballe" => Ok(SingleMethod::Suurballe),
            "flow" => Ok(SingleMethod::Flow),
            other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        }
    }
}

fn check_preconditions(instance: &WaypointInstance) -> Result<()> {
    if instance.k() != 1 {
        return Err(Error::Unsupported(format!(
            "single-waypoint solver needs exactly one waypoint, found {}",
            instance.k()
        )));
    }
    if instance.network.is_directed() {
        return Err(Error::Unsupported(
            "single-waypoint solver needs an undirected network".into(),
        ));
    }
    if !instance.has_unit_demands() {
        return Err(Error::Unsupported(
            "single-waypoint solver needs unit demands".into(),
        ));
    }
    if instance.bounds.is_some() {
        return Err(Error::Unsupported(
            "single-waypoint solver does not handle distance bounds".into(),
        ));
    }
    Ok(())
}

/// Minimum-cost walk `s → w → t`, or `Ok(None)` when none respects the
/// capacities.
pub fn solve_single_waypoint(
    instance: &WaypointInstance,
    method: SingleMethod,
) -> Result<Option<WalkSolution>> {
    check_preconditions(instance)?;
    let net = &instance.network;
    let (s, w, t) = (instance.source, instance.waypoints[0], instance.target);

    let (expanded, to_expanded) = expand_capacities(net, 2)?;
    let (oriented, to_oriented) = orient_undirected(&expanded)?;
    let to_oriented = to_expanded.then(&to_oriented);
    let (attached, super_src, super_dst) = attach_super_terminals(&oriented, s, t, w)?;
    let from_s = EdgeId(oriented.edge_count());
    let (simple, to_simple) = subdivide_parallel(&attached)?;

    let derived: Vec<Path> = match method {
        SingleMethod::Suurballe => match suurballe_pair(&simple, super_src, super_dst)? {
            Some(pair) => vec![pair.first, pair.second],
            None => return Ok(None),
        },
        SingleMethod::Flow => match min_cost_flow(&simple, super_src, super_dst, 2)? {
            Some(flow) => decompose_flow(&simple, &flow, super_src, super_dst)?
                .into_iter()
                .flat_map(|(p, k)| std::iter::repeat_n(p, k as usize))
                .collect(),
            None => return Ok(None),
        },
    };
    if derived.len() != 2 {
        return Err(Error::InvalidFlow(format!(
            "expected two super-terminal paths, found {}",
            derived.len()
        )));
    }

    let mut lifted = Vec::with_capacity(2);
    for p in &derived {
        let on_attached = to_simple
            .lift_path(&attached, p)
            .ok_or_else(|| Error::InvalidFlow("path does not lift through subdivision".into()))?;
        let k = on_attached.edges.len();
        if k < 2 {
            return Err(Error::InvalidFlow("super-terminal path too short".into()));
        }
        let starts_at_s = on_attached.edges[0] == from_s;
        let inner = Path {
            nodes: on_attached.nodes[1..k].to_vec(),
            edges: on_attached.edges[1..k - 1].to_vec(),
        };
        let original = to_oriented
            .lift_path(net, &inner)
            .ok_or_else(|| Error::InvalidFlow("path does not lift through orientation".into()))?;
        lifted.push((starts_at_s, original));
    }
    lifted.sort_by_key(|(starts_at_s, _)| !starts_at_s);
    let first = lifted[0].1.clone();
    let second = lifted[1].1.reversed();
    if first.start() != s || first.end() != w || second.start() != w || second.end() != t {
        return Err(Error::InvalidFlow(
            "lifted paths do not join s, w and t".into(),
        ));
    }
    WalkSolution::from_segments(instance, vec![first, second]).map(Some)
}

/// Shortest `s → w` path, then the shortest `w → t` path in what capacity
/// is left. Not optimal; kept as a reference point.
pub fn greedy_baseline(instance: &WaypointInstance) -> Result<Option<WalkSolution>> {
    check_preconditions(instance)?;
    let net = &instance.network;
    let (s, w, t) = (instance.source, instance.waypoints[0], instance.target);
    let mut residual: Vec<Rational> = net.edges().iter().map(|e| e.capacity).collect();
    let first = shortest_path_filtered(net, s, |e| residual[e.0] >= 1)?;
    let Some(p1) = first.path_to(w) else {
        return Ok(None);
    };
    for e in &p1.edges {
        residual[e.0] -= Rational::ONE;
    }
    let second = shortest_path_filtered(net, w, |e| residual[e.0] >= 1)?;
    let Some(p2) = second.path_to(t) else {
        return Ok(None);
    };
    WalkSolution::from_segments(instance, vec![p1, p2]).map(Some)
}
