//! Exact solvers for trees and acyclic directed networks.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{
    is_connected, topological_order, EdgeId, NodeId, Path, WalkSolution, WaypointInstance,
};
use crate::kernels::shortest_path_filtered;
use crate::rational::Rational;

/// Every segment follows the unique tree path, so the walk is forced; it is
/// returned when capacities and bounds admit it.
pub fn solve_tree(instance: &WaypointInstance) -> Result<Option<WalkSolution>> {
    let net = &instance.network;
    let n = net.node_count();
    if net.edge_count() + 1 != n || !is_connected(net) {
        return Err(Error::Unsupported("underlying graph is not a tree".into()));
    }
    let root = NodeId(0);
    let mut parent: Vec<Option<(NodeId, EdgeId)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for e in net.edges() {
            let u = if e.u == v {
                e.v
            } else if e.v == v {
                e.u
            } else {
                continue;
            };
            if !seen[u.0] {
                seen[u.0] = true;
                parent[u.0] = Some((v, e.id));
                depth[u.0] = depth[v.0] + 1;
                queue.push_back(u);
            }
        }
    }

    let tree_path = |a: NodeId, b: NodeId| -> Path {
        let (mut x, mut y) = (a, b);
        let mut up_a = vec![];
        let mut up_b = vec![];
        while x != y {
            if depth[x.0] >= depth[y.0] {
                let (p, e) = parent[x.0].unwrap();
                up_a.push((e, p));
                x = p;
            } else {
                let (p, e) = parent[y.0].unwrap();
                up_b.push((e, y));
                y = p;
            }
        }
        let mut nodes = vec![a];
        let mut edges = vec![];
        for (e, p) in up_a {
            edges.push(e);
            nodes.push(p);
        }
        for (e, v) in up_b.into_iter().rev() {
            edges.push(e);
            nodes.push(v);
        }
        Path { nodes, edges }
    };

    let route = instance.route();
    let mut segments = Vec::with_capacity(route.len() - 1);
    for pair in route.windows(2) {
        let p = tree_path(pair[0], pair[1]);
        for (i, &e) in p.edges.iter().enumerate() {
            if !net.traversable(e, p.nodes[i], p.nodes[i + 1]) {
                return Ok(None);
            }
        }
        segments.push(p);
    }
    let solution = WalkSolution::from_segments(instance, segments)?;
    for (&e, &used) in &solution.usage {
        if used > net.edge(e).capacity {
            return Ok(None);
        }
    }
    if let Some(bounds) = &instance.bounds {
        for (seg, bound) in solution.segments.iter().zip(bounds) {
            if seg.weight(net) > *bound {
                return Ok(None);
            }
        }
    }
    Ok(Some(solution))
}

/// Per-segment shortest paths over arcs that can carry the segment's
/// demand. In an acyclic network no arc can lie on two segments (an arc
/// `a→b` on segment `i` and on a later segment `j` would give a path
/// `b → r(i+1) → r(j) → a`), so the segments never compete and the
/// per-segment optimum is the global one.
pub fn solve_dag(instance: &WaypointInstance) -> Result<Option<WalkSolution>> {
    let net = &instance.network;
    if !net.is_directed() || topological_order(net).is_none() {
        return Err(Error::Unsupported(
            "network is not a directed acyclic graph".into(),
        ));
    }
    let route = instance.route();
    let mut residual: Vec<Rational> = net.edges().iter().map(|e| e.capacity).collect();
    let mut segments = Vec::with_capacity(route.len() - 1);
    for (i, pair) in route.windows(2).enumerate() {
        let demand = instance.demands[i];
        let labels = shortest_path_filtered(net, pair[0], |e| residual[e.0] >= demand)?;
        let Some(path) = labels.path_to(pair[1]) else {
            return Ok(None);
        };
        if let Some(bound) = instance.bound(i) {
            if path.weight(net) > bound {
                return Ok(None);
            }
        }
        for e in &path.edges {
            residual[e.0] -= demand;
        }
        segments.push(path);
    }
    WalkSolution::from_segments(instance, segments).map(Some)
}

/// Edges used by more than one segment of a solution.
pub fn shared_between_segments(solution: &WalkSolution) -> Vec<EdgeId> {
    let mut owner: std::collections::BTreeMap<EdgeId, usize> = Default::default();
    let mut shared = std::collections::BTreeSet::new();
    for (i, seg) in solution.segments.iter().enumerate() {
        for &e in &seg.edges {
            match owner.get(&e) {
                Some(&j) if j != i => {
                    shared.insert(e);
                }
                _ => {
                    owner.insert(e, i);
                }
            }
        }
    }
    shared.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_walk, Network};

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn star(cap: i64) -> WaypointInstance {
        let mut net = Network::undirected();
        for leaf in ["s", "w", "t"] {
            net.add_named_edge(leaf, "x", r(cap), r(1)).unwrap();
        }
        let (s, w, t) = (
            net.node("s").unwrap(),
            net.node("w").unwrap(),
            net.node("t").unwrap(),
        );
        WaypointInstance::builder(net, s, t)
            .waypoints(vec![w])
            .demands(vec![r(2), r(1)])
            .build()
            .unwrap()
    }

    #[test]
    fn star_with_demand_change() {
        assert!(solve_tree(&star(2)).unwrap().is_none());
        let inst = star(3);
        let sol = solve_tree(&inst).unwrap().unwrap();
        assert_eq!(sol.total_cost, r(4));
        assert_eq!(sol.usage[&EdgeId(1)], r(3));
        assert!(validate_walk(&inst, &sol).unwrap().is_ok());
    }

    #[test]
    fn directed_tree_respects_orientation() {
        let build = |rev: bool| {
            let mut net = Network::directed();
            if rev {
                net.add_named_edge("w", "s", r(1), r(1)).unwrap();
                net.add_named_edge("t", "w", r(1), r(1)).unwrap();
            } else {
                net.add_named_edge("s", "w", r(1), r(1)).unwrap();
                net.add_named_edge("w", "t", r(1), r(1)).unwrap();
            }
            let (s, w, t) = (
                net.node("s").unwrap(),
                net.node("w").unwrap(),
                net.node("t").unwrap(),
            );
            WaypointInstance::new(net, s, t, vec![w]).unwrap()
        };
        assert!(solve_tree(&build(false)).unwrap().is_some());
        assert!(solve_tree(&build(true)).unwrap().is_none());
    }

    #[test]
    fn dag_picks_the_lighter_route() {
        let mut net = Network::directed();
        net.add_named_edge("s", "a", r(1), r(1)).unwrap();
        net.add_named_edge("a", "w", r(1), r(1)).unwrap();
        net.add_named_edge("s", "w", r(1), r(5)).unwrap();
        net.add_named_edge("w", "t", r(1), r(1)).unwrap();
        let (s, w, t) = (
            net.node("s").unwrap(),
            net.node("w").unwrap(),
            net.node("t").unwrap(),
        );
        let inst = WaypointInstance::new(net, s, t, vec![w]).unwrap();
        let sol = solve_dag(&inst).unwrap().unwrap();
        assert_eq!(sol.total_cost, r(3));
        assert!(shared_between_segments(&sol).is_empty());
    }

    #[test]
    fn cyclic_input_is_rejected() {
        let mut net = Network::directed();
        net.add_named_edge("a", "b", r(1), r(1)).unwrap();
        net.add_named_edge("b", "a", r(1), r(1)).unwrap();
        let inst = WaypointInstance::new(net, NodeId(0), NodeId(1), vec![]).unwrap();
        assert!(matches!(solve_dag(&inst), Err(Error::Unsupported(_))));
    }
}
