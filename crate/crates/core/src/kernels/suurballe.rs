use crate::error::{Error, Result};
use crate::graph::{EdgeId, Network, NodeId, Path};
use crate::kernels::dijkstra::{dijkstra_lists, ArcLists};
use crate::kernels::flow::{decompose_flow, FlowAssignment};
use crate::rational::Rational;

/// Two arc-disjoint paths of minimum combined weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPair {
    pub first: Path,
    pub second: Path,
    pub total_weight: Rational,
}

/// Shortest pair of arc-disjoint `src → dst` paths on a unit-capacity
/// directed network. `Ok(None)` when fewer than two such paths exist.
///
/// The first Dijkstra pass yields distances `d` and a shortest path `P1`.
/// Arc costs are then reduced to `w + d(u) - d(v)`, the arcs of `P1` are
/// reversed at cost zero, and a second Dijkstra pass finds `P2` in that
/// residual network. Arcs used forward by one path and backward by the
/// other cancel; the remaining arcs form two disjoint paths.
pub fn suurballe_pair(net: &Network, src: NodeId, dst: NodeId) -> Result<Option<DisjointPair>> {
    if !net.is_directed() {
        return Err(Error::InvalidArgument(
            "suurballe expects a directed network".into(),
        ));
    }
    for e in net.edges() {
        if e.weight.is_negative() {
            return Err(Error::NegativeWeight);
        }
        if e.capacity != 1 {
            return Err(Error::InvalidArgument(format!(
                "suurballe expects unit capacities, {} has {}",
                net.edge_label(e.id),
                e.capacity
            )));
        }
    }
    if src == dst {
        return Err(Error::InvalidArgument(
            "source and destination coincide".into(),
        ));
    }
    let n = net.node_count();
    let m = net.edge_count();

    let mut adj: ArcLists = vec![Vec::new(); n];
    for e in net.edges() {
        if !e.is_loop() {
            adj[e.u.0].push((e.v.0, e.weight, e.id.0));
        }
    }
    let (dist, parent) = dijkstra_lists(&adj, src.0);
    if dist[dst.0].is_none() {
        return Ok(None);
    }
    let mut on_first = vec![false; m];
    let mut at = dst.0;
    while at != src.0 {
        let (p, e) = parent[at].expect("reached node has a parent");
        on_first[e] = true;
        at = p;
    }

    // residual tags: 2e forward, 2e+1 reversed first-path arc
    let mut residual: ArcLists = vec![Vec::new(); n];
    for e in net.edges() {
        if e.is_loop() {
            continue;
        }
        let (Some(du), Some(dv)) = (dist[e.u.0], dist[e.v.0]) else {
            continue;
        };
        if on_first[e.id.0] {
            residual[e.v.0].push((e.u.0, Rational::ZERO, 2 * e.id.0 + 1));
        } else {
            let reduced = e.weight + du - dv;
            debug_assert!(!reduced.is_negative());
            residual[e.u.0].push((e.v.0, reduced, 2 * e.id.0));
        }
    }
    let (dist2, parent2) = dijkstra_lists(&residual, src.0);
    if dist2[dst.0].is_none() {
        return Ok(None);
    }
    let mut flow: Vec<i64> = on_first.iter().map(|&b| b as i64).collect();
    let mut at = dst.0;
    while at != src.0 {
        let (p, tag) = parent2[at].expect("reached node has a parent");
        if tag % 2 == 0 {
            flow[tag / 2] += 1;
        } else {
            flow[tag / 2] -= 1;
        }
        at = p;
    }
    let assignment =
        FlowAssignment::from_flow(net, flow.iter().map(|&f| Rational::from(f)).collect(), src);
    let mut paths = Vec::new();
    for (path, count) in decompose_flow(net, &assignment, src, dst)? {
        for _ in 0..count {
            paths.push(path.clone());
        }
    }
    assert_eq!(paths.len(), 2, "combined flow must split into two paths");
    let second = paths.pop().unwrap();
    let first = paths.pop().unwrap();
    let total_weight = first.weight(net) + second.weight(net);
    Ok(Some(DisjointPair {
        first,
        second,
        total_weight,
    }))
}

/// Edge ids shared by two paths (empty for a valid pair).
pub fn shared_edges(a: &Path, b: &Path) -> Vec<EdgeId> {
    let set: std::collections::HashSet<EdgeId> = a.edges.iter().copied().collect();
    b.edges
        .iter()
        .copied()
        .filter(|e| set.contains(e))
        .collect()
}
