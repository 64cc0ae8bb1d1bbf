use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Network, NodeId, Path};
use crate::kernels::dijkstra::{dijkstra_lists, ArcLists};
use crate::rational::Rational;

/// Flow per edge instance, with its value and total cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowAssignment {
    pub flow: Vec<Rational>,
    pub value: Rational,
    pub cost: Rational,
}

impl FlowAssignment {
    pub fn zero(net: &Network) -> Self {
        FlowAssignment {
            flow: vec![Rational::ZERO; net.edge_count()],
            value: Rational::ZERO,
            cost: Rational::ZERO,
        }
    }

    /// Builds an assignment from per-edge flow, deriving value (net outflow
    /// of `src`) and cost.
    pub fn from_flow(net: &Network, flow: Vec<Rational>, src: NodeId) -> Self {
        let cost = net.edges().iter().map(|e| flow[e.id.0] * e.weight).sum();
        let value = net
            .edges()
            .iter()
            .map(|e| {
                let f = flow[e.id.0];
                match (e.u == src, e.v == src) {
                    (true, false) => f,
                    (false, true) => -f,
                    _ => Rational::ZERO,
                }
            })
            .sum();
        FlowAssignment { flow, value, cost }
    }
}

fn integer_capacity(net: &Network, e: EdgeId) -> Result<i128> {
    let c = net.edge(e).capacity;
    if !c.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "capacity {c} of {} is not an integer",
            net.edge_label(e)
        )));
    }
    Ok(c.numer())
}

/// Minimum-cost integral flow of the given value by successive shortest
/// augmenting paths with node potentials. `Ok(None)` when the maximum flow
/// is smaller than `value`.
pub fn min_cost_flow(
    net: &Network,
    src: NodeId,
    dst: NodeId,
    value: u64,
) -> Result<Option<FlowAssignment>> {
    if value < 1 {
        return Err(Error::InvalidArgument(
            "flow value must be at least 1".into(),
        ));
    }
    if !net.is_directed() {
        return Err(Error::InvalidArgument(
            "min cost flow expects a directed network".into(),
        ));
    }
    if net.edges().iter().any(|e| e.weight.is_negative()) {
        return Err(Error::NegativeWeight);
    }
    let n = net.node_count();
    let m = net.edge_count();
    // residual arc 2e is the edge itself, 2e+1 its reverse
    let mut cap = vec![0i128; 2 * m];
    for e in net.edges() {
        cap[2 * e.id.0] = integer_capacity(net, e.id)?;
    }
    let head = |a: usize| {
        let e = net.edge(EdgeId(a / 2));
        if a.is_multiple_of(2) {
            e.v.0
        } else {
            e.u.0
        }
    };
    let tail = |a: usize| head(a ^ 1);
    let cost = |a: usize| {
        let w = net.edge(EdgeId(a / 2)).weight;
        if a.is_multiple_of(2) {
            w
        } else {
            -w
        }
    };
    let mut potential = vec![Rational::ZERO; n];
    // nodes unreachable once stay unreachable: augmentations only add
    // reverse arcs inside the reachable set
    let mut dead = vec![false; n];
    let mut remaining = value as i128;
    while remaining > 0 {
        let mut adj: ArcLists = vec![Vec::new(); n];
        for a in 0..2 * m {
            if cap[a] > 0 && tail(a) != head(a) && !dead[tail(a)] {
                let (u, v) = (tail(a), head(a));
                let reduced = cost(a) + potential[u] - potential[v];
                assert!(
                    !reduced.is_negative(),
                    "negative reduced cost on residual arc"
                );
                adj[u].push((v, reduced, a));
            }
        }
        let (dist, parent) = dijkstra_lists(&adj, src.0);
        if dist[dst.0].is_none() {
            return Ok(None);
        }
        for v in 0..n {
            match dist[v] {
                Some(d) => potential[v] += d,
                None => dead[v] = true,
            }
        }
        let mut arcs = Vec::new();
        let mut at = dst.0;
        while at != src.0 {
            let (p, a) = parent[at].expect("reached node has a parent");
            arcs.push(a);
            at = p;
        }
        let push = arcs
            .iter()
            .map(|&a| cap[a])
            .min()
            .unwrap_or(remaining)
            .min(remaining);
        for &a in &arcs {
            cap[a] -= push;
            cap[a ^ 1] += push;
        }
        remaining -= push;
    }
    let flow: Vec<Rational> = (0..m)
        .map(|e| Rational::from(cap[2 * e + 1] as i64))
        .collect();
    Ok(Some(FlowAssignment::from_flow(net, flow, src)))
}

/// Splits an integral flow into `src → dst` paths with multiplicities.
/// Flow cycles met on the way are cancelled.
pub fn decompose_flow(
    net: &Network,
    flow: &FlowAssignment,
    src: NodeId,
    dst: NodeId,
) -> Result<Vec<(Path, u64)>> {
    if !net.is_directed() {
        return Err(Error::InvalidArgument(
            "flow decomposition expects a directed network".into(),
        ));
    }
    let mut left = Vec::with_capacity(net.edge_count());
    for (i, f) in flow.flow.iter().enumerate() {
        if !f.is_integer() || f.is_negative() {
            return Err(Error::InvalidFlow(format!(
                "flow {f} on {} is not a non-negative integer",
                net.edge_label(EdgeId(i))
            )));
        }
        left.push(f.numer());
    }
    let mut found: BTreeMap<Vec<EdgeId>, u64> = BTreeMap::new();
    let mut order: Vec<Vec<EdgeId>> = Vec::new();
    if src == dst {
        return Ok(Vec::new());
    }
    loop {
        let first = net.out_edges(src).find(|(e, _)| left[e.0] > 0);
        if first.is_none() {
            break;
        }
        // walk along positive flow, cancelling any cycle closed on the way
        let mut nodes = vec![src];
        let mut edges: Vec<EdgeId> = Vec::new();
        let mut position = BTreeMap::new();
        position.insert(src, 0usize);
        let mut at = src;
        while at != dst {
            let Some((e, next)) = net.out_edges(at).find(|(e, _)| left[e.0] > 0) else {
                if at == src && edges.is_empty() {
                    break;
                }
                return Err(Error::InvalidFlow(format!(
                    "flow is not conserved at {}",
                    net.name(at)
                )));
            };
            if let Some(&p) = position.get(&next) {
                let mut cycle: Vec<EdgeId> = edges.drain(p..).collect();
                cycle.push(e);
                let amount = cycle.iter().map(|c| left[c.0]).min().unwrap();
                for c in &cycle {
                    left[c.0] -= amount;
                }
                for v in nodes.drain(p + 1..) {
                    position.remove(&v);
                }
                at = next;
                continue;
            }
            edges.push(e);
            nodes.push(next);
            position.insert(next, nodes.len() - 1);
            at = next;
        }
        if edges.is_empty() {
            break;
        }
        let amount = edges.iter().map(|e| left[e.0]).min().unwrap();
        for e in &edges {
            left[e.0] -= amount;
        }
        let entry = found.entry(edges.clone()).or_insert_with(|| {
            order.push(edges.clone());
            0
        });
        *entry += amount as u64;
    }
    let mut out = Vec::new();
    for edges in order {
        let count = found[&edges];
        out.push((Path::from_edges(net, src, edges)?, count));
    }
    Ok(out)
}
