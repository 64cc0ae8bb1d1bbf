use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Network, NodeId, Path};
use crate::rational::Rational;

/// Adjacency lists of `(head, cost, tag)` triples; the tag identifies the
/// arc to the caller.
pub(crate) type ArcLists = Vec<Vec<(usize, Rational, usize)>>;
/// Predecessor node and arc tag per node.
pub(crate) type Parents = Vec<Option<(usize, usize)>>;

/// Dijkstra over explicit arc lists. Equal-distance parents are resolved in
/// favour of the smaller predecessor index, then the smaller tag; settled
/// nodes are never re-parented.
pub(crate) fn dijkstra_lists(adj: &ArcLists, src: usize) -> (Vec<Option<Rational>>, Parents) {
    let n = adj.len();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[src] = Some(Rational::ZERO);
    heap.push(Reverse((Rational::ZERO, src)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] || dist[u] != Some(d) {
            continue;
        }
        done[u] = true;
        for &(v, c, tag) in &adj[u] {
            if done[v] {
                continue;
            }
            debug_assert!(!c.is_negative(), "negative arc cost in dijkstra");
            let nd = d + c;
            match dist[v] {
                Some(old) if nd > old => {}
                Some(old) if nd == old => {
                    if parent[v].is_none_or(|p| (u, tag) < p) {
                        parent[v] = Some((u, tag));
                    }
                }
                _ => {
                    dist[v] = Some(nd);
                    parent[v] = Some((u, tag));
                    heap.push(Reverse((nd, v)));
                }
            }
        }
    }
    (dist, parent)
}

/// Single-source distances with a parent edge per reached node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLabeling {
    pub source: NodeId,
    pub dist: Vec<Option<Rational>>,
    pub parent: Vec<Option<EdgeId>>,
    // predecessor node along the parent edge
    pred: Vec<Option<NodeId>>,
}

impl DistanceLabeling {
    pub fn distance(&self, v: NodeId) -> Option<Rational> {
        self.dist[v.0]
    }

    pub fn reachable(&self, v: NodeId) -> bool {
        self.dist[v.0].is_some()
    }

    /// Tree path from the source to `v`.
    pub fn path_to(&self, v: NodeId) -> Option<Path> {
        self.dist[v.0]?;
        let mut nodes = vec![v];
        let mut edges = Vec::new();
        let mut at = v;
        while let (Some(e), Some(p)) = (self.parent[at.0], self.pred[at.0]) {
            edges.push(e);
            nodes.push(p);
            at = p;
        }
        nodes.reverse();
        edges.reverse();
        Some(Path { nodes, edges })
    }
}

fn check_weights(net: &Network) -> Result<()> {
    if net.edges().iter().any(|e| e.weight.is_negative()) {
        return Err(Error::NegativeWeight);
    }
    Ok(())
}

/// Exact single-source shortest distances over all edges.
pub fn shortest_path(net: &Network, src: NodeId) -> Result<DistanceLabeling> {
    shortest_path_filtered(net, src, |_| true)
}

/// Shortest distances using only edges accepted by `allow`.
pub fn shortest_path_filtered(
    net: &Network,
    src: NodeId,
    allow: impl Fn(EdgeId) -> bool,
) -> Result<DistanceLabeling> {
    check_weights(net)?;
    if src.0 >= net.node_count() {
        return Err(Error::UnknownNode(format!("#{}", src.0)));
    }
    let mut adj: ArcLists = vec![Vec::new(); net.node_count()];
    for v in net.nodes() {
        for (e, u) in net.out_edges(v) {
            if u != v && allow(e) {
                adj[v.0].push((u.0, net.edge(e).weight, e.0));
            }
        }
    }
    let (dist, par) = dijkstra_lists(&adj, src.0);
    Ok(DistanceLabeling {
        source: src,
        dist,
        parent: par.iter().map(|p| p.map(|(_, e)| EdgeId(e))).collect(),
        pred: par.iter().map(|p| p.map(|(u, _)| NodeId(u))).collect(),
    })
}

/// Distances from every node to `dst` using only edges accepted by `allow`
/// (on directed networks arcs are followed backwards).
pub fn distances_to(
    net: &Network,
    dst: NodeId,
    allow: impl Fn(EdgeId) -> bool,
) -> Vec<Option<Rational>> {
    let mut adj: ArcLists = vec![Vec::new(); net.node_count()];
    for v in net.nodes() {
        for (e, u) in net.in_edges(v) {
            if u != v && allow(e) {
                adj[v.0].push((u.0, net.edge(e).weight, e.0));
            }
        }
    }
    dijkstra_lists(&adj, dst.0).0
}
