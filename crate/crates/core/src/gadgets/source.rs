//! Brute-force solvers for the source problems of the reductions.

use crate::graph::{EdgeId, Network, NodeId, Path};

/// Pairwise edge-disjoint simple paths, one per terminal pair, found by
/// exhaustive search. Each edge instance serves at most one path.
pub fn disjoint_paths(net: &Network, pairs: &[(NodeId, NodeId)]) -> Option<Vec<Path>> {
    disjoint_paths_within(net, pairs, &vec![true; net.edge_count()])
}

/// As [`disjoint_paths`], using only edges flagged in `allowed`.
pub fn disjoint_paths_within(
    net: &Network,
    pairs: &[(NodeId, NodeId)],
    allowed: &[bool],
) -> Option<Vec<Path>> {
    let mut used: Vec<bool> = allowed.iter().map(|a| !a).collect();
    let mut found = Vec::with_capacity(pairs.len());
    if search(net, pairs, &mut used, &mut found) {
        Some(found)
    } else {
        None
    }
}

fn search(
    net: &Network,
    pairs: &[(NodeId, NodeId)],
    used: &mut [bool],
    found: &mut Vec<Path>,
) -> bool {
    let Some(&(s, t)) = pairs.get(found.len()) else {
        return true;
    };
    let mut visited = vec![false; net.node_count()];
    let mut edges = Vec::new();
    visited[s.0] = true;
    extend(net, pairs, used, found, &mut visited, &mut edges, s, s, t)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    net: &Network,
    pairs: &[(NodeId, NodeId)],
    used: &mut [bool],
    found: &mut Vec<Path>,
    visited: &mut [bool],
    edges: &mut Vec<EdgeId>,
    start: NodeId,
    at: NodeId,
    target: NodeId,
) -> bool {
    if at == target {
        found.push(
            Path::from_edges(net, start, edges.clone()).expect("search keeps paths connected"),
        );
        if search(net, pairs, used, found) {
            return true;
        }
        found.pop();
        return false;
    }
    let next: Vec<(EdgeId, NodeId)> = net.out_edges(at).collect();
    for (e, v) in next {
        if used[e.0] || visited[v.0] {
            continue;
        }
        used[e.0] = true;
        visited[v.0] = true;
        edges.push(e);
        let ok = extend(net, pairs, used, found, visited, edges, start, v, target);
        edges.pop();
        visited[v.0] = false;
        used[e.0] = false;
        if ok {
            return true;
        }
    }
    false
}

/// A split of `integers` into two halves of equal sum, as side flags.
pub fn partition(integers: &[u64]) -> Option<Vec<bool>> {
    let total: u64 = integers.iter().sum();
    if total % 2 == 1 || integers.len() >= 64 {
        return None;
    }
    (0u64..1 << integers.len()).find_map(|mask| {
        let side: Vec<bool> = (0..integers.len()).map(|i| mask >> i & 1 == 1).collect();
        let sum: u64 = integers
            .iter()
            .zip(&side)
            .filter(|(_, &s)| s)
            .map(|(x, _)| x)
            .sum();
        (2 * sum == total).then_some(side)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn partition_examples() {
        assert!(partition(&[1, 1]).is_some());
        assert!(partition(&[1, 1, 1]).is_none());
        assert!(partition(&[3, 1, 1, 2, 2, 1]).is_some());
        assert!(partition(&[5, 1, 1, 1]).is_none());
    }

    #[test]
    fn shared_bridge_blocks_two_paths() {
        let mut net = Network::directed();
        let one = Rational::ONE;
        net.add_named_edge("a", "m", one, one).unwrap();
        net.add_named_edge("c", "m", one, one).unwrap();
        net.add_named_edge("m", "n", one, one).unwrap();
        net.add_named_edge("n", "b", one, one).unwrap();
        net.add_named_edge("n", "d", one, one).unwrap();
        let id = |x: &str| net.node(x).unwrap();
        let pairs = [(id("a"), id("b")), (id("c"), id("d"))];
        assert!(disjoint_paths(&net, &pairs).is_none());
        net.add_named_edge("m", "n", one, one).unwrap();
        let paths = disjoint_paths(&net, &pairs).unwrap();
        assert_eq!(paths.len(), 2);
    }
}
