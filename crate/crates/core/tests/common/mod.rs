//! Seeded instance families shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use waypoint_core::gadgets::random::{
    random_dag, random_network, random_partial_ktree, random_route, random_tree, seeded, EdgeRanges,
};
use waypoint_core::graph::{Network, NodeId, WaypointInstance};
use waypoint_core::oracle::Limits;
use waypoint_core::Rational;

pub fn oracle_limits() -> Limits {
    Limits::default().with_max_nodes(64).with_steps(50_000_000)
}

/// Undirected, unit demands, one waypoint, `n ≤ 10`, `m ≤ 20`, possibly
/// disconnected.
pub fn single_waypoint_instance(seed: u64) -> WaypointInstance {
    let mut rng = seeded(seed);
    let n = rng.gen_range(4..=10);
    let m = rng.gen_range(n - 1..=20);
    let net = random_network(&mut rng, n, m, false, EdgeRanges::default());
    random_route(&mut rng, net, 1, &[1])
}

/// Connected, undirected, treewidth at most 3, `k ≤ 2`, demands in {1, 2}.
pub fn low_width_instance(seed: u64) -> WaypointInstance {
    let mut rng = seeded(seed);
    let n = rng.gen_range(4..=9);
    let width = rng.gen_range(1..=3);
    let keep = rng.gen_range(0.3..0.9);
    let ranges = EdgeRanges {
        capacity: (1, 3),
        weight: (1, 5),
    };
    let net = random_partial_ktree(&mut rng, n, width, keep, ranges);
    let k = rng.gen_range(0..=2);
    random_route(&mut rng, net, k, &[1, 2])
}

/// DAG with `n ≤ 10`, `k ≤ 3`, demands in {1, 2, 3}.
pub fn dag_instance(seed: u64) -> WaypointInstance {
    let mut rng = seeded(seed);
    let n = rng.gen_range(5..=10);
    let m = rng.gen_range(n..=2 * n + 2);
    let ranges = EdgeRanges {
        capacity: (1, 4),
        weight: (1, 5),
    };
    let net = random_dag(&mut rng, n, m, ranges);
    let k = rng.gen_range(0..=3);
    random_route(&mut rng, net, k, &[1, 2, 3])
}

/// Tree with `n ≤ 10`, `k ≤ 3`, demands in {1, 2, 3}.
pub fn tree_instance(seed: u64) -> WaypointInstance {
    let mut rng = seeded(seed);
    let n = rng.gen_range(5..=10);
    let ranges = EdgeRanges {
        capacity: (1, 6),
        weight: (1, 5),
    };
    let net = random_tree(&mut rng, n, ranges);
    let k = rng.gen_range(0..=3);
    random_route(&mut rng, net, k, &[1, 2, 3])
}

/// Undirected with `n ≤ 8`; capacities in {1, 2} unless `unit`.
pub fn small_instance(seed: u64, unit: bool, k: usize) -> WaypointInstance {
    let mut rng = seeded(seed);
    let n = rng.gen_range(4..=8);
    let m = rng.gen_range(n - 1..=n + 2);
    let ranges = if unit {
        EdgeRanges {
            capacity: (1, 1),
            weight: (1, 5),
        }
    } else {
        EdgeRanges::default()
    };
    let net = random_network(&mut rng, n, m, false, ranges);
    random_route(&mut rng, net, k, &[1])
}

/// Directed network on `n` nodes whose arcs are the set bits of `mask`
/// over all ordered pairs.
pub fn digraph_from_mask(n: usize, mask: u64) -> Network {
    let mut net = Network::directed();
    for i in 0..n {
        net.add_node(&format!("v{i}"));
    }
    let mut bit = 0;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if mask >> bit & 1 == 1 {
                net.add_edge(NodeId(u), NodeId(v), Rational::ONE, Rational::ONE)
                    .unwrap();
            }
            bit += 1;
        }
    }
    net
}

/// All sequences of length `len` over `1..=max`.
pub fn sequences(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=max).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Topology-archive style GraphML: a random spanning tree plus chords,
/// with `LinkLabel` and `weight` data on edges.
pub fn synthetic_graphml(seed: u64, n: usize, m: usize) -> String {
    let mut rng = seeded(seed);
    let mut edges = Vec::with_capacity(m);
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
         <key attr.name=\"label\" attr.type=\"string\" for=\"node\" id=\"d0\" />\n\
         <key attr.name=\"LinkLabel\" attr.type=\"string\" for=\"edge\" id=\"d1\" />\n\
         <key attr.name=\"weight\" attr.type=\"double\" for=\"edge\" id=\"d2\" />\n\
         <graph edgedefault=\"undirected\">\n",
    );
    for v in 0..n {
        out.push_str(&format!(
            "<node id=\"{v}\"><data key=\"d0\">City{v}</data></node>\n"
        ));
    }
    for (u, v) in edges {
        let w = rng.gen_range(1..=20);
        out.push_str(&format!(
            "<edge source=\"{u}\" target=\"{v}\"><data key=\"d1\">10 Gbps</data><data key=\"d2\">{w}</data></edge>\n"
        ));
    }
    out.push_str("</graph>\n</graphml>\n");
    out
}
