//! Seeded random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{topological_order, Network, NodeId, WaypointInstance};
use crate::rational::Rational;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ranges for edge attributes, inclusive.
#[derive(Clone, Copy, Debug)]
pub struct EdgeRanges {
    pub capacity: (i64, i64),
    pub weight: (i64, i64),
}

impl Default for EdgeRanges {
    fn default() -> Self {
        EdgeRanges {
            capacity: (1, 2),
            weight: (1, 5),
        }
    }
}

impl EdgeRanges {
    pub fn unit() -> Self {
        EdgeRanges {
            capacity: (1, 1),
            weight: (1, 1),
        }
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> (Rational, Rational) {
        (
            Rational::from_int(rng.gen_range(self.capacity.0..=self.capacity.1)),
            Rational::from_int(rng.gen_range(self.weight.0..=self.weight.1)),
        )
    }
}

fn with_nodes(n: usize, directed: bool) -> Network {
    let mut net = if directed {
        Network::directed()
    } else {
        Network::undirected()
    };
    for i in 0..n {
        net.add_node(&format!("v{i}"));
    }
    net
}

fn connect<R: Rng + ?Sized>(
    net: &mut Network,
    rng: &mut R,
    u: usize,
    v: usize,
    ranges: EdgeRanges,
) {
    let (c, w) = ranges.draw(rng);
    net.add_edge(NodeId(u), NodeId(v), c, w)
        .expect("generated edge is valid");
}

/// `m` edges between uniformly chosen distinct endpoints; parallel edges
/// may occur and the result need not be connected.
pub fn random_network<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    directed: bool,
    ranges: EdgeRanges,
) -> Network {
    assert!(n >= 2);
    let mut net = with_nodes(n, directed);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        connect(&mut net, rng, u, v, ranges);
    }
    net
}

/// Random spanning tree plus `extra` further edges.
pub fn random_connected<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra: usize,
    ranges: EdgeRanges,
) -> Network {
    let mut net = random_tree(rng, n, ranges);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        connect(&mut net, rng, u, v, ranges);
    }
    net
}

pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, ranges: EdgeRanges) -> Network {
    let mut net = with_nodes(n, false);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        connect(&mut net, rng, parent, order[i], ranges);
    }
    net
}

/// Arcs only go forward in a hidden random order.
pub fn random_dag<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, ranges: EdgeRanges) -> Network {
    let mut net = with_nodes(n, true);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for _ in 0..m {
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        connect(&mut net, rng, order[i], order[j], ranges);
    }
    net
}

/// Connected graph of treewidth at most `width`: a random `width`-tree
/// with each non-tree-critical edge kept with probability `keep`.
pub fn random_partial_ktree<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    width: usize,
    keep: f64,
    ranges: EdgeRanges,
) -> Network {
    let base = (width + 1).min(n);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..base {
        for b in a + 1..base {
            edges.push((a, b));
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    if base == width + 1 {
        for skip in 0..base {
            cliques.push((0..base).filter(|&x| x != skip).collect());
        }
    }
    for v in base..n {
        let clique = cliques[rng.gen_range(0..cliques.len())].clone();
        for &u in &clique {
            edges.push((u, v));
        }
        for skip in 0..clique.len() {
            let mut c: Vec<usize> = clique
                .iter()
                .copied()
                .filter(|&x| x != clique[skip])
                .collect();
            c.push(v);
            cliques.push(c);
        }
    }
    edges.shuffle(rng);
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut tree = Vec::new();
    let mut rest = Vec::new();
    for (u, v) in edges {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        if a != b {
            root[a] = b;
            tree.push((u, v));
        } else {
            rest.push((u, v));
        }
    }
    let mut net = with_nodes(n, false);
    for (u, v) in tree {
        connect(&mut net, rng, u, v, ranges);
    }
    for (u, v) in rest {
        if rng.gen_bool(keep) {
            connect(&mut net, rng, u, v, ranges);
        }
    }
    net
}

/// Picks `k + 2` distinct route nodes. On directed acyclic networks the
/// route follows the topological order so that it is not trivially
/// infeasible.
pub fn random_route<R: Rng + ?Sized>(
    rng: &mut R,
    net: Network,
    k: usize,
    demand_choices: &[i64],
) -> WaypointInstance {
    let n = net.node_count();
    assert!(k + 2 <= n, "not enough nodes for the route");
    let mut nodes: Vec<NodeId> = net.nodes().collect();
    nodes.shuffle(rng);
    let mut route: Vec<NodeId> = nodes[..k + 2].to_vec();
    if net.is_directed() {
        if let Some(order) = topological_order(&net) {
            let mut pos = vec![0; n];
            for (i, v) in order.iter().enumerate() {
                pos[*v] = i;
            }
            route.sort_by_key(|v| pos[v.0]);
        }
    }
    let demands = (0..=k)
        .map(|_| Rational::from_int(*demand_choices.choose(rng).expect("demand choices")))
        .collect();
    WaypointInstance::builder(net, route[0], route[k + 1])
        .waypoints(route[1..=k].to_vec())
        .demands(demands)
        .build()
        .expect("generated route is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, StructureTag};
    use crate::treewidth::decompose;

    #[test]
    fn same_seed_same_instance() {
        let a = random_network(&mut seeded(7), 6, 9, false, EdgeRanges::default());
        let b = random_network(&mut seeded(7), 6, 9, false, EdgeRanges::default());
        assert_eq!(a, b);
    }

    #[test]
    fn generators_respect_their_class() {
        let mut rng = seeded(3);
        for _ in 0..20 {
            let t = random_tree(&mut rng, 7, EdgeRanges::default());
            assert_eq!(classify(&t).unwrap().tag, StructureTag::Tree);
            let d = random_dag(&mut rng, 7, 12, EdgeRanges::default());
            assert_eq!(classify(&d).unwrap().tag, StructureTag::Dag);
            let p = random_partial_ktree(&mut rng, 9, 3, 0.7, EdgeRanges::default());
            assert!(decompose(&p, 3).is_some());
        }
    }

    #[test]
    fn dag_routes_follow_the_order() {
        let mut rng = seeded(11);
        let net = random_dag(&mut rng, 8, 14, EdgeRanges::default());
        let order = topological_order(&net).unwrap();
        let inst = random_route(&mut rng, net, 2, &[1]);
        let pos = |v: NodeId| order.iter().position(|&x| x == v.0).unwrap();
        let r = inst.route();
        assert!(r.windows(2).all(|w| pos(w[0]) < pos(w[1])));
    }
}
