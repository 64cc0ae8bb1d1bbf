//! Reductions from hard source problems to waypoint routing, with witness
//! mappings in both directions, plus seeded random generators.
//!
//! Every reduction copies the source network first and only appends nodes
//! and edges, so source node and edge ids stay valid in the gadget.

pub mod random;
pub mod source;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Network, NodeId, Path, WalkSolution, WaypointInstance};
use crate::rational::Rational;

/// The problem a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceProblem {
    DisjointPaths {
        network: Network,
        pairs: Vec<(NodeId, NodeId)>,
    },
    Partition {
        integers: Vec<u64>,
    },
    DemandGraph {
        supply: Network,
        pairs: Vec<(NodeId, NodeId)>,
    },
}

impl SourceProblem {
    /// Brute-force answer with a witness.
    pub fn solve(&self) -> Option<SourceWitness> {
        match self {
            SourceProblem::DisjointPaths { network, pairs }
            | SourceProblem::DemandGraph {
                supply: network,
                pairs,
            } => source::disjoint_paths(network, pairs).map(SourceWitness::Paths),
            SourceProblem::Partition { integers } => {
                source::partition(integers).map(SourceWitness::Split)
            }
        }
    }

    /// Whether `witness` solves this problem.
    pub fn check(&self, witness: &SourceWitness) -> bool {
        match (self, witness) {
            (
                SourceProblem::DisjointPaths { network, pairs }
                | SourceProblem::DemandGraph {
                    supply: network,
                    pairs,
                },
                SourceWitness::Paths(paths),
            ) => {
                if paths.len() != pairs.len() {
                    return false;
                }
                let mut used = vec![false; network.edge_count()];
                for (p, &(s, t)) in paths.iter().zip(pairs) {
                    if p.start() != s || p.end() != t || !p.is_simple() {
                        return false;
                    }
                    for (i, &e) in p.edges.iter().enumerate() {
                        let Some(edge) = network.get_edge(e) else {
                            return false;
                        };
                        if used[e.0] || !network.traversable(edge.id, p.nodes[i], p.nodes[i + 1]) {
                            return false;
                        }
                        used[e.0] = true;
                    }
                }
                true
            }
            (SourceProblem::Partition { integers }, SourceWitness::Split(side)) => {
                let total: u64 = integers.iter().sum();
                let left: u64 = integers
                    .iter()
                    .zip(side)
                    .filter(|(_, &s)| s)
                    .map(|(x, _)| x)
                    .sum();
                side.len() == integers.len() && 2 * left == total
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceWitness {
    Paths(Vec<Path>),
    /// Side flag per integer, in input order.
    Split(Vec<bool>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionFlavor {
    /// Waypoints may change the demand arbitrarily.
    ArbitraryChange,
    /// Consecutive demands differ by at most a factor of two.
    BoundedChange,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Layout {
    TwoPaths {
        into_w: EdgeId,
        out_of_w: EdgeId,
    },
    Partition {
        /// Sorted position to input position.
        order: Vec<usize>,
        /// Route index of each host `r_j`.
        host_at: Vec<usize>,
        leaf: Vec<EdgeId>,
        centre: [EdgeId; 2],
        /// Pendant links of the ramp waypoints after each host.
        ramps: Vec<Vec<EdgeId>>,
    },
    Tw3 {
        into_v: Vec<EdgeId>,
        out_of_v: Vec<EdgeId>,
        cycles: Vec<[EdgeId; 4]>,
    },
    Eulerian {
        first: Vec<EdgeId>,
        spur: Vec<EdgeId>,
        second: Vec<EdgeId>,
        chains: Vec<[EdgeId; 3]>,
        cycles: Vec<[EdgeId; 4]>,
    },
}

/// A reduction result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub instance: WaypointInstance,
    pub source: SourceProblem,
    /// How solutions correspond, in words.
    pub witness_map: String,
    /// Facts about the construction, such as whether it is Eulerian.
    pub properties: BTreeMap<String, String>,
    layout: Layout,
}

fn one() -> Rational {
    Rational::ONE
}

fn require_unit(net: &Network) -> Result<()> {
    if let Some(e) = net.edges().iter().find(|e| e.capacity != 1) {
        return Err(Error::InvalidArgument(format!(
            "edge-disjoint source problems need unit capacities, {} has {}",
            net.edge_label(e.id),
            e.capacity
        )));
    }
    Ok(())
}

fn require_node(net: &Network, v: NodeId) -> Result<()> {
    if v.0 >= net.node_count() {
        return Err(Error::UnknownNode(format!("#{}", v.0)));
    }
    Ok(())
}

/// Appends a four-cycle through `hub` and returns the node opposite the
/// hub together with the links `hub–a, a–c, c–b, b–hub`.
fn hang_cycle(net: &mut Network, hub: NodeId, tag: &str) -> (NodeId, [EdgeId; 4]) {
    let a = net.add_fresh_node(&format!("a{tag}"));
    let c = net.add_fresh_node(&format!("c{tag}"));
    let b = net.add_fresh_node(&format!("b{tag}"));
    let links = [
        net.add_edge(hub, a, one(), one()).unwrap(),
        net.add_edge(a, c, one(), one()).unwrap(),
        net.add_edge(c, b, one(), one()).unwrap(),
        net.add_edge(b, hub, one(), one()).unwrap(),
    ];
    (c, links)
}

fn path(net: &Network, start: NodeId, edges: Vec<EdgeId>) -> Result<Path> {
    Path::from_edges(net, start, edges)
}

/// Directed two edge-disjoint paths: a fresh waypoint `w` with arcs
/// `t1 → w` and `w → s2`, routed from `s1` to `t2`.
pub fn gadget_two_disjoint_paths(
    network: &Network,
    pairs: [(NodeId, NodeId); 2],
) -> Result<GadgetOutput> {
    if !network.is_directed() {
        return Err(Error::InvalidArgument(
            "two disjoint paths gadget needs a directed network".into(),
        ));
    }
    require_unit(network)?;
    let [(s1, t1), (s2, t2)] = pairs;
    for v in [s1, t1, s2, t2] {
        require_node(network, v)?;
    }
    let mut net = network.clone();
    let w = net.add_fresh_node("w");
    let into_w = net.add_edge(t1, w, one(), one())?;
    let out_of_w = net.add_edge(w, s2, one(), one())?;
    let instance = WaypointInstance::builder(net, s1, t2)
        .waypoints(vec![w])
        .allow_degenerate(true)
        .build()?;
    Ok(GadgetOutput {
        instance,
        source: SourceProblem::DisjointPaths {
            network: network.clone(),
            pairs: pairs.to_vec(),
        },
        witness_map: "walk = P1, (t1,w), (w,s2), P2; dropping the two new arcs splits a walk back into P1 and P2"
            .into(),
        properties: BTreeMap::new(),
        layout: Layout::TwoPaths { into_w, out_of_w },
    })
}

/// Partition as a two-star network whose centres are joined by two
/// parallel links of capacity `S/2`. Route nodes alternate between the
/// stars, so every main segment crosses the centre links once and carries
/// one integer as its demand (integers in ascending order). An odd sum
/// yields an instance that is infeasible by capacity alone.
pub fn gadget_partition(integers: &[u64], flavor: PartitionFlavor) -> Result<GadgetOutput> {
    if integers.is_empty() {
        return Err(Error::EmptyInput);
    }
    if integers.contains(&0) {
        return Err(Error::InvalidArgument(
            "partition integers must be positive".into(),
        ));
    }
    let l = integers.len();
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by_key(|&i| (integers[i], i));
    let sorted: Vec<u64> = order.iter().map(|&i| integers[i]).collect();
    let total: u64 = sorted.iter().sum();
    let s = Rational::from_int(total as i64);
    let half = s / Rational::from_int(2);

    let mut net = Network::undirected();
    let left = net.add_node("L");
    let right = net.add_node("R");
    let centre = [
        net.add_edge(left, right, half, one())?,
        net.add_edge(left, right, half, one())?,
    ];
    let mut hosts = Vec::with_capacity(l + 1);
    let mut leaf = Vec::with_capacity(l + 1);
    for j in 0..=l {
        let side = if j % 2 == 0 { left } else { right };
        let name = if j == 0 {
            "s".to_string()
        } else if j == l {
            "t".to_string()
        } else {
            format!("r{j}")
        };
        let v = net.add_node(&name);
        leaf.push(net.add_edge(side, v, s, one())?);
        hosts.push(v);
    }

    let mut route = vec![hosts[0]];
    let mut demands = Vec::new();
    let mut host_at = vec![0];
    let mut ramps = vec![Vec::new(); l + 1];
    let ramp_capacity = s * Rational::from_int(2);
    for j in 1..=l {
        demands.push(Rational::from_int(sorted[j - 1] as i64));
        host_at.push(route.len());
        route.push(hosts[j]);
        if j == l || flavor == PartitionFlavor::ArbitraryChange {
            continue;
        }
        let mut cur = sorted[j - 1];
        let mut step = 0;
        while 2 * cur < sorted[j] {
            cur *= 2;
            step += 1;
            let p = net.add_fresh_node(&format!("r{j}_{step}"));
            ramps[j].push(net.add_edge(hosts[j], p, ramp_capacity, one())?);
            demands.push(Rational::from_int(cur as i64));
            route.push(p);
        }
    }
    let instance = WaypointInstance::builder(net, route[0], route[route.len() - 1])
        .waypoints(route[1..route.len() - 1].to_vec())
        .demands(demands)
        .build()?;
    let mut properties = BTreeMap::new();
    properties.insert("sum".into(), total.to_string());
    properties.insert(
        "flavor".into(),
        match flavor {
            PartitionFlavor::ArbitraryChange => "arbitrary_change",
            PartitionFlavor::BoundedChange => "bounded_change",
        }
        .into(),
    );
    Ok(GadgetOutput {
        instance,
        source: SourceProblem::Partition {
            integers: integers.to_vec(),
        },
        witness_map:
            "integer j crosses between the stars on centre link 0 or 1 according to its side".into(),
        properties,
        layout: Layout::Partition {
            order,
            host_at,
            leaf,
            centre,
            ramps,
        },
    })
}

/// Edge-disjoint paths on a series-parallel network: a new hub `v` joined
/// to every `t_i` (except the last) and every `s_j` (except the first).
/// The route is `s1, t1, c1, s2, t2, c2, ..., sk, tk` where each `c_i` sits
/// on its own four-cycle through `v`, so no node hosts two waypoints.
pub fn gadget_tw3(network: &Network, pairs: &[(NodeId, NodeId)]) -> Result<GadgetOutput> {
    if network.is_directed() {
        return Err(Error::InvalidArgument(
            "treewidth-three gadget needs an undirected network".into(),
        ));
    }
    let k = pairs.len();
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "treewidth-three gadget needs at least 2 pairs, found {k}"
        )));
    }
    require_unit(network)?;
    let mut seen = std::collections::HashSet::new();
    for &(s, t) in pairs {
        for v in [s, t] {
            require_node(network, v)?;
            if !seen.insert(v) {
                return Err(Error::InvalidArgument(format!(
                    "terminal {} appears twice",
                    network.name(v)
                )));
            }
        }
    }
    let mut net = network.clone();
    let v = net.add_fresh_node("v");
    let mut into_v = Vec::new();
    let mut out_of_v = Vec::new();
    let mut cycles = Vec::new();
    let mut route = Vec::new();
    for (i, &(s, t)) in pairs.iter().enumerate() {
        route.push(s);
        route.push(t);
        if i + 1 < k {
            into_v.push(net.add_edge(t, v, one(), one())?);
            out_of_v.push(net.add_edge(v, pairs[i + 1].0, one(), one())?);
            let (c, links) = hang_cycle(&mut net, v, &(i + 1).to_string());
            cycles.push(links);
            route.push(c);
        }
    }
    let instance = WaypointInstance::builder(net, route[0], route[route.len() - 1])
        .waypoints(route[1..route.len() - 1].to_vec())
        .build()?;
    let mut properties = BTreeMap::new();
    properties.insert("waypoints".into(), instance.k().to_string());
    properties.insert("hub_degree_before_cycles".into(), (2 * (k - 1)).to_string());
    properties.insert(
        "treewidth".into(),
        "at most the input treewidth plus one".into(),
    );
    Ok(GadgetOutput {
        instance,
        source: SourceProblem::DisjointPaths {
            network: network.clone(),
            pairs: pairs.to_vec(),
        },
        witness_map: "segment s_i → t_i is path i; the hops through the hub join consecutive pairs"
            .into(),
        properties,
        layout: Layout::Tw3 {
            into_v,
            out_of_v,
            cycles,
        },
    })
}

/// Edge-disjoint paths where supply plus demand is Eulerian. Each demand
/// edge `s_i t_i` is split twice into `s_i – y_i – z_i – t_i`, a centre `v`
/// gets two links to every `s_i`, one of them through a waypoint `x_i`,
/// and the closed route from `v` visits `x_i, z_i, y_i` for each pair with
/// a four-cycle node between pairs. The centre's links are exactly enough
/// for one excursion per pair, so the excursion for pair `i` enters at
/// `s_i` and must cross the supply network to `t_i`.
pub fn gadget_eulerian(supply: &Network, pairs: &[(NodeId, NodeId)]) -> Result<GadgetOutput> {
    if supply.is_directed() {
        return Err(Error::InvalidArgument(
            "Eulerian gadget needs an undirected supply network".into(),
        ));
    }
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    require_unit(supply)?;
    for &(s, t) in pairs {
        require_node(supply, s)?;
        require_node(supply, t)?;
        if s == t {
            return Err(Error::InvalidArgument(format!(
                "demand pair at {} has equal ends",
                supply.name(s)
            )));
        }
    }
    let k = pairs.len();
    let mut net = supply.clone();
    let v = net.add_fresh_node("v");
    let (mut first, mut spur, mut second) = (Vec::new(), Vec::new(), Vec::new());
    let (mut chains, mut cycles) = (Vec::new(), Vec::new());
    let mut route = vec![v];
    for (i, &(s, t)) in pairs.iter().enumerate() {
        let x = net.add_fresh_node(&format!("x{}", i + 1));
        let y = net.add_fresh_node(&format!("y{}", i + 1));
        let z = net.add_fresh_node(&format!("z{}", i + 1));
        chains.push([
            net.add_edge(s, y, one(), one())?,
            net.add_edge(y, z, one(), one())?,
            net.add_edge(z, t, one(), one())?,
        ]);
        first.push(net.add_edge(v, x, one(), one())?);
        spur.push(net.add_edge(x, s, one(), one())?);
        second.push(net.add_edge(v, s, one(), one())?);
        route.push(x);
        route.push(z);
        route.push(y);
        if i + 1 < k {
            let (c, links) = hang_cycle(&mut net, v, &(i + 1).to_string());
            cycles.push(links);
            route.push(c);
        }
    }
    route.push(v);
    let mut degree = vec![0usize; net.node_count()];
    for e in net.edges() {
        degree[e.u.0] += 1;
        degree[e.v.0] += 1;
    }
    let eulerian = degree.iter().all(|d| d % 2 == 0);
    let instance = WaypointInstance::builder(net, v, v)
        .waypoints(route[1..route.len() - 1].to_vec())
        .build()?;
    let mut properties = BTreeMap::new();
    properties.insert("eulerian".into(), eulerian.to_string());
    properties.insert("centre_degree".into(), degree[v.0].to_string());
    Ok(GadgetOutput {
        instance,
        source: SourceProblem::DemandGraph {
            supply: supply.clone(),
            pairs: pairs.to_vec(),
        },
        witness_map: "from the centre, pair i walks v → x_i → s_i, along path i to t_i, back over its split demand edge to s_i and home to v"
            .into(),
        properties,
        layout: Layout::Eulerian {
            first,
            spur,
            second,
            chains,
            cycles,
        },
    })
}

impl GadgetOutput {
    pub fn is_eulerian(&self) -> Option<bool> {
        self.properties.get("eulerian").map(|v| v == "true")
    }

    /// Turns a source solution into a walk on the gadget.
    pub fn witness_to_walk(&self, witness: &SourceWitness) -> Result<WalkSolution> {
        let inst = &self.instance;
        let net = &inst.network;
        let route = inst.route();
        let bad =
            || Error::InvalidArgument("witness does not match the gadget's source problem".into());
        let segments = match (&self.layout, witness) {
            (Layout::TwoPaths { into_w, out_of_w }, SourceWitness::Paths(p)) if p.len() == 2 => {
                let mut a = p[0].edges.clone();
                a.push(*into_w);
                let mut b = vec![*out_of_w];
                b.extend(&p[1].edges);
                vec![path(net, route[0], a)?, path(net, route[1], b)?]
            }
            (
                Layout::Partition {
                    order,
                    host_at,
                    leaf,
                    centre,
                    ramps,
                },
                SourceWitness::Split(side),
            ) if side.len() == order.len() => {
                let l = order.len();
                let mut segs = Vec::new();
                for j in 0..l {
                    // ramp segments hosted after r_j
                    let mut tail = Vec::new();
                    if j > 0 {
                        for (a, &link) in ramps[j].iter().enumerate() {
                            let mut edges = tail.clone();
                            edges.push(link);
                            segs.push(path(net, route[host_at[j] + a], edges)?);
                            tail = vec![link];
                        }
                    }
                    let mut edges = tail;
                    edges.push(leaf[j]);
                    edges.push(centre[usize::from(side[order[j]])]);
                    edges.push(leaf[j + 1]);
                    let start = route[host_at[j] + if j > 0 { ramps[j].len() } else { 0 }];
                    segs.push(path(net, start, edges)?);
                }
                segs
            }
            (
                Layout::Tw3 {
                    into_v,
                    out_of_v,
                    cycles,
                },
                SourceWitness::Paths(p),
            ) if p.len() == into_v.len() + 1 => {
                let mut segs = Vec::new();
                for (i, pi) in p.iter().enumerate() {
                    segs.push(path(net, route[3 * i], pi.edges.clone())?);
                    if i < into_v.len() {
                        let [va, ac, cb, bv] = cycles[i];
                        segs.push(path(net, route[3 * i + 1], vec![into_v[i], va, ac])?);
                        segs.push(path(net, route[3 * i + 2], vec![cb, bv, out_of_v[i]])?);
                    }
                }
                segs
            }
            (
                Layout::Eulerian {
                    first,
                    spur,
                    second,
                    chains,
                    cycles,
                },
                SourceWitness::Paths(p),
            ) if p.len() == chains.len() => {
                let k = chains.len();
                let mut segs = Vec::new();
                for (i, pi) in p.iter().enumerate() {
                    let [sy, yz, zt] = chains[i];
                    let mut to_x = Vec::new();
                    if i > 0 {
                        let [_, _, cb, bv] = cycles[i - 1];
                        to_x.extend([cb, bv]);
                    }
                    to_x.push(first[i]);
                    segs.push(path(net, route[4 * i], to_x)?);
                    let mut to_z = vec![spur[i]];
                    to_z.extend(&pi.edges);
                    to_z.push(zt);
                    segs.push(path(net, route[4 * i + 1], to_z)?);
                    segs.push(path(net, route[4 * i + 2], vec![yz])?);
                    let mut home = vec![sy, second[i]];
                    if i + 1 < k {
                        let [va, ac, _, _] = cycles[i];
                        home.extend([va, ac]);
                    }
                    segs.push(path(net, route[4 * i + 3], home)?);
                }
                segs
            }
            _ => return Err(bad()),
        };
        WalkSolution::from_segments(inst, segments)
    }

    /// Recovers a source solution from a feasible gadget walk. The walk is
    /// first read along the layout of the reduction; if it takes a
    /// different but still feasible shape, the paths are searched for
    /// among the source edges the walk uses.
    pub fn walk_to_witness(&self, walk: &WalkSolution) -> Result<SourceWitness> {
        if walk.segments.len() != self.instance.segment_count() {
            return Err(Error::MalformedResult(
                "walk has the wrong number of segments".into(),
            ));
        }
        let structural = self.read_layout(walk);
        if let Ok(w) = &structural {
            if self.source.check(w) {
                return structural;
            }
        }
        match &self.source {
            SourceProblem::DisjointPaths { network, pairs }
            | SourceProblem::DemandGraph {
                supply: network,
                pairs,
            } => {
                let mut allowed = vec![false; network.edge_count()];
                for e in walk.segments.iter().flat_map(|p| &p.edges) {
                    if let Some(a) = allowed.get_mut(e.0) {
                        *a = true;
                    }
                }
                source::disjoint_paths_within(network, pairs, &allowed)
                    .map(SourceWitness::Paths)
                    .ok_or_else(|| {
                        Error::MalformedResult(
                            "the source edges used by the walk hold no disjoint paths".into(),
                        )
                    })
            }
            SourceProblem::Partition { .. } => structural,
        }
    }

    fn read_layout(&self, walk: &WalkSolution) -> Result<SourceWitness> {
        let segs = &walk.segments;
        let source_edges = match &self.source {
            SourceProblem::DisjointPaths { network, .. }
            | SourceProblem::DemandGraph {
                supply: network, ..
            } => network.edge_count(),
            SourceProblem::Partition { .. } => 0,
        };
        let sub = |p: &Path, from: usize, to: usize| -> Result<Path> {
            let edges = p.edges[from..p.edges.len() - to].to_vec();
            if edges.iter().any(|e| e.0 >= source_edges) {
                return Err(Error::MalformedResult(
                    "segment leaves the source network where the reduction expects it to stay"
                        .into(),
                ));
            }
            Ok(Path {
                nodes: p.nodes[from..p.nodes.len() - to].to_vec(),
                edges,
            })
        };
        match &self.layout {
            Layout::TwoPaths { .. } => Ok(SourceWitness::Paths(vec![
                sub(&segs[0], 0, 1)?,
                sub(&segs[1], 1, 0)?,
            ])),
            Layout::Partition {
                order,
                host_at,
                centre,
                ..
            } => {
                let mut side = vec![false; order.len()];
                for j in 0..order.len() {
                    let seg = &segs[host_at[j + 1] - 1];
                    let on = |c: EdgeId| seg.edges.contains(&c);
                    side[order[j]] = match (on(centre[0]), on(centre[1])) {
                        (true, false) => false,
                        (false, true) => true,
                        _ => {
                            return Err(Error::MalformedResult(format!(
                                "main segment {j} does not cross exactly one centre link"
                            )))
                        }
                    };
                }
                Ok(SourceWitness::Split(side))
            }
            Layout::Tw3 { into_v, .. } => {
                let paths = (0..=into_v.len())
                    .map(|i| sub(&segs[3 * i], 0, 0))
                    .collect::<Result<Vec<_>>>()?;
                Ok(SourceWitness::Paths(paths))
            }
            Layout::Eulerian { chains, .. } => {
                let paths = (0..chains.len())
                    .map(|i| sub(&segs[4 * i + 1], 1, 1))
                    .collect::<Result<Vec<_>>>()?;
                Ok(SourceWitness::Paths(paths))
            }
        }
    }
}
