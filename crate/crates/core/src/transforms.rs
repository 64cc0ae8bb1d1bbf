//! Graph constructions used by the single-waypoint pipeline and the
//! outerplanar reduction, with traces that map derived edges back to the
//! edges they came from.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Network, NodeId, Path, WaypointInstance};
use crate::rational::Rational;

/// Provenance of a derived network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTrace {
    /// original edge → derived edges
    pub forward: Vec<Vec<EdgeId>>,
    /// derived edge → original edge
    pub origin: Vec<Option<EdgeId>>,
    /// derived node → original node, `None` for auxiliary nodes
    pub node_origin: Vec<Option<NodeId>>,
    pub scale: Rational,
}

impl TransformTrace {
    fn new(original_edges: usize) -> Self {
        TransformTrace {
            forward: vec![Vec::new(); original_edges],
            origin: Vec::new(),
            node_origin: Vec::new(),
            scale: Rational::ONE,
        }
    }

    fn record_edge(&mut self, original: Option<EdgeId>, derived: EdgeId) {
        debug_assert_eq!(derived.0, self.origin.len());
        self.origin.push(original);
        if let Some(o) = original {
            self.forward[o.0].push(derived);
        }
    }

    /// `self` maps A → B and `next` maps B → C; the result maps A → C.
    pub fn then(&self, next: &TransformTrace) -> TransformTrace {
        let forward = self
            .forward
            .iter()
            .map(|mids| {
                let mut out: Vec<EdgeId> = mids
                    .iter()
                    .flat_map(|m| next.forward[m.0].iter().copied())
                    .collect();
                out.sort();
                out
            })
            .collect();
        let origin = next
            .origin
            .iter()
            .map(|m| m.and_then(|m| self.origin[m.0]))
            .collect();
        let node_origin = next
            .node_origin
            .iter()
            .map(|x| x.and_then(|x| self.node_origin[x.0]))
            .collect();
        TransformTrace {
            forward,
            origin,
            node_origin,
            scale: self.scale * next.scale,
        }
    }

    /// Maps a path of the derived network back to a simple path of the
    /// original network. Returns `None` if the derived path does not start
    /// on an original node or crosses edges inconsistently.
    pub fn lift_path(&self, original: &Network, derived: &Path) -> Option<Path> {
        let start = self
            .node_origin
            .get(derived.nodes.first()?.0)
            .copied()
            .flatten()?;
        let mut nodes = vec![start];
        let mut edges = Vec::new();
        let mut pending: Option<EdgeId> = None;
        for (i, &de) in derived.edges.iter().enumerate() {
            let o = (*self.origin.get(de.0)?)?;
            if let Some(p) = pending {
                if p != o {
                    return None;
                }
            }
            pending = Some(o);
            let next = derived.nodes[i + 1];
            if let Some(v) = self.node_origin.get(next.0).copied().flatten() {
                let at = *nodes.last().unwrap();
                if v != at {
                    if !original.traversable(o, at, v) {
                        return None;
                    }
                    nodes.push(v);
                    edges.push(o);
                }
                pending = None;
            }
        }
        if pending.is_some() {
            return None;
        }
        Some(shortcut(Path { nodes, edges }))
    }
}

/// Removes cycles from a path by jumping from the first occurrence of a
/// repeated node to its last occurrence.
pub fn shortcut(path: Path) -> Path {
    let mut last = HashMap::new();
    for (i, v) in path.nodes.iter().enumerate() {
        last.insert(*v, i);
    }
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut i = 0;
    loop {
        let v = path.nodes[i];
        nodes.push(v);
        let j = last[&v];
        if j + 1 >= path.nodes.len() {
            break;
        }
        edges.push(path.edges[j]);
        i = j + 1;
    }
    Path { nodes, edges }
}

fn copy_nodes(source: &Network, target: &mut Network, trace: &mut TransformTrace) {
    for v in source.nodes() {
        target.add_node(source.name(v));
        trace.node_origin.push(Some(v));
    }
}

/// Replaces each edge of capacity `c` by `min(floor(c), cap)` parallel
/// unit-capacity edges of the same weight.
pub fn expand_capacities(
    net: &Network,
    multiplicity_cap: usize,
) -> Result<(Network, TransformTrace)> {
    if multiplicity_cap < 1 {
        return Err(Error::InvalidArgument(
            "multiplicity cap must be at least 1".into(),
        ));
    }
    let mut out = Network::new(net.kind());
    let mut trace = TransformTrace::new(net.edge_count());
    copy_nodes(net, &mut out, &mut trace);
    for e in net.edges() {
        let copies = e.capacity.floor().clamp(0, multiplicity_cap as i128);
        for _ in 0..copies {
            let id = out.add_edge(e.u, e.v, Rational::ONE, e.weight)?;
            trace.record_edge(Some(e.id), id);
        }
    }
    Ok((out, trace))
}

/// Replaces every undirected edge `{u,v}` of weight ω by two auxiliary
/// nodes `x, y` and the unit arcs `u→x`, `v→x`, `x→y` (ω), `y→v`, `y→u`.
pub fn orient_undirected(net: &Network) -> Result<(Network, TransformTrace)> {
    if net.is_directed() {
        return Err(Error::InvalidArgument(
            "orientation expects an undirected network".into(),
        ));
    }
    let mut out = Network::directed();
    let mut trace = TransformTrace::new(net.edge_count());
    copy_nodes(net, &mut out, &mut trace);
    for e in net.edges() {
        let x = out.add_fresh_node(&format!("x[{}]", e.id.0));
        trace.node_origin.push(None);
        let y = out.add_fresh_node(&format!("y[{}]", e.id.0));
        trace.node_origin.push(None);
        let arcs = [
            (e.u, x, Rational::ZERO),
            (e.v, x, Rational::ZERO),
            (x, y, e.weight),
            (y, e.v, Rational::ZERO),
            (y, e.u, Rational::ZERO),
        ];
        for (a, b, w) in arcs {
            let id = out.add_edge(a, b, Rational::ONE, w)?;
            trace.record_edge(Some(e.id), id);
        }
    }
    Ok((out, trace))
}

/// Appends a super source linked to `s` and `t` and a super sink reached
/// from `w` by two parallel links. Existing ids are preserved.
pub fn attach_super_terminals(
    net: &Network,
    s: NodeId,
    t: NodeId,
    w: NodeId,
) -> Result<(Network, NodeId, NodeId)> {
    for v in [s, t, w] {
        if v.0 >= net.node_count() {
            return Err(Error::UnknownNode(format!("#{}", v.0)));
        }
    }
    let mut out = net.clone();
    let src = out.add_fresh_node("S+");
    let dst = out.add_fresh_node("T+");
    out.add_edge(src, s, Rational::ONE, Rational::ZERO)?;
    out.add_edge(src, t, Rational::ONE, Rational::ZERO)?;
    out.add_edge(w, dst, Rational::ONE, Rational::ZERO)?;
    out.add_edge(w, dst, Rational::ONE, Rational::ZERO)?;
    Ok((out, src, dst))
}

/// Splits every edge that has a parallel sibling into `u–m` (weight ω) and
/// `m–v` (weight 0) through a fresh midpoint, leaving a simple network.
/// Self-loops are copied unchanged.
pub fn subdivide_parallel(net: &Network) -> Result<(Network, TransformTrace)> {
    let key = |u: NodeId, v: NodeId| {
        if net.is_directed() || u <= v {
            (u, v)
        } else {
            (v, u)
        }
    };
    let mut bundle: HashMap<(NodeId, NodeId), usize> = HashMap::new();
    for e in net.edges() {
        *bundle.entry(key(e.u, e.v)).or_default() += 1;
    }
    let mut out = Network::new(net.kind());
    let mut trace = TransformTrace::new(net.edge_count());
    copy_nodes(net, &mut out, &mut trace);
    for e in net.edges() {
        if e.is_loop() || bundle[&key(e.u, e.v)] < 2 {
            let id = out.add_edge(e.u, e.v, e.capacity, e.weight)?;
            trace.record_edge(Some(e.id), id);
            continue;
        }
        let m = out.add_fresh_node(&format!("m[{}]", e.id.0));
        trace.node_origin.push(None);
        let a = out.add_edge(e.u, m, e.capacity, e.weight)?;
        trace.record_edge(Some(e.id), a);
        let b = out.add_edge(m, e.v, e.capacity, Rational::ZERO)?;
        trace.record_edge(Some(e.id), b);
    }
    Ok((out, trace))
}

/// Which preconditions of the outerplanar reduction could be checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub c_max: usize,
    /// Outer-face membership of terminals is never verified.
    pub outer_face_checked: bool,
    /// Nodes whose incident capacity sum is odd (after clamping).
    pub odd_capacity_nodes: Vec<NodeId>,
    pub clamped_edges: Vec<EdgeId>,
}

impl ReductionReport {
    pub fn parity_holds(&self) -> bool {
        self.odd_capacity_nodes.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct EdgeDisjointPathsInstance {
    pub network: Network,
    pub pairs: Vec<(NodeId, NodeId)>,
    pub trace: TransformTrace,
    pub report: ReductionReport,
}

/// Turns a unit-demand instance into a link-disjoint paths instance: each
/// edge of capacity `c` becomes `min(floor(c), n)` unit links, each
/// subdivided once, and consecutive route nodes become terminal pairs.
pub fn outerplanar_reduction(instance: &WaypointInstance) -> Result<EdgeDisjointPathsInstance> {
    if !instance.has_unit_demands() {
        return Err(Error::Unsupported(
            "the outerplanar reduction requires unit demands".into(),
        ));
    }
    let net = &instance.network;
    let c_max = net.node_count();
    let mut clamped_edges = Vec::new();
    let mut incident = vec![0i128; net.node_count()];
    let mut out = Network::new(net.kind());
    let mut trace = TransformTrace::new(net.edge_count());
    copy_nodes(net, &mut out, &mut trace);
    for e in net.edges() {
        let floor = e.capacity.floor().max(0);
        let copies = floor.min(c_max as i128);
        if floor > c_max as i128 {
            clamped_edges.push(e.id);
        }
        incident[e.u.0] += copies;
        incident[e.v.0] += copies;
        for j in 0..copies {
            let m = out.add_fresh_node(&format!("m[{}.{}]", e.id.0, j));
            trace.node_origin.push(None);
            let a = out.add_edge(e.u, m, Rational::ONE, e.weight)?;
            trace.record_edge(Some(e.id), a);
            let b = out.add_edge(m, e.v, Rational::ONE, Rational::ZERO)?;
            trace.record_edge(Some(e.id), b);
        }
    }
    let route = instance.route();
    let pairs = route.windows(2).map(|w| (w[0], w[1])).collect();
    let odd_capacity_nodes = net.nodes().filter(|v| incident[v.0] % 2 != 0).collect();
    Ok(EdgeDisjointPathsInstance {
        network: out,
        pairs,
        trace,
        report: ReductionReport {
            c_max,
            outer_face_checked: false,
            odd_capacity_nodes,
            clamped_edges,
        },
    })
}
