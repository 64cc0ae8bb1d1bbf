//! Exact dynamic programming over a nice tree decomposition for undirected
//! instances of bounded treewidth.
//!
//! Every edge is decided at the forget node of whichever endpoint leaves
//! the decomposition first; at that moment the other endpoint is still in
//! the bag. Each segment's partial solution is then a linear forest whose
//! component ends are bag nodes or an already forgotten route endpoint, so
//! a signature records per segment and per bag position one of: free,
//! inner, or an end together with where the other end of its component
//! lies. A segment whose path has closed is marked done and accepts no
//! further edges.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, NodeId, Path, WalkSolution, WaypointInstance};
use crate::rational::Rational;
use crate::treewidth::decomposition::decompose;
use crate::treewidth::nice::{make_nice, NiceDecomposition, NiceKind};

const FREE: u8 = 0;
const INNER: u8 = 1;
const TO_START: u8 = 2;
const TO_TARGET: u8 = 3;
const TO_BASE: u8 = 4;

#[derive(Clone, Copy, Debug)]
pub struct DpOptions {
    /// Largest accepted `(width + 1) * (k + 1)`.
    pub max_state_product: usize,
    /// Re-derive every stored signature from its partial solution.
    pub verify: bool,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            max_state_product: 16,
            verify: false,
        }
    }
}

/// Counters from one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub width: usize,
    pub nice_nodes: usize,
    pub max_table: usize,
    pub signatures: usize,
}

enum Trace {
    Empty,
    Use {
        edge: EdgeId,
        mask: u32,
        prev: Rc<Trace>,
    },
    Join(Rc<Trace>, Rc<Trace>),
}

fn collect(trace: &Rc<Trace>) -> Vec<(EdgeId, u32)> {
    let mut out = Vec::new();
    let mut stack = vec![trace.clone()];
    while let Some(t) = stack.pop() {
        match &*t {
            Trace::Empty => {}
            Trace::Use { edge, mask, prev } => {
                out.push((*edge, *mask));
                stack.push(prev.clone());
            }
            Trace::Join(a, b) => {
                stack.push(a.clone());
                stack.push(b.clone());
            }
        }
    }
    out
}

type Table = BTreeMap<Vec<u8>, (Rational, Rc<Trace>)>;

fn offer(table: &mut Table, sig: Vec<u8>, cost: Rational, trace: Rc<Trace>) {
    match table.get_mut(&sig) {
        Some(slot) => {
            if cost < slot.0 {
                *slot = (cost, trace);
            }
        }
        None => {
            table.insert(sig, (cost, trace));
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum End {
    Bag(usize),
    Start,
    Target,
}

fn degree(mark: u8) -> usize {
    match mark {
        FREE => 0,
        INNER => 2,
        _ => 1,
    }
}

fn far(pos: usize, mark: u8) -> End {
    match mark {
        FREE => End::Bag(pos),
        TO_START => End::Start,
        TO_TARGET => End::Target,
        m => End::Bag((m - TO_BASE) as usize),
    }
}

fn pointer(end: End) -> u8 {
    match end {
        End::Bag(q) => TO_BASE + q as u8,
        End::Start => TO_START,
        End::Target => TO_TARGET,
    }
}

/// Upper bound on distinct signatures for a bag of size `b`.
pub fn signature_bound(b: usize, segments: usize) -> u128 {
    let per = (b as u128 + 3).saturating_pow(b as u32).saturating_add(1);
    per.saturating_pow(segments as u32)
}

struct Ctx {
    starts: Vec<usize>,
    ends: Vec<usize>,
}

impl Ctx {
    fn segments(&self) -> usize {
        self.starts.len()
    }

    fn start_kind(&self, i: usize, bag: &[usize], e: End) -> bool {
        match e {
            End::Start => true,
            End::Bag(p) => bag[p] == self.starts[i],
            End::Target => false,
        }
    }

    fn target_kind(&self, i: usize, bag: &[usize], e: End) -> bool {
        match e {
            End::Target => true,
            End::Bag(p) => bag[p] == self.ends[i],
            End::Start => false,
        }
    }

    fn closes(&self, i: usize, bag: &[usize], a: End, b: End) -> bool {
        (self.start_kind(i, bag, a) && self.target_kind(i, bag, b))
            || (self.start_kind(i, bag, b) && self.target_kind(i, bag, a))
    }

    fn route_end(&self, i: usize, node: usize) -> bool {
        node == self.starts[i] || node == self.ends[i]
    }

    fn initial(&self) -> Vec<u8> {
        (0..self.segments())
            .map(|i| u8::from(self.starts[i] == self.ends[i]))
            .collect()
    }

    /// Adds an edge between bag positions `a` and `b` to one segment.
    fn add_edge(&self, i: usize, seg: &mut [u8], bag: &[usize], a: usize, b: usize) -> bool {
        if seg[0] == 1 {
            return false;
        }
        let (ma, mb) = (seg[1 + a], seg[1 + b]);
        for (p, m) in [(a, ma), (b, mb)] {
            if m == INNER || (m != FREE && self.route_end(i, bag[p])) {
                return false;
            }
        }
        if ma == TO_BASE + b as u8 {
            return false;
        }
        let (e1, e2) = (far(a, ma), far(b, mb));
        if ma != FREE {
            seg[1 + a] = INNER;
        }
        if mb != FREE {
            seg[1 + b] = INNER;
        }
        if self.closes(i, bag, e1, e2) {
            for p in 0..bag.len() {
                if End::Bag(p) == e1 || End::Bag(p) == e2 {
                    continue;
                }
                if degree(seg[1 + p]) == 1 {
                    return false;
                }
            }
            seg.fill(FREE);
            seg[0] = 1;
            return true;
        }
        if let End::Bag(p) = e1 {
            seg[1 + p] = pointer(e2);
        }
        if let End::Bag(p) = e2 {
            seg[1 + p] = pointer(e1);
        }
        true
    }

    fn forget_segment(&self, i: usize, seg: &[u8], bag: &[usize], p: usize) -> Option<Vec<u8>> {
        let mut s = seg.to_vec();
        if s[0] == 0 {
            let v = bag[p];
            match s[1 + p] {
                FREE => {
                    if self.route_end(i, v) {
                        return None;
                    }
                }
                INNER => {}
                TO_START | TO_TARGET => return None,
                m => {
                    let q = (m - TO_BASE) as usize;
                    s[1 + q] = if v == self.starts[i] {
                        TO_START
                    } else if v == self.ends[i] {
                        TO_TARGET
                    } else {
                        return None;
                    };
                }
            }
        }
        s.remove(1 + p);
        for m in &mut s[1..] {
            if *m >= TO_BASE && ((*m - TO_BASE) as usize) > p {
                *m -= 1;
            }
        }
        Some(s)
    }

    fn join_segment(&self, i: usize, s1: &[u8], s2: &[u8], bag: &[usize]) -> Option<Vec<u8>> {
        let b = bag.len();
        let empty = |s: &[u8]| s[1..].iter().all(|&m| m == FREE);
        match (s1[0], s2[0]) {
            (1, 1) => return None,
            (1, _) => return empty(s2).then(|| s1.to_vec()),
            (_, 1) => return empty(s1).then(|| s2.to_vec()),
            _ => {}
        }
        let mut deg = vec![0usize; b];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); b + 2];
        let mut root: Vec<usize> = (0..b + 2).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for s in [s1, s2] {
            for p in 0..b {
                let m = s[1 + p];
                deg[p] += degree(m);
                if degree(m) != 1 {
                    continue;
                }
                let other = match far(p, m) {
                    End::Bag(q) if q < p => continue,
                    End::Bag(q) => q,
                    End::Start => b,
                    End::Target => b + 1,
                };
                let (ra, rb) = (find(&mut root, p), find(&mut root, other));
                if ra == rb {
                    return None;
                }
                root[ra] = rb;
                adj[p].push(other);
                adj[other].push(p);
            }
        }
        for p in 0..b {
            if deg[p] > 2 || (deg[p] > 1 && self.route_end(i, bag[p])) {
                return None;
            }
        }
        let as_end = |x: usize| match x {
            x if x == b => End::Start,
            x if x == b + 1 => End::Target,
            x => End::Bag(x),
        };
        let mut out = vec![0u8; b + 1];
        for p in 0..b {
            out[1 + p] = match deg[p] {
                0 => FREE,
                2 => INNER,
                _ => 0,
            };
        }
        let mut ends = 0;
        let mut closed = false;
        for x in 0..b + 2 {
            if adj[x].len() != 1 {
                continue;
            }
            ends += 1;
            let (mut prev, mut cur) = (x, adj[x][0]);
            while adj[cur].len() == 2 {
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
            if self.closes(i, bag, as_end(x), as_end(cur)) {
                closed = true;
            }
            if x < b {
                out[1 + x] = pointer(as_end(cur));
            }
        }
        if closed {
            if ends != 2 {
                return None;
            }
            out.fill(FREE);
            out[0] = 1;
        }
        Some(out)
    }
}

/// Solves an undirected instance exactly, building its own decomposition.
pub fn solve_tw_dp(
    instance: &WaypointInstance,
    options: DpOptions,
) -> Result<Option<WalkSolution>> {
    check_supported(instance)?;
    let segments = instance.segment_count();
    if segments > options.max_state_product {
        return Err(Error::StateSpaceTooLarge(format!(
            "{segments} segments exceed the limit of {}",
            options.max_state_product
        )));
    }
    let max_width = options.max_state_product / segments - 1;
    let td = decompose(&instance.network, max_width).ok_or_else(|| {
        Error::StateSpaceTooLarge(format!(
            "no decomposition of width at most {max_width} found for {segments} segments"
        ))
    })?;
    let nice = make_nice(&td)?;
    solve_with_decomposition(instance, &nice, options).map(|(s, _)| s)
}

fn check_supported(instance: &WaypointInstance) -> Result<()> {
    if instance.network.is_directed() {
        return Err(Error::Unsupported("directed networks".into()));
    }
    if instance.bounds.is_some() {
        return Err(Error::Unsupported("distance bounds".into()));
    }
    Ok(())
}

fn check_cover(instance: &WaypointInstance, nice: &NiceDecomposition) -> Result<()> {
    let net = &instance.network;
    let mut present = vec![false; net.node_count()];
    for node in &nice.nodes {
        for &v in &node.bag {
            if v >= net.node_count() {
                return Err(Error::InvalidDecomposition(format!(
                    "bag holds unknown node {v}"
                )));
            }
            present[v] = true;
        }
    }
    if let Some(v) = present.iter().position(|p| !p) {
        return Err(Error::InvalidDecomposition(format!(
            "node {} is in no bag",
            net.name(NodeId(v))
        )));
    }
    for e in net.edges() {
        if !e.is_loop()
            && !nice
                .nodes
                .iter()
                .any(|n| n.bag.contains(&e.u.0) && n.bag.contains(&e.v.0))
        {
            return Err(Error::InvalidDecomposition(format!(
                "edge {} is not covered by any bag",
                net.edge_label(e.id)
            )));
        }
    }
    Ok(())
}

/// Runs the DP over a caller-supplied nice decomposition.
pub fn solve_with_decomposition(
    instance: &WaypointInstance,
    nice: &NiceDecomposition,
    options: DpOptions,
) -> Result<(Option<WalkSolution>, DpStats)> {
    check_supported(instance)?;
    nice.validate()?;
    check_cover(instance, nice)?;
    let segments = instance.segment_count();
    let width = nice.width();
    if (width + 1) * segments > options.max_state_product {
        return Err(Error::StateSpaceTooLarge(format!(
            "width {width} with {segments} segments exceeds the limit of {}",
            options.max_state_product
        )));
    }
    let net = &instance.network;
    let route = instance.route();
    let ctx = Ctx {
        starts: route[..segments].iter().map(|v| v.0).collect(),
        ends: route[1..].iter().map(|v| v.0).collect(),
    };
    let mut incident: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); net.node_count()];
    for e in net.edges() {
        if !e.is_loop() {
            incident[e.u.0].push((e.id, e.v.0));
            incident[e.v.0].push((e.id, e.u.0));
        }
    }
    let masks: Vec<u32> = (0..1u32 << segments).collect();
    let mask_demand: Vec<Rational> = masks
        .iter()
        .map(|&m| {
            (0..segments)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| instance.demands[i])
                .sum()
        })
        .collect();

    let mut stats = DpStats {
        width,
        nice_nodes: nice.nodes.len(),
        ..DpStats::default()
    };
    let mut tables: Vec<Option<Table>> = vec![None; nice.nodes.len()];
    let empty = Rc::new(Trace::Empty);
    for (idx, node) in nice.nodes.iter().enumerate() {
        let bag = &node.bag;
        let stride = bag.len() + 1;
        let mut table = Table::new();
        match node.kind {
            NiceKind::Leaf => {
                table.insert(ctx.initial(), (Rational::ZERO, empty.clone()));
            }
            NiceKind::Introduce(v) => {
                let child = tables[node.children[0]].take().expect("child table");
                let at = bag.iter().position(|&x| x == v).unwrap();
                for (sig, (cost, trace)) in child {
                    let mut out = Vec::with_capacity(segments * stride);
                    for seg in sig.chunks(stride - 1) {
                        out.push(seg[0]);
                        for (p, &m) in seg[1..].iter().enumerate() {
                            if p == at {
                                out.push(FREE);
                            }
                            out.push(if m >= TO_BASE && ((m - TO_BASE) as usize) >= at {
                                m + 1
                            } else {
                                m
                            });
                        }
                        if at == stride - 2 {
                            out.push(FREE);
                        }
                    }
                    table.insert(out, (cost, trace));
                }
            }
            NiceKind::Forget(v) => {
                let child = tables[node.children[0]].take().expect("child table");
                let child_bag = &nice.nodes[node.children[0]].bag;
                let cstride = child_bag.len() + 1;
                let p = child_bag.iter().position(|&x| x == v).unwrap();
                let mut current = child;
                for &(edge, other) in &incident[v] {
                    let Some(q) = child_bag.iter().position(|&x| x == other) else {
                        continue;
                    };
                    let e = net.edge(edge);
                    let mut next = Table::new();
                    for (sig, (cost, trace)) in &current {
                        for &mask in &masks {
                            if mask != 0 && mask_demand[mask as usize] > e.capacity {
                                continue;
                            }
                            let mut s = sig.clone();
                            let ok = (0..segments).filter(|i| mask >> i & 1 == 1).all(|i| {
                                ctx.add_edge(
                                    i,
                                    &mut s[i * cstride..(i + 1) * cstride],
                                    child_bag,
                                    p,
                                    q,
                                )
                            });
                            if !ok {
                                continue;
                            }
                            if mask == 0 {
                                offer(&mut next, s, *cost, trace.clone());
                            } else {
                                let used = Rational::from_int(mask.count_ones() as i64);
                                let t = Rc::new(Trace::Use {
                                    edge,
                                    mask,
                                    prev: trace.clone(),
                                });
                                offer(&mut next, s, *cost + e.weight * used, t);
                            }
                        }
                    }
                    current = next;
                }
                for (sig, (cost, trace)) in current {
                    let mut out = Vec::with_capacity(segments * stride);
                    let mut ok = true;
                    for i in 0..segments {
                        match ctx.forget_segment(
                            i,
                            &sig[i * cstride..(i + 1) * cstride],
                            child_bag,
                            p,
                        ) {
                            Some(s) => out.extend(s),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        offer(&mut table, out, cost, trace);
                    }
                }
            }
            NiceKind::Join => {
                let left = tables[node.children[0]].take().expect("child table");
                let right = tables[node.children[1]].take().expect("child table");
                for (s1, (c1, t1)) in &left {
                    for (s2, (c2, t2)) in &right {
                        let mut out = Vec::with_capacity(segments * stride);
                        let mut ok = true;
                        for i in 0..segments {
                            let range = i * stride..(i + 1) * stride;
                            match ctx.join_segment(i, &s1[range.clone()], &s2[range], bag) {
                                Some(s) => out.extend(s),
                                None => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        if ok {
                            let t = Rc::new(Trace::Join(t1.clone(), t2.clone()));
                            offer(&mut table, out, *c1 + *c2, t);
                        }
                    }
                }
            }
        }
        assert!(
            table.len() as u128 <= signature_bound(bag.len(), segments),
            "signature count above the closed-form bound"
        );
        if options.verify {
            for (sig, (_, trace)) in &table {
                verify_signature(instance, &ctx, bag, sig, trace)?;
            }
        }
        stats.max_table = stats.max_table.max(table.len());
        stats.signatures += table.len();
        tables[idx] = Some(table);
    }

    let root = tables[nice.root()].take().expect("root table");
    let done: Vec<u8> = vec![1; segments];
    let Some((_, trace)) = root.get(&done) else {
        return Ok((None, stats));
    };
    let used = collect(trace);
    let mut paths = Vec::with_capacity(segments);
    for i in 0..segments {
        let edges: Vec<EdgeId> = used
            .iter()
            .filter(|(_, m)| m >> i & 1 == 1)
            .map(|(e, _)| *e)
            .collect();
        paths.push(chain(instance, route[i], route[i + 1], &edges)?);
    }
    Ok((Some(WalkSolution::from_segments(instance, paths)?), stats))
}

/// Orders an unordered edge set into the path from `from` to `to`.
fn chain(instance: &WaypointInstance, from: NodeId, to: NodeId, edges: &[EdgeId]) -> Result<Path> {
    let net = &instance.network;
    let mut remaining: Vec<EdgeId> = edges.to_vec();
    let mut order = Vec::with_capacity(edges.len());
    let mut at = from;
    while at != to {
        let Some(pos) = remaining
            .iter()
            .position(|&e| net.edge(e).u == at || net.edge(e).v == at)
        else {
            return Err(Error::MalformedResult(format!(
                "segment from {} stops at {}",
                net.name(from),
                net.name(at)
            )));
        };
        let e = remaining.swap_remove(pos);
        at = net.edge(e).other(at);
        order.push(e);
    }
    if !remaining.is_empty() {
        return Err(Error::MalformedResult(format!(
            "segment from {} has {} stray edges",
            net.name(from),
            remaining.len()
        )));
    }
    Path::from_edges(net, from, order)
}

/// Recomputes the per-segment degree of every bag node from a stored
/// partial solution and compares it with the signature.
fn verify_signature(
    instance: &WaypointInstance,
    ctx: &Ctx,
    bag: &[usize],
    sig: &[u8],
    trace: &Rc<Trace>,
) -> Result<()> {
    let net = &instance.network;
    let stride = bag.len() + 1;
    let used = collect(trace);
    for i in 0..ctx.segments() {
        let seg = &sig[i * stride..(i + 1) * stride];
        let mut deg = vec![0usize; bag.len()];
        let mut count = 0;
        for (e, m) in &used {
            if m >> i & 1 == 0 {
                continue;
            }
            count += 1;
            let edge = net.edge(*e);
            for end in [edge.u.0, edge.v.0] {
                if let Some(p) = bag.iter().position(|&x| x == end) {
                    deg[p] += 1;
                }
            }
        }
        let ok = if seg[0] == 1 {
            ctx.starts[i] == ctx.ends[i] || count > 0
        } else {
            (0..bag.len()).all(|p| deg[p] == degree(seg[1 + p]))
        };
        if !ok {
            return Err(Error::MalformedResult(format!(
                "signature of segment {i} disagrees with its partial solution"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Network;

    fn instance(
        edges: &[(&str, &str, i64, i64)],
        s: &str,
        t: &str,
        wps: &[&str],
    ) -> WaypointInstance {
        let mut net = Network::undirected();
        for &(u, v, c, w) in edges {
            net.add_named_edge(u, v, Rational::from_int(c), Rational::from_int(w))
                .unwrap();
        }
        let ids: Vec<NodeId> = wps.iter().map(|w| net.node(w).unwrap()).collect();
        let (s, t) = (net.node(s).unwrap(), net.node(t).unwrap());
        WaypointInstance::builder(net, s, t)
            .waypoints(ids)
            .allow_degenerate(true)
            .build()
            .unwrap()
    }

    fn verified() -> DpOptions {
        DpOptions {
            verify: true,
            ..DpOptions::default()
        }
    }

    #[test]
    fn parallel_pair_walk_doubles_back() {
        let inst = instance(
            &[("s", "w", 1, 1), ("s", "w", 1, 1), ("s", "t", 1, 1)],
            "s",
            "t",
            &["w"],
        );
        let sol = solve_tw_dp(&inst, verified()).unwrap().unwrap();
        assert_eq!(sol.total_cost, Rational::from_int(3));
        assert_eq!(sol.walk_names(&inst.network), vec!["s", "w", "s", "t"]);
    }

    #[test]
    fn capacity_blocks_reuse() {
        let inst = instance(&[("s", "w", 1, 1), ("s", "t", 1, 1)], "s", "t", &["w"]);
        assert!(solve_tw_dp(&inst, verified()).unwrap().is_none());
        let inst = instance(&[("s", "w", 2, 1), ("s", "t", 1, 1)], "s", "t", &["w"]);
        assert_eq!(
            solve_tw_dp(&inst, verified()).unwrap().unwrap().total_cost,
            Rational::from_int(3)
        );
    }

    #[test]
    fn demands_weight_the_capacity() {
        let edges = [
            ("s", "w", 3, 1),
            ("s", "t", 2, 1),
            ("w", "x", 2, 5),
            ("x", "s", 2, 5),
        ];
        let mut inst = instance(&edges, "s", "t", &["w"]);
        inst.demands = vec![Rational::from_int(2), Rational::ONE];
        assert_eq!(
            solve_tw_dp(&inst, verified()).unwrap().unwrap().total_cost,
            Rational::from_int(3)
        );
        inst.demands = vec![Rational::from_int(2), Rational::from_int(2)];
        assert_eq!(
            solve_tw_dp(&inst, verified()).unwrap().unwrap().total_cost,
            Rational::from_int(12)
        );
    }

    #[test]
    fn cycle_picks_cheaper_side() {
        let edges = [
            ("s", "a", 1, 1),
            ("a", "t", 1, 1),
            ("t", "b", 1, 5),
            ("b", "s", 1, 5),
        ];
        let inst = instance(&edges, "s", "t", &[]);
        let sol = solve_tw_dp(&inst, verified()).unwrap().unwrap();
        assert_eq!(sol.total_cost, Rational::from_int(2));
    }

    #[test]
    fn degenerate_segments_are_empty() {
        let inst = instance(&[("s", "t", 1, 1)], "s", "t", &["s"]);
        let sol = solve_tw_dp(&inst, verified()).unwrap().unwrap();
        assert!(sol.segments[0].is_empty());
        assert_eq!(sol.total_cost, Rational::ONE);
    }

    #[test]
    fn closed_tour_on_a_square() {
        let edges = [
            ("s", "a", 1, 1),
            ("a", "b", 1, 1),
            ("b", "c", 1, 1),
            ("c", "s", 1, 1),
        ];
        let inst = instance(&edges, "s", "s", &["b"]);
        let sol = solve_tw_dp(&inst, verified()).unwrap().unwrap();
        assert_eq!(sol.total_cost, Rational::from_int(4));
    }

    #[test]
    fn large_state_products_are_rejected() {
        let edges = [("s", "a", 1, 1), ("a", "b", 1, 1), ("b", "t", 1, 1)];
        let inst = instance(&edges, "s", "t", &["a", "b"]);
        let opts = DpOptions {
            max_state_product: 2,
            verify: false,
        };
        assert!(matches!(
            solve_tw_dp(&inst, opts),
            Err(Error::StateSpaceTooLarge(_))
        ));
    }

    #[test]
    fn directed_input_is_unsupported() {
        let mut net = Network::directed();
        net.add_named_edge("s", "t", Rational::ONE, Rational::ONE)
            .unwrap();
        let inst = WaypointInstance::new(net, NodeId(0), NodeId(1), vec![]).unwrap();
        assert!(matches!(
            solve_tw_dp(&inst, DpOptions::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn bound_grows_with_bag() {
        assert_eq!(signature_bound(0, 2), 4);
        assert!(signature_bound(3, 2) > signature_bound(2, 2));
        assert_eq!(signature_bound(40, 9), u128::MAX);
    }
}
