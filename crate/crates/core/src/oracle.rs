//! Exhaustive search over segment-wise simple paths. Slow, but exact for
//! every variant: directed or undirected, demand changes and length bounds.

use std::time::{Duration, Instant};

use crate::graph::{EdgeId, NodeId, Path, WalkSolution, WaypointInstance};
use crate::kernels::distances_to;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
    pub max_total_steps: u64,
    pub time_budget: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 12,
            max_total_steps: 200_000_000,
            time_budget: None,
        }
    }
}

impl Limits {
    pub fn with_max_nodes(mut self, n: usize) -> Self {
        self.max_nodes = n;
        self
    }

    pub fn with_steps(mut self, steps: u64) -> Self {
        self.max_total_steps = steps;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Optimal(WalkSolution),
    Infeasible,
    BudgetExceeded,
}

impl OracleOutcome {
    pub fn cost(&self) -> Option<Rational> {
        match self {
            OracleOutcome::Optimal(s) => Some(s.total_cost),
            _ => None,
        }
    }

    pub fn solution(&self) -> Option<&WalkSolution> {
        match self {
            OracleOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Yes(WalkSolution),
    No,
    BudgetExceeded,
}

impl Feasibility {
    pub fn is_yes(&self) -> bool {
        matches!(self, Feasibility::Yes(_))
    }
}

struct Search<'a> {
    inst: &'a WaypointInstance,
    route: Vec<NodeId>,
    // lower[i][v]: distance from v to the end of segment i
    lower: Vec<Vec<Option<Rational>>>,
    // suffix[i]: sum of segment lower bounds from segment i on
    suffix: Vec<Rational>,
    residual: Vec<Rational>,
    // per segment: nodes on the current partial path
    visited: Vec<Vec<bool>>,
    stack: Vec<Path>,
    cost: Rational,
    seg_len: Rational,
    best: Option<(Rational, Vec<Path>)>,
    optimize: bool,
    steps: u64,
    limits: Limits,
    started: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.steps += 1;
        if self.steps > self.limits.max_total_steps {
            self.aborted = true;
        } else if self.steps.is_multiple_of(4096) {
            if let Some(budget) = self.limits.time_budget {
                if self.started.elapsed() > budget {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn done(&self) -> bool {
        self.aborted || (!self.optimize && self.best.is_some())
    }

    fn start_segment(&mut self, i: usize) {
        if self.done() {
            return;
        }
        if i == self.route.len() - 1 {
            if self.best.as_ref().is_none_or(|(c, _)| self.cost < *c) {
                self.best = Some((self.cost, self.stack.clone()));
            }
            return;
        }
        let start = self.route[i];
        self.stack.push(Path::trivial(start));
        self.seg_len = Rational::ZERO;
        self.visited[i][start.0] = true;
        self.extend(i, start);
        self.visited[i][start.0] = false;
        self.stack.pop();
    }

    fn extend(&mut self, i: usize, at: NodeId) {
        if self.done() {
            return;
        }
        if at == self.route[i + 1] {
            let saved = self.seg_len;
            self.start_segment(i + 1);
            self.seg_len = saved;
            return;
        }
        let net = &self.inst.network;
        let demand = self.inst.demands[i];
        let bound = self.inst.bound(i);
        let mut moves: Vec<(Rational, EdgeId, NodeId)> = Vec::new();
        for (e, next) in net.out_edges(at) {
            if next == at || self.visited[i][next.0] || self.residual[e.0] < demand {
                continue;
            }
            let Some(rest) = self.lower[i][next.0] else {
                continue;
            };
            let w = net.edge(e).weight;
            if let Some(b) = bound {
                if self.seg_len + w + rest > b {
                    continue;
                }
            }
            if self.optimize {
                if let Some((best, _)) = &self.best {
                    if self.cost + w + rest + self.suffix[i + 1] >= *best {
                        continue;
                    }
                }
            }
            moves.push((w + rest, e, next));
        }
        moves.sort();
        for (_, e, next) in moves {
            if self.tick() {
                return;
            }
            let w = net.edge(e).weight;
            if self.optimize {
                if let Some((best, _)) = &self.best {
                    let rest = self.lower[i][next.0].unwrap();
                    if self.cost + w + rest + self.suffix[i + 1] >= *best {
                        continue;
                    }
                }
            }
            self.residual[e.0] -= demand;
            self.visited[i][next.0] = true;
            self.cost += w;
            self.seg_len += w;
            let seg = self.stack.last_mut().unwrap();
            seg.nodes.push(next);
            seg.edges.push(e);

            self.extend(i, next);

            let seg = self.stack.last_mut().unwrap();
            seg.nodes.pop();
            seg.edges.pop();
            self.seg_len -= w;
            self.cost -= w;
            self.visited[i][next.0] = false;
            self.residual[e.0] += demand;
            if self.done() {
                return;
            }
        }
    }
}

enum Raw {
    Found(WalkSolution),
    None,
    Budget,
}

fn run(inst: &WaypointInstance, limits: Limits, optimize: bool) -> Raw {
    let net = &inst.network;
    if net.node_count() > limits.max_nodes {
        return Raw::Budget;
    }
    let route = inst.route();
    let mut lower = Vec::with_capacity(route.len() - 1);
    let mut seg_lb = Vec::with_capacity(route.len() - 1);
    for (i, pair) in route.windows(2).enumerate() {
        let d = inst.demands[i];
        let dist = distances_to(net, pair[1], |e| net.edge(e).capacity >= d);
        let Some(lb) = dist[pair[0].0] else {
            return Raw::None;
        };
        if inst.bound(i).is_some_and(|b| lb > b) {
            return Raw::None;
        }
        seg_lb.push(lb);
        lower.push(dist);
    }
    let mut suffix = vec![Rational::ZERO; route.len()];
    for i in (0..seg_lb.len()).rev() {
        suffix[i] = suffix[i + 1] + seg_lb[i];
    }
    let capacities: Vec<Rational> = net.edges().iter().map(|e| e.capacity).collect();
    let mut search = Search {
        inst,
        route,
        lower,
        suffix,
        residual: capacities.clone(),
        visited: vec![vec![false; net.node_count()]; inst.segment_count()],
        stack: Vec::new(),
        cost: Rational::ZERO,
        seg_len: Rational::ZERO,
        best: None,
        optimize,
        steps: 0,
        limits,
        started: Instant::now(),
        aborted: false,
    };
    search.start_segment(0);
    assert_eq!(search.residual, capacities, "residual ledger not restored");
    assert!(
        search.visited.iter().flatten().all(|v| !v),
        "visit marks not restored"
    );
    match search.best {
        Some(_) if optimize && search.aborted => Raw::Budget,
        Some((_, segments)) => Raw::Found(
            WalkSolution::from_segments(inst, segments).expect("oracle segments are well formed"),
        ),
        None if search.aborted => Raw::Budget,
        None => Raw::None,
    }
}

/// Provably optimal walk, exact infeasibility, or a budget signal.
pub fn solve_exhaustive(instance: &WaypointInstance, limits: Limits) -> OracleOutcome {
    match run(instance, limits, true) {
        Raw::Found(s) => OracleOutcome::Optimal(s),
        Raw::None => OracleOutcome::Infeasible,
        Raw::Budget => OracleOutcome::BudgetExceeded,
    }
}

/// Decision form: stops at the first walk found.
pub fn feasible_exhaustive(instance: &WaypointInstance, limits: Limits) -> Feasibility {
    match run(instance, limits, false) {
        Raw::Found(s) => Feasibility::Yes(s),
        Raw::None => Feasibility::No,
        Raw::Budget => Feasibility::BudgetExceeded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_walk, Network};

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    #[test]
    fn back_and_forth_on_parallel_edges() {
        let mut net = Network::undirected();
        net.add_named_edge("s", "w", r(1), r(1)).unwrap();
        net.add_named_edge("s", "w", r(1), r(1)).unwrap();
        net.add_named_edge("s", "t", r(1), r(1)).unwrap();
        let (s, w, t) = (
            net.node("s").unwrap(),
            net.node("w").unwrap(),
            net.node("t").unwrap(),
        );
        let inst = WaypointInstance::new(net, s, t, vec![w]).unwrap();
        let out = solve_exhaustive(&inst, Limits::default());
        let sol = out.solution().unwrap();
        assert_eq!(sol.total_cost, r(3));
        assert_eq!(sol.walk_nodes(), vec![s, w, s, t]);
        assert!(validate_walk(&inst, sol).unwrap().is_ok());
    }

    #[test]
    fn disconnected_waypoint_is_infeasible() {
        let mut net = Network::undirected();
        net.add_named_edge("s", "t", r(1), r(1)).unwrap();
        net.add_node("w");
        let (s, w, t) = (
            net.node("s").unwrap(),
            net.node("w").unwrap(),
            net.node("t").unwrap(),
        );
        let inst = WaypointInstance::new(net, s, t, vec![w]).unwrap();
        assert_eq!(
            solve_exhaustive(&inst, Limits::default()),
            OracleOutcome::Infeasible
        );
        assert_eq!(
            feasible_exhaustive(&inst, Limits::default()),
            Feasibility::No
        );
    }

    #[test]
    fn empty_route_at_one_node() {
        let mut net = Network::undirected();
        net.add_node("s");
        let s = net.node("s").unwrap();
        let inst = WaypointInstance::new(net, s, s, vec![]).unwrap();
        match feasible_exhaustive(&inst, Limits::default()) {
            Feasibility::Yes(sol) => {
                assert_eq!(sol.total_cost, Rational::ZERO);
                assert!(sol.segments[0].is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn oversized_networks_exceed_the_budget() {
        let mut net = Network::undirected();
        for i in 0..20 {
            net.add_named_edge(&format!("n{i}"), &format!("n{}", i + 1), r(1), r(1))
                .unwrap();
        }
        let inst = WaypointInstance::new(net, NodeId(0), NodeId(20), vec![]).unwrap();
        assert_eq!(
            solve_exhaustive(&inst, Limits::default()),
            OracleOutcome::BudgetExceeded
        );
        assert!(
            solve_exhaustive(&inst, Limits::default().with_max_nodes(32))
                .cost()
                .is_some()
        );
    }
}
