//! Picks the strongest applicable solver for an instance and falls back to
//! the exhaustive oracle. Results from the tree-decomposition DP or the
//! oracle carry the hardness regime the instance falls into.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    classify, validate_walk, StructureClass, StructureTag, WalkSolution, WaypointInstance,
};
use crate::kernels::shortest_path_filtered;
use crate::oracle::{solve_exhaustive, Limits, OracleOutcome};
use crate::solvers::{greedy_baseline, solve_dag, solve_single_waypoint, solve_tree, SingleMethod};
use crate::treewidth::{solve_tw_dp, DpOptions};

/// Solver names accepted by `--algo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    Auto,
    Suurballe,
    Flow,
    Tree,
    Dag,
    TwDp,
    Oracle,
    Greedy,
}

impl FromStr for Algo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Algo::Auto,
            "suurballe" => Algo::Suurballe,
            "flow" => Algo::Flow,
            "tree" => Algo::Tree,
            "dag" => Algo::Dag,
            "twdp" => Algo::TwDp,
            "oracle" => Algo::Oracle,
            "greedy" => Algo::Greedy,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown algorithm `{other}`"
                )))
            }
        })
    }
}

/// The solver that produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solver {
    Tree,
    Dag,
    ShortestPath,
    SingleWaypoint,
    SingleWaypointFlow,
    Twdp,
    Oracle,
    Greedy,
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::Tree => "tree",
            Solver::Dag => "dag",
            Solver::ShortestPath => "shortest-path",
            Solver::SingleWaypoint => "single-waypoint",
            Solver::SingleWaypointFlow => "single-waypoint-flow",
            Solver::Twdp => "twdp",
            Solver::Oracle => "oracle",
            Solver::Greedy => "greedy",
        })
    }
}

/// Complexity regime an instance falls into when no polynomial solver
/// applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Directed network with at least one waypoint.
    DirectedWaypoint,
    /// Undirected network where waypoints change the demand.
    DemandChange,
    /// Undirected network with per-segment length bounds.
    DistanceBounds,
    /// Undirected network with too many waypoints for its width.
    ManyWaypoints,
    /// Result of a heuristic, not an exact solver.
    Heuristic,
}

impl Regime {
    pub fn tag(self) -> &'static str {
        match self {
            Regime::DirectedWaypoint => "directed-waypoint",
            Regime::DemandChange => "demand-change",
            Regime::DistanceBounds => "distance-bounds",
            Regime::ManyWaypoints => "many-waypoints",
            Regime::Heuristic => "heuristic",
        }
    }

    fn message(self) -> &'static str {
        match self {
            Regime::DirectedWaypoint => "strongly NP-complete already for a single waypoint on directed networks",
            Regime::DemandChange => "NP-hard on undirected networks once waypoints change the demand",
            Regime::DistanceBounds => "NP-hard on undirected networks under per-segment distance bounds",
            Regime::ManyWaypoints => "strongly NP-complete for an arbitrary number of waypoints, even on Eulerian networks",
            Regime::Heuristic => "greedy baseline: cost is not guaranteed optimal and a miss does not prove infeasibility",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub tag: Regime,
    pub message: String,
}

impl Warning {
    fn new(tag: Regime) -> Warning {
        Warning {
            tag,
            message: tag.message().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Solved(WalkSolution),
    Infeasible,
    BudgetExceeded,
}

impl Outcome {
    pub fn solution(&self) -> Option<&WalkSolution> {
        match self {
            Outcome::Solved(s) => Some(s),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Solved(_) => "feasible",
            Outcome::Infeasible => "infeasible",
            Outcome::BudgetExceeded => "budget_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub solver: Solver,
    pub warnings: Vec<Warning>,
    pub class: Option<StructureClass>,
}

impl SolveResult {
    pub fn has_tag(&self, tag: Regime) -> bool {
        self.warnings.iter().any(|w| w.tag == tag)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub algo: Algo,
    pub oracle: Limits,
    pub dp: DpOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algo: Algo::Auto,
            oracle: Limits::default(),
            dp: DpOptions::default(),
        }
    }
}

impl SolveOptions {
    pub fn with_algo(mut self, algo: Algo) -> Self {
        self.algo = algo;
        self
    }
}

fn from_option(found: Option<WalkSolution>) -> Outcome {
    match found {
        Some(s) => Outcome::Solved(s),
        None => Outcome::Infeasible,
    }
}

fn from_oracle(outcome: OracleOutcome) -> Outcome {
    match outcome {
        OracleOutcome::Optimal(s) => Outcome::Solved(s),
        OracleOutcome::Infeasible => Outcome::Infeasible,
        OracleOutcome::BudgetExceeded => Outcome::BudgetExceeded,
    }
}

/// Shortest simple path over edges that can carry the demand. Exact for
/// instances without waypoints.
fn solve_direct(instance: &WaypointInstance) -> Result<Option<WalkSolution>> {
    let net = &instance.network;
    let demand = instance.demands[0];
    let labels = shortest_path_filtered(net, instance.source, |e| net.edge(e).capacity >= demand)?;
    let Some(path) = labels.path_to(instance.target) else {
        return Ok(None);
    };
    if instance.bound(0).is_some_and(|b| path.weight(net) > b) {
        return Ok(None);
    }
    WalkSolution::from_segments(instance, vec![path]).map(Some)
}

fn regimes(instance: &WaypointInstance) -> Vec<Warning> {
    let mut out = Vec::new();
    if instance.network.is_directed() {
        if instance.k() >= 1 {
            out.push(Warning::new(Regime::DirectedWaypoint));
        }
        return out;
    }
    if instance.has_demand_changes() {
        out.push(Warning::new(Regime::DemandChange));
    }
    if instance.bounds.is_some() {
        out.push(Warning::new(Regime::DistanceBounds));
    }
    if out.is_empty() && instance.k() >= 2 {
        out.push(Warning::new(Regime::ManyWaypoints));
    }
    out
}

fn auto(
    instance: &WaypointInstance,
    options: &SolveOptions,
    class: &StructureClass,
) -> Result<SolveResult> {
    let net = &instance.network;
    let done = |outcome, solver| SolveResult {
        outcome,
        solver,
        warnings: Vec::new(),
        class: Some(*class),
    };
    if class.tag == StructureTag::Tree {
        return Ok(done(from_option(solve_tree(instance)?), Solver::Tree));
    }
    if class.tag == StructureTag::Dag {
        return Ok(done(from_option(solve_dag(instance)?), Solver::Dag));
    }
    if instance.k() == 0 {
        return Ok(done(
            from_option(solve_direct(instance)?),
            Solver::ShortestPath,
        ));
    }
    if !net.is_directed()
        && instance.k() == 1
        && instance.has_unit_demands()
        && instance.bounds.is_none()
    {
        let found = solve_single_waypoint(instance, SingleMethod::Suurballe)?;
        return Ok(done(from_option(found), Solver::SingleWaypoint));
    }
    if !net.is_directed() && instance.bounds.is_none() {
        match solve_tw_dp(instance, options.dp) {
            Ok(found) => return Ok(done(from_option(found), Solver::Twdp)),
            Err(Error::StateSpaceTooLarge(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(SolveResult {
        outcome: from_oracle(solve_exhaustive(instance, options.oracle)),
        solver: Solver::Oracle,
        warnings: Vec::new(),
        class: Some(*class),
    })
}

/// Solves an instance under the given policy. Every returned walk has
/// passed [`validate_walk`].
pub fn solve(instance: &WaypointInstance, options: SolveOptions) -> Result<SolveResult> {
    let class = classify(&instance.network)?;
    let mut result = match options.algo {
        Algo::Auto => auto(instance, &options, &class)?,
        forced => {
            let (outcome, solver) = match forced {
                Algo::Suurballe => (
                    from_option(solve_single_waypoint(instance, SingleMethod::Suurballe)?),
                    Solver::SingleWaypoint,
                ),
                Algo::Flow => (
                    from_option(solve_single_waypoint(instance, SingleMethod::Flow)?),
                    Solver::SingleWaypointFlow,
                ),
                Algo::Tree => (from_option(solve_tree(instance)?), Solver::Tree),
                Algo::Dag => (from_option(solve_dag(instance)?), Solver::Dag),
                Algo::TwDp => (
                    from_option(solve_tw_dp(instance, options.dp)?),
                    Solver::Twdp,
                ),
                Algo::Oracle => (
                    from_oracle(solve_exhaustive(instance, options.oracle)),
                    Solver::Oracle,
                ),
                Algo::Greedy => (from_option(greedy_baseline(instance)?), Solver::Greedy),
                Algo::Auto => unreachable!(),
            };
            let warnings = match solver {
                Solver::Greedy => vec![Warning::new(Regime::Heuristic)],
                _ => Vec::new(),
            };
            SolveResult {
                outcome,
                solver,
                warnings,
                class: Some(class),
            }
        }
    };
    if let Outcome::Solved(sol) = &result.outcome {
        let report = validate_walk(instance, sol)?;
        if !report.is_ok() {
            return Err(Error::MalformedResult(format!(
                "{} produced an invalid walk: {}",
                result.solver,
                report.messages().join("; ")
            )));
        }
    }
    if matches!(result.solver, Solver::Twdp | Solver::Oracle) {
        result.warnings.extend(regimes(instance));
    }
    result.warnings.sort_by_key(|w| w.tag);
    result.warnings.dedup_by_key(|w| w.tag);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Network, NodeId};
    use crate::rational::Rational;

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn net(directed: bool, edges: &[(&str, &str, i64)]) -> Network {
        let mut net = if directed {
            Network::directed()
        } else {
            Network::undirected()
        };
        for &(u, v, w) in edges {
            net.add_named_edge(u, v, r(1), r(w)).unwrap();
        }
        net
    }

    fn inst(net: Network, s: &str, t: &str, wps: &[&str]) -> WaypointInstance {
        let id = |x: &str| net.node(x).unwrap();
        let w: Vec<NodeId> = wps.iter().map(|x| id(x)).collect();
        let (s, t) = (id(s), id(t));
        WaypointInstance::new(net, s, t, w).unwrap()
    }

    #[test]
    fn directed_cycle_falls_back_with_tag() {
        let n = net(true, &[("s", "w", 1), ("w", "t", 1), ("t", "s", 1)]);
        let res = solve(&inst(n, "s", "t", &["w"]), SolveOptions::default()).unwrap();
        assert_eq!(res.solver, Solver::Oracle);
        assert!(res.has_tag(Regime::DirectedWaypoint));
        assert_eq!(res.outcome.solution().unwrap().total_cost, r(2));
    }

    #[test]
    fn tree_with_demand_changes_uses_tree_solver() {
        let n = net(false, &[("s", "w", 1), ("w", "t", 1)]);
        let mut i = inst(n, "s", "t", &["w"]);
        i.network = {
            let mut m = Network::undirected();
            m.add_named_edge("s", "w", r(3), r(1)).unwrap();
            m.add_named_edge("w", "t", r(3), r(1)).unwrap();
            m
        };
        i.demands = vec![r(1), r(3)];
        let res = solve(&i, SolveOptions::default()).unwrap();
        assert_eq!(res.solver, Solver::Tree);
        assert!(res.warnings.is_empty());
    }

    #[test]
    fn forced_solver_errors_surface() {
        let n = net(true, &[("s", "w", 1), ("w", "t", 1), ("t", "s", 1)]);
        let err = solve(
            &inst(n, "s", "t", &["w"]),
            SolveOptions::default().with_algo(Algo::Suurballe),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn no_waypoints_is_a_shortest_path() {
        let n = net(
            true,
            &[("s", "a", 1), ("a", "t", 1), ("t", "s", 1), ("s", "t", 5)],
        );
        let res = solve(&inst(n, "s", "t", &[]), SolveOptions::default()).unwrap();
        assert_eq!(res.solver, Solver::ShortestPath);
        assert_eq!(res.outcome.solution().unwrap().total_cost, r(2));
    }

    #[test]
    fn bounded_undirected_gets_bound_tag() {
        let n = net(
            false,
            &[("s", "w", 1), ("w", "t", 1), ("t", "s", 1), ("s", "w", 1)],
        );
        let mut i = inst(n, "s", "t", &["w"]);
        i.bounds = Some(vec![r(1), r(5)]);
        let res = solve(&i, SolveOptions::default()).unwrap();
        assert_eq!(res.solver, Solver::Oracle);
        assert!(res.has_tag(Regime::DistanceBounds));
    }
}
