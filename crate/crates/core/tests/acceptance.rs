//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use waypoint_core::engine::{solve, Algo, Regime, SolveOptions, Solver};
use waypoint_core::gadgets::random::{
    random_connected, random_network, random_partial_ktree, seeded, EdgeRanges,
};
use waypoint_core::gadgets::{
    gadget_eulerian, gadget_partition, gadget_tw3, gadget_two_disjoint_paths, GadgetOutput,
    PartitionFlavor,
};
use waypoint_core::graph::{validate_walk, NodeId, WalkSolution, WaypointInstance};
use waypoint_core::io::{parse_graphml_topology, parse_instance, parse_result, serialize_instance};
use waypoint_core::oracle::{feasible_exhaustive, solve_exhaustive, Feasibility, OracleOutcome};
use waypoint_core::solvers::{
    shared_between_segments, solve_dag, solve_single_waypoint, solve_tree, SingleMethod,
};
use waypoint_core::transforms::{expand_capacities, orient_undirected, subdivide_parallel};
use waypoint_core::treewidth::{solve_tw_dp, DpOptions};
use waypoint_core::Rational;

use common::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn cost(sol: &Option<WalkSolution>) -> Option<Rational> {
    sol.as_ref().map(|s| s.total_cost)
}

fn oracle_cost(inst: &WaypointInstance) -> Result<Option<Rational>, String> {
    match solve_exhaustive(inst, oracle_limits()) {
        OracleOutcome::Optimal(s) => Ok(Some(s.total_cost)),
        OracleOutcome::Infeasible => Ok(None),
        OracleOutcome::BudgetExceeded => Err(format!(
            "oracle budget exceeded on {}",
            inst.describe_route()
        )),
    }
}

fn oracle_feasible(inst: &WaypointInstance) -> Result<bool, String> {
    match feasible_exhaustive(inst, oracle_limits()) {
        Feasibility::Yes(_) => Ok(true),
        Feasibility::No => Ok(false),
        Feasibility::BudgetExceeded => Err(format!(
            "oracle budget exceeded on {}",
            inst.describe_route()
        )),
    }
}

fn valid(inst: &WaypointInstance, sol: &Option<WalkSolution>) -> Result<(), String> {
    if let Some(s) = sol {
        let report = validate_walk(inst, s).map_err(|e| e.to_string())?;
        if !report.is_ok() {
            return Err(report.messages().join("; "));
        }
    }
    Ok(())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("{what} took {spent:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn greedy_trap_regression() -> Verdict {
    let input = fixture("greedy_trap.wrp");
    let mut notes = Vec::new();
    for (algo, expect) in [
        ("suurballe", "6"),
        ("flow", "6"),
        ("twdp", "6"),
        ("oracle", "6"),
        ("greedy", "8"),
    ] {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_wrp"))
            .args(["solve", "--json", "--algo", algo, "--input"])
            .arg(&input)
            .output()
            .map_err(|e| e.to_string())?;
        let spent = start.elapsed();
        if out.status.code() != Some(0) {
            return Err(format!("{algo}: exit {:?}", out.status.code()));
        }
        let doc = parse_result(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
        let got = doc.cost.map(|c| c.exact).unwrap_or_default();
        if got != expect {
            return Err(format!("{algo}: cost {got}, expected {expect}"));
        }
        if spent >= Duration::from_secs(1) {
            return Err(format!("{algo}: {spent:.2?}"));
        }
        notes.push(format!("{algo}={got}"));
    }
    Ok(notes.join(" "))
}

fn double_back_regression() -> Verdict {
    let inst = parse_instance(&std::fs::read_to_string(fixture("double_back.wrp")).unwrap())
        .map_err(|e| e.to_string())?;
    for algo in [
        Algo::Auto,
        Algo::Suurballe,
        Algo::Flow,
        Algo::TwDp,
        Algo::Oracle,
    ] {
        let res =
            solve(&inst, SolveOptions::default().with_algo(algo)).map_err(|e| e.to_string())?;
        let sol = res
            .outcome
            .solution()
            .ok_or_else(|| format!("{algo:?}: no walk"))?;
        let walk = sol.walk_names(&inst.network).join(",");
        if walk != "s,w,s,t" || sol.total_cost != Rational::from_int(3) {
            return Err(format!("{algo:?}: walk {walk} cost {}", sol.total_cost));
        }
    }
    Ok("walk s,w,s,t cost 3 from auto, suurballe, flow, twdp, oracle".into())
}

fn cross_solver() -> Verdict {
    let start = Instant::now();
    let mut feasible = 0;
    for seed in 0..500 {
        let inst = single_waypoint_instance(seed);
        let a = solve_single_waypoint(&inst, SingleMethod::Suurballe).map_err(|e| e.to_string())?;
        let b = solve_single_waypoint(&inst, SingleMethod::Flow).map_err(|e| e.to_string())?;
        let c = oracle_cost(&inst)?;
        valid(&inst, &a)?;
        valid(&inst, &b)?;
        if cost(&a) != c || cost(&b) != c {
            return Err(format!(
                "seed {seed}: suurballe {:?} flow {:?} oracle {:?}",
                cost(&a),
                cost(&b),
                c
            ));
        }
        feasible += c.is_some() as usize;
    }
    within(start, Duration::from_secs(60), "500 instances")?;
    Ok(format!(
        "500 agree ({feasible} feasible) in {:.2?}",
        start.elapsed()
    ))
}

fn dp_ground_truth() -> Verdict {
    let start = Instant::now();
    let mut feasible = 0;
    for seed in 0..300 {
        let inst = low_width_instance(seed);
        let dp =
            solve_tw_dp(&inst, DpOptions::default()).map_err(|e| format!("seed {seed}: {e}"))?;
        valid(&inst, &dp)?;
        let want = oracle_cost(&inst)?;
        if cost(&dp) != want {
            return Err(format!("seed {seed}: dp {:?} oracle {want:?}", cost(&dp)));
        }
        feasible += want.is_some() as usize;
    }
    within(start, Duration::from_secs(120), "300 instances")?;
    Ok(format!(
        "300 agree ({feasible} feasible) in {:.2?}",
        start.elapsed()
    ))
}

fn structured_ground_truth() -> Verdict {
    let mut feasible = 0;
    for seed in 0..300 {
        let inst = dag_instance(seed);
        let got = solve_dag(&inst).map_err(|e| e.to_string())?;
        valid(&inst, &got)?;
        let want = oracle_cost(&inst)?;
        if cost(&got) != want {
            return Err(format!(
                "dag seed {seed}: {:?} vs oracle {want:?}",
                cost(&got)
            ));
        }
        if let Some(s) = &got {
            let shared = shared_between_segments(s);
            if !shared.is_empty() {
                return Err(format!(
                    "dag seed {seed}: arcs {shared:?} shared between segments"
                ));
            }
            feasible += 1;
        }
    }
    for seed in 0..100 {
        let inst = tree_instance(seed);
        let got = solve_tree(&inst).map_err(|e| e.to_string())?;
        valid(&inst, &got)?;
        let want = oracle_cost(&inst)?;
        if cost(&got) != want {
            return Err(format!(
                "tree seed {seed}: {:?} vs oracle {want:?}",
                cost(&got)
            ));
        }
    }
    Ok(format!(
        "300 DAGs ({feasible} feasible, no shared arcs) and 100 trees agree"
    ))
}

fn gadget_agrees(g: &GadgetOutput) -> Result<bool, String> {
    let source = g.source.solve();
    let gadget = oracle_feasible(&g.instance)?;
    if source.is_some() != gadget {
        return Err(format!("source {} but gadget {}", source.is_some(), gadget));
    }
    if let Some(w) = source {
        let walk = g.witness_to_walk(&w).map_err(|e| e.to_string())?;
        valid(&g.instance, &Some(walk.clone()))?;
        let back = g.walk_to_witness(&walk).map_err(|e| e.to_string())?;
        if !g.source.check(&back) {
            return Err("walk maps back to a non-witness".into());
        }
    }
    Ok(gadget)
}

fn gadget_equivalence() -> Verdict {
    let mut checked = 0usize;
    let mut yes = 0usize;
    let mut tally = |r: bool| {
        checked += 1;
        yes += r as usize;
    };
    // Three nodes, every arc set and every terminal assignment.
    for mask in 0..1u64 << 6 {
        let net = digraph_from_mask(3, mask);
        for s1 in 0..3 {
            for t1 in 0..3 {
                for s2 in 0..3 {
                    for t2 in 0..3 {
                        if s1 == t1 || s2 == t2 {
                            continue;
                        }
                        let pairs = [(NodeId(s1), NodeId(t1)), (NodeId(s2), NodeId(t2))];
                        let g =
                            gadget_two_disjoint_paths(&net, pairs).map_err(|e| e.to_string())?;
                        tally(
                            gadget_agrees(&g)
                                .map_err(|e| format!("3-node mask {mask:#x} {pairs:?}: {e}"))?,
                        );
                    }
                }
            }
        }
    }
    // Four nodes, every arc set, distinct terminals (all placements are
    // relabellings of this one).
    for mask in 0..1u64 << 12 {
        let net = digraph_from_mask(4, mask);
        let pairs = [(NodeId(0), NodeId(1)), (NodeId(2), NodeId(3))];
        let g = gadget_two_disjoint_paths(&net, pairs).map_err(|e| e.to_string())?;
        tally(gadget_agrees(&g).map_err(|e| format!("4-node mask {mask:#x}: {e}"))?);
    }
    // Five nodes, every arc set with at most ten arcs, distinct terminals.
    for mask in (0..1u64 << 20).filter(|m| m.count_ones() <= 10) {
        let net = digraph_from_mask(5, mask);
        let pairs = [(NodeId(0), NodeId(1)), (NodeId(2), NodeId(3))];
        let g = gadget_two_disjoint_paths(&net, pairs).map_err(|e| e.to_string())?;
        tally(gadget_agrees(&g).map_err(|e| format!("5-node mask {mask:#x}: {e}"))?);
    }
    // Six nodes, at most ten arcs, seeded sample.
    for seed in 0..20_000 {
        let mut rng = seeded(seed);
        let m = rng.gen_range(4..=10);
        let net = random_network(&mut rng, 6, m, true, EdgeRanges::unit());
        let mut t = [0usize; 4];
        for x in &mut t {
            *x = rng.gen_range(0..6);
        }
        if t[0] == t[1] || t[2] == t[3] {
            continue;
        }
        let pairs = [(NodeId(t[0]), NodeId(t[1])), (NodeId(t[2]), NodeId(t[3]))];
        let g = gadget_two_disjoint_paths(&net, pairs).map_err(|e| e.to_string())?;
        tally(gadget_agrees(&g).map_err(|e| format!("6-node seed {seed}: {e}"))?);
    }
    let dp_line = format!("2dp {checked} ({yes} yes)");

    let mut cache: HashMap<String, bool> = HashMap::new();
    let mut sequences_checked = 0usize;
    for flavor in [
        PartitionFlavor::ArbitraryChange,
        PartitionFlavor::BoundedChange,
    ] {
        for len in 1..=6 {
            for ints in sequences(len, 5) {
                let g = gadget_partition(&ints, flavor).map_err(|e| e.to_string())?;
                let key = serialize_instance(&g.instance).map_err(|e| e.to_string())?;
                let gadget = match cache.get(&key) {
                    Some(&v) => v,
                    None => {
                        let v = gadget_agrees(&g)
                            .map_err(|e| format!("partition {ints:?} {flavor:?}: {e}"))?;
                        cache.insert(key, v);
                        v
                    }
                };
                if g.source.solve().is_some() != gadget {
                    return Err(format!(
                        "partition {ints:?} {flavor:?}: source and gadget disagree"
                    ));
                }
                sequences_checked += 1;
            }
        }
    }
    Ok(format!(
        "{dp_line}; partition {sequences_checked} sequences over both flavours ({} distinct gadgets); 0 disagreements",
        cache.len()
    ))
}

fn transform_conservation() -> Verdict {
    for seed in 0..200 {
        let mut rng = seeded(seed);
        let k = rng.gen_range(1..=2);
        let inst = small_instance(seed, false, k);
        let (expanded, _) = expand_capacities(&inst.network, 2).map_err(|e| e.to_string())?;
        let (split, _) = subdivide_parallel(&expanded).map_err(|e| e.to_string())?;
        let before = oracle_cost(&inst)?;
        let after = oracle_cost(&inst.with_network(split))?;
        if before != after {
            return Err(format!(
                "seed {seed}: cost {before:?} became {after:?} after expand and subdivide"
            ));
        }

        let unit = small_instance(seed, true, 1);
        let (oriented, _) = orient_undirected(&unit.network).map_err(|e| e.to_string())?;
        let before = oracle_feasible(&unit)?;
        let after = oracle_feasible(&unit.with_network(oriented))?;
        if before != after {
            return Err(format!(
                "seed {seed}: feasibility {before} became {after} after orientation"
            ));
        }
    }
    Ok("200 seeds: cost kept by expand+subdivide, feasibility kept by orientation".into())
}

fn graphml_scale() -> Verdict {
    let mut worst = Duration::ZERO;
    let mut solved = 0;
    for seed in 0..10 {
        let text = synthetic_graphml(seed, 150, 200);
        let net = parse_graphml_topology(&text).map_err(|e| e.to_string())?;
        if net.node_count() != 150 || net.edge_count() != 200 {
            return Err(format!(
                "ingested {} nodes, {} edges",
                net.node_count(),
                net.edge_count()
            ));
        }
        let mut rng = seeded(1000 + seed);
        let mut pick = || NodeId(rng.gen_range(0..150));
        let (s, w, t) = (pick(), pick(), pick());
        if s == w || w == t || s == t {
            continue;
        }
        let inst = WaypointInstance::builder(net, s, t)
            .waypoints(vec![w])
            .build()
            .map_err(|e| e.to_string())?;
        let start = Instant::now();
        let sol =
            solve_single_waypoint(&inst, SingleMethod::Suurballe).map_err(|e| e.to_string())?;
        let spent = start.elapsed();
        worst = worst.max(spent);
        if spent >= Duration::from_secs(1) {
            return Err(format!("seed {seed}: {spent:.2?}"));
        }
        valid(&inst, &sol)?;
        solved += sol.is_some() as usize;
    }
    Ok(format!("{solved} feasible, slowest {worst:.2?}"))
}

fn regime_tags() -> Verdict {
    let mut corpus: Vec<(WaypointInstance, Regime)> = Vec::new();
    for seed in 0..20 {
        let mut rng = seeded(seed);
        let net = random_network(&mut rng, 5, 9, true, EdgeRanges::unit());
        let g = gadget_two_disjoint_paths(&net, [(NodeId(0), NodeId(1)), (NodeId(2), NodeId(3))])
            .map_err(|e| e.to_string())?;
        corpus.push((g.instance, Regime::DirectedWaypoint));

        let ints: Vec<u64> = (0..4).map(|_| rng.gen_range(1..=5)).collect();
        for flavor in [
            PartitionFlavor::ArbitraryChange,
            PartitionFlavor::BoundedChange,
        ] {
            let g = gadget_partition(&ints, flavor).map_err(|e| e.to_string())?;
            corpus.push((g.instance, Regime::DemandChange));
        }

        let net = random_partial_ktree(&mut rng, 6, 2, 0.6, EdgeRanges::unit());
        let g = gadget_tw3(&net, &[(NodeId(0), NodeId(1)), (NodeId(2), NodeId(3))])
            .map_err(|e| e.to_string())?;
        corpus.push((g.instance, Regime::ManyWaypoints));

        let supply = random_connected(&mut rng, 5, 2, EdgeRanges::unit());
        let g = gadget_eulerian(&supply, &[(NodeId(0), NodeId(1)), (NodeId(2), NodeId(3))])
            .map_err(|e| e.to_string())?;
        corpus.push((g.instance, Regime::ManyWaypoints));

        let mut bounded = small_instance(seed, false, 1);
        bounded.bounds = Some(vec![Rational::from_int(6), Rational::from_int(6)]);
        corpus.push((bounded, Regime::DistanceBounds));
    }
    let opts = SolveOptions {
        oracle: oracle_limits().with_steps(2_000_000),
        ..SolveOptions::default()
    };
    let mut exempt = 0;
    for (i, (inst, regime)) in corpus.iter().enumerate() {
        let res = solve(inst, opts).map_err(|e| e.to_string())?;
        if matches!(res.solver, Solver::Dag | Solver::Tree) {
            exempt += 1;
            continue;
        }
        if !res.has_tag(*regime) {
            return Err(format!(
                "corpus item {i} solved by {} lacks {}",
                res.solver,
                regime.tag()
            ));
        }
    }
    Ok(format!(
        "{} of {} hardness-regime instances tagged ({exempt} were acyclic and solved exactly)",
        corpus.len() - exempt,
        corpus.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 greedy-trap regression", greedy_trap_regression),
        ("2 double-back regression", double_back_regression),
        ("3 cross-solver equivalence", cross_solver),
        ("4 dp ground truth", dp_ground_truth),
        ("5 dag/tree ground truth", structured_ground_truth),
        ("6 gadget equivalence", gadget_equivalence),
        ("7 transform conservation", transform_conservation),
        ("8 graphml scale smoke", graphml_scale),
        ("regime tags", regime_tags),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail} ({:.2?})", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
