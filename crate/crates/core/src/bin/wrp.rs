use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use waypoint_core::engine::{solve, Algo, Outcome, SolveOptions};
use waypoint_core::gadgets::random::{
    random_connected, random_dag, random_network, random_partial_ktree, random_route, seeded,
    EdgeRanges,
};
use waypoint_core::gadgets::{
    gadget_eulerian, gadget_partition, gadget_tw3, gadget_two_disjoint_paths, GadgetOutput,
    PartitionFlavor,
};
use waypoint_core::graph::{classify, validate_walk, NodeId, WaypointInstance};
use waypoint_core::io::{
    emit_result, parse_graphml_topology, parse_instance, parse_result, render_text,
    serialize_instance,
};
use waypoint_core::oracle::Limits;

#[derive(Parser)]
#[command(
    name = "wrp",
    version,
    about = "Ordered waypoint routing under edge capacities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file (or a GraphML topology with --route).
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Step budget for the exhaustive oracle.
        #[arg(long)]
        oracle_budget: Option<u64>,
        /// Largest network the oracle attempts.
        #[arg(long)]
        oracle_max_nodes: Option<usize>,
        /// Source and target, for GraphML input.
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        route: Option<Vec<String>>,
        /// Waypoints, for GraphML input.
        #[arg(long, num_args = 0..)]
        waypoints: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check a JSON result against its instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Print the structural class of an instance's network.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a generated instance.
    Gen {
        #[arg(long, value_enum)]
        gadget: GadgetKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Partition integers, comma separated.
        #[arg(long, value_delimiter = ',')]
        integers: Vec<u64>,
        #[arg(long, value_enum, default_value = "arbitrary")]
        flavor: FlavorArg,
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long)]
        edges: Option<usize>,
        /// Waypoints for random instances, terminal pairs for gadgets.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        directed: bool,
    },
    /// Solve every `.wrp` file in a directory concurrently.
    Bench {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        report: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    #[value(name = "2dp")]
    TwoDp,
    Partition,
    Tw3,
    Eulerian,
    Random,
    Dag,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Arbitrary,
    Bounded,
}

const EXIT_INFEASIBLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn read(path: &FsPath) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &FsPath, route: Option<&[String]>, waypoints: &[String]) -> Result<WaypointInstance> {
    let text = read(path)?;
    let graphml = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("graphml" | "xml")
    );
    if !graphml {
        if route.is_some() || !waypoints.is_empty() {
            bail!("--route and --waypoints apply to GraphML input only");
        }
        return Ok(parse_instance(&text)?);
    }
    let net = parse_graphml_topology(&text)?;
    let route = route.ok_or_else(|| anyhow!("GraphML input needs --route S T"))?;
    let id = |name: &str| net.require_node(name);
    let (s, t) = (id(&route[0])?, id(&route[1])?);
    let w = waypoints
        .iter()
        .map(|x| id(x))
        .collect::<waypoint_core::Result<Vec<_>>>()?;
    Ok(WaypointInstance::builder(net, s, t).waypoints(w).build()?)
}

fn options(algo: &str, budget: Option<u64>, max_nodes: Option<usize>) -> Result<SolveOptions> {
    let mut limits = Limits::default();
    if let Some(b) = budget {
        limits = limits.with_steps(b);
    }
    if let Some(n) = max_nodes {
        limits = limits.with_max_nodes(n);
    }
    Ok(SolveOptions {
        algo: algo.parse::<Algo>()?,
        oracle: limits,
        ..SolveOptions::default()
    })
}

fn exit_for(outcome: &Outcome) -> ExitCode {
    match outcome {
        Outcome::Solved(_) => ExitCode::SUCCESS,
        Outcome::Infeasible => ExitCode::from(EXIT_INFEASIBLE),
        Outcome::BudgetExceeded => ExitCode::from(EXIT_BUDGET),
    }
}

fn distinct_nodes<R: Rng>(rng: &mut R, n: usize, count: usize) -> Result<Vec<NodeId>> {
    if count > n {
        bail!("need {count} distinct terminals but the network has {n} nodes");
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    Ok(ids[..count].iter().map(|&i| NodeId(i)).collect())
}

#[allow(clippy::too_many_arguments)]
fn generate(
    gadget: GadgetKind,
    seed: u64,
    integers: &[u64],
    flavor: FlavorArg,
    nodes: Option<usize>,
    edges: Option<usize>,
    count: Option<usize>,
    directed: bool,
) -> Result<(WaypointInstance, Option<GadgetOutput>)> {
    let mut rng = seeded(seed);
    let unit = EdgeRanges::unit();
    let out = match gadget {
        GadgetKind::Random => {
            let n = nodes.unwrap_or(8);
            let m = edges.unwrap_or(12);
            let k = count.unwrap_or(1);
            let net = if directed {
                random_network(&mut rng, n, m, true, EdgeRanges::default())
            } else {
                random_connected(&mut rng, n, m.saturating_sub(n - 1), EdgeRanges::default())
            };
            return Ok((random_route(&mut rng, net, k, &[1]), None));
        }
        GadgetKind::Dag => {
            let net = random_dag(
                &mut rng,
                nodes.unwrap_or(8),
                edges.unwrap_or(14),
                EdgeRanges::default(),
            );
            return Ok((random_route(&mut rng, net, count.unwrap_or(1), &[1]), None));
        }
        GadgetKind::TwoDp => {
            let net = random_network(
                &mut rng,
                nodes.unwrap_or(6),
                edges.unwrap_or(10),
                true,
                unit,
            );
            let t = distinct_nodes(&mut rng, net.node_count(), 4)?;
            gadget_two_disjoint_paths(&net, [(t[0], t[1]), (t[2], t[3])])?
        }
        GadgetKind::Partition => {
            let ints: Vec<u64> = if integers.is_empty() {
                (0..6).map(|_| rng.gen_range(1..=5)).collect()
            } else {
                integers.to_vec()
            };
            let flavor = match flavor {
                FlavorArg::Arbitrary => PartitionFlavor::ArbitraryChange,
                FlavorArg::Bounded => PartitionFlavor::BoundedChange,
            };
            gadget_partition(&ints, flavor)?
        }
        GadgetKind::Tw3 => {
            let n = nodes.unwrap_or(6);
            let k = count.unwrap_or(2);
            let net = random_partial_ktree(&mut rng, n, 2, 0.6, unit);
            let t = distinct_nodes(&mut rng, n, 2 * k)?;
            let pairs: Vec<_> = t.chunks(2).map(|c| (c[0], c[1])).collect();
            gadget_tw3(&net, &pairs)?
        }
        GadgetKind::Eulerian => {
            let n = nodes.unwrap_or(5);
            let k = count.unwrap_or(2);
            let net = random_connected(&mut rng, n, edges.unwrap_or(n).saturating_sub(n - 1), unit);
            let mut pairs = Vec::new();
            for _ in 0..k {
                let t = distinct_nodes(&mut rng, n, 2)?;
                pairs.push((t[0], t[1]));
            }
            gadget_eulerian(&net, &pairs)?
        }
    };
    Ok((out.instance.clone(), Some(out)))
}

#[derive(Serialize)]
struct BenchRow {
    file: String,
    status: String,
    solver: String,
    cost: Option<String>,
    millis: f64,
    error: Option<String>,
}

fn bench(dir: &FsPath, algo: &str) -> Result<Vec<BenchRow>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "wrp"))
        .collect();
    files.sort();
    let opts = options(algo, None, None)?;
    Ok(files
        .par_iter()
        .map(|path| {
            let file = path.file_name().unwrap().to_string_lossy().into_owned();
            let started = Instant::now();
            let run = load(path, None, &[]).and_then(|inst| Ok(solve(&inst, opts)?));
            let millis = started.elapsed().as_secs_f64() * 1e3;
            match run {
                Ok(res) => BenchRow {
                    file,
                    status: res.outcome.status().into(),
                    solver: res.solver.to_string(),
                    cost: res.outcome.solution().map(|s| s.total_cost.to_string()),
                    millis,
                    error: None,
                },
                Err(e) => BenchRow {
                    file,
                    status: "error".into(),
                    solver: String::new(),
                    cost: None,
                    millis,
                    error: Some(format!("{e:#}")),
                },
            }
        })
        .collect())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            input,
            algo,
            oracle_budget,
            oracle_max_nodes,
            route,
            waypoints,
            json,
        } => {
            let inst = load(&input, route.as_deref(), &waypoints)?;
            let res = solve(&inst, options(&algo, oracle_budget, oracle_max_nodes)?)?;
            if json {
                print!("{}", emit_result(&inst, &res));
            } else {
                print!("{}", render_text(&inst, &res));
            }
            Ok(exit_for(&res.outcome))
        }
        Command::Verify { input, solution } => {
            let inst = load(&input, None, &[])?;
            let doc = parse_result(&read(&solution)?)?;
            let Some(walk) = doc.to_walk(&inst)? else {
                println!("result reports {}; nothing to validate", doc.status);
                return Ok(ExitCode::SUCCESS);
            };
            let report = validate_walk(&inst, &walk)?;
            if report.is_ok() {
                println!("valid: cost {}", walk.total_cost);
                Ok(ExitCode::SUCCESS)
            } else {
                for m in report.messages() {
                    println!("violation: {m}");
                }
                Ok(ExitCode::from(EXIT_INFEASIBLE))
            }
        }
        Command::Classify { input } => {
            let inst = load(&input, None, &[])?;
            let class = classify(&inst.network)?;
            println!("{}", serde_json::to_string_pretty(&class)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            gadget,
            seed,
            out,
            integers,
            flavor,
            nodes,
            edges,
            count,
            directed,
        } => {
            let (inst, meta) = generate(
                gadget, seed, &integers, flavor, nodes, edges, count, directed,
            )?;
            let mut text = String::new();
            if let Some(g) = &meta {
                text.push_str(&format!("# witness map: {}\n", g.witness_map));
                for (k, v) in &g.properties {
                    text.push_str(&format!("# {k}: {v}\n"));
                }
            }
            text.push_str(&serialize_instance(&inst)?);
            fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { dir, report, algo } => {
            let rows = bench(&dir, &algo)?;
            fs::write(&report, serde_json::to_string_pretty(&rows)? + "\n")
                .with_context(|| format!("writing {}", report.display()))?;
            let failed = rows.iter().filter(|r| r.error.is_some()).count();
            println!("{} instances, {} errors", rows.len(), failed);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
