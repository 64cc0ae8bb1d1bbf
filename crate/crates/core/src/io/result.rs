//! Structured result output and its inverse.
//!
//! ```json
//! {
//!   "status": "feasible",
//!   "feasible": true,
//!   "cost": { "exact": "6", "approx": 6.0 },
//!   "segments": [ { "nodes": ["s", "u", "w"], "edges": [0, 1] } ],
//!   "usage": [ { "edge": 0, "label": "s–u", "used": "1" } ],
//!   "solver": "single-waypoint",
//!   "warnings": []
//! }
//! ```
//!
//! Edges are edge-instance ids (insertion order in the instance file).
//! Rationals are written as `p` or `p/q`; `approx` is advisory.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::engine::{Outcome, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Path, WalkSolution, WaypointInstance};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostDoc {
    pub exact: String,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDoc {
    pub nodes: Vec<String>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsageDoc {
    pub edge: usize,
    pub label: String,
    pub used: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarningDoc {
    pub tag: String,
    pub message: String,
}

/// The output document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub status: String,
    pub feasible: bool,
    pub cost: Option<CostDoc>,
    pub segments: Vec<SegmentDoc>,
    pub usage: Vec<UsageDoc>,
    pub solver: String,
    pub warnings: Vec<WarningDoc>,
}

impl ResultDoc {
    pub fn new(instance: &WaypointInstance, result: &SolveResult) -> ResultDoc {
        let net = &instance.network;
        let (cost, segments, usage) = match &result.outcome {
            Outcome::Solved(sol) => (
                Some(CostDoc {
                    exact: sol.total_cost.to_string(),
                    approx: sol.total_cost.to_f64(),
                }),
                sol.segments
                    .iter()
                    .map(|p| SegmentDoc {
                        nodes: p.nodes.iter().map(|&v| net.name(v).to_string()).collect(),
                        edges: p.edges.iter().map(|e| e.0).collect(),
                    })
                    .collect(),
                sol.usage
                    .iter()
                    .map(|(e, used)| UsageDoc {
                        edge: e.0,
                        label: net.edge_label(*e),
                        used: used.to_string(),
                    })
                    .collect(),
            ),
            _ => (None, Vec::new(), Vec::new()),
        };
        ResultDoc {
            status: result.outcome.status().to_string(),
            feasible: matches!(result.outcome, Outcome::Solved(_)),
            cost,
            segments,
            usage,
            solver: result.solver.to_string(),
            warnings: result
                .warnings
                .iter()
                .map(|w| WarningDoc {
                    tag: w.tag.tag().to_string(),
                    message: w.message.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds the walk against `instance`, keeping the reported cost and
    /// usage so that validation can compare them with the recomputed ones.
    pub fn to_walk(&self, instance: &WaypointInstance) -> Result<Option<WalkSolution>> {
        if !self.feasible {
            return Ok(None);
        }
        let net = &instance.network;
        let malformed = |m: String| Error::MalformedResult(m);
        let mut segments = Vec::with_capacity(self.segments.len());
        for (i, seg) in self.segments.iter().enumerate() {
            let nodes = seg
                .nodes
                .iter()
                .map(|name| {
                    net.node(name).ok_or_else(|| {
                        malformed(format!("segment {i} names unknown node `{name}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            segments.push(Path {
                nodes,
                edges: seg.edges.iter().map(|&e| EdgeId(e)).collect(),
            });
        }
        let cost = self
            .cost
            .as_ref()
            .ok_or_else(|| malformed("feasible result without cost".into()))?;
        let total_cost: Rational = cost
            .exact
            .parse()
            .map_err(|_| malformed(format!("cost `{}` is not a rational", cost.exact)))?;
        let mut usage = BTreeMap::new();
        for u in &self.usage {
            let used: Rational = u
                .used
                .parse()
                .map_err(|_| malformed(format!("usage `{}` is not a rational", u.used)))?;
            usage.insert(EdgeId(u.edge), used);
        }
        Ok(Some(WalkSolution {
            segments,
            total_cost,
            usage,
        }))
    }
}

/// Canonical JSON text for a result; identical input gives identical bytes.
pub fn emit_result(instance: &WaypointInstance, result: &SolveResult) -> String {
    let mut out =
        serde_json::to_string_pretty(&ResultDoc::new(instance, result)).expect("result serializes");
    out.push('\n');
    out
}

pub fn parse_result(text: &str) -> Result<ResultDoc> {
    serde_json::from_str(text).map_err(|e| Error::MalformedResult(e.to_string()))
}

/// Short human-readable summary.
pub fn render_text(instance: &WaypointInstance, result: &SolveResult) -> String {
    let net = &instance.network;
    let mut out = format!(
        "status: {}\nsolver: {}\n",
        result.outcome.status(),
        result.solver
    );
    if let Outcome::Solved(sol) = &result.outcome {
        out.push_str(&format!("cost: {}\n", sol.total_cost));
        out.push_str(&format!("walk: {}\n", sol.walk_names(net).join(" ")));
        for (i, seg) in sol.segments.iter().enumerate() {
            out.push_str(&format!("segment {i}: {}\n", seg.describe(net)));
        }
    }
    for w in &result.warnings {
        out.push_str(&format!("warning [{}]: {}\n", w.tag.tag(), w.message));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{solve, Algo, SolveOptions};
    use crate::graph::validate_walk;
    use crate::io::parse_instance;

    const DOUBLE_BACK: &str = "graph undirected\nedge s w\nedge s w\nedge s t\nroute s t\nwaypoints w\n";

    #[test]
    fn round_trip_validates() {
        let inst = parse_instance(DOUBLE_BACK).unwrap();
        let res = solve(&inst, SolveOptions::default().with_algo(Algo::Oracle)).unwrap();
        let text = emit_result(&inst, &res);
        assert_eq!(text, emit_result(&inst, &res));
        let doc = parse_result(&text).unwrap();
        assert_eq!(doc.cost.as_ref().unwrap().exact, "3");
        let walk = doc.to_walk(&inst).unwrap().unwrap();
        assert!(validate_walk(&inst, &walk).unwrap().is_ok());
    }

    #[test]
    fn infeasible_has_no_segments() {
        let inst = parse_instance("graph undirected\nedge s w\nedge s t\nroute s t\nwaypoints w\n")
            .unwrap();
        let res = solve(&inst, SolveOptions::default()).unwrap();
        let doc = parse_result(&emit_result(&inst, &res)).unwrap();
        assert_eq!(doc.status, "infeasible");
        assert!(!doc.feasible && doc.segments.is_empty() && doc.cost.is_none());
    }

    #[test]
    fn tampered_cost_fails_validation() {
        let inst = parse_instance(DOUBLE_BACK).unwrap();
        let res = solve(&inst, SolveOptions::default()).unwrap();
        let text = emit_result(&inst, &res).replace("\"exact\": \"3\"", "\"exact\": \"2\"");
        let walk = parse_result(&text)
            .unwrap()
            .to_walk(&inst)
            .unwrap()
            .unwrap();
        assert!(!validate_walk(&inst, &walk).unwrap().is_ok());
    }
}
