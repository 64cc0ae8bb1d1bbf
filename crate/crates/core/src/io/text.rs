//! Line-oriented instance format.
//!
//! ```text
//! graph undirected
//! edge s w cap=2 w=1/2
//! edge w t
//! route s t
//! waypoints w
//! demands 1 2
//! ```
//!
//! `node <id>` declares a node without edges. Capacities and weights
//! default to 1.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Directedness, Network, NodeId, WaypointInstance};
use crate::rational::Rational;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, field: &str, text: &str) -> Result<Rational> {
    text.parse::<Rational>()
        .map_err(|_| parse_error(line, format!("{field}: invalid number `{text}`")))
}

#[derive(Default)]
struct Declared<T> {
    value: Option<(usize, T)>,
}

impl<T> Declared<T> {
    fn set(&mut self, line: usize, keyword: &str, value: T) -> Result<()> {
        if let Some((first, _)) = &self.value {
            return Err(parse_error(
                line,
                format!("`{keyword}` already declared on line {first}"),
            ));
        }
        self.value = Some((line, value));
        Ok(())
    }
}

/// Parses and validates an instance. Waypoints may coincide with the
/// source or target (giving an empty segment).
pub fn parse_instance(text: &str) -> Result<WaypointInstance> {
    let mut net: Option<Network> = None;
    let mut route: Declared<(String, String)> = Declared::default();
    let mut waypoints: Declared<Vec<String>> = Declared::default();
    let mut demands: Declared<Vec<Rational>> = Declared::default();
    let mut bounds: Declared<Vec<Rational>> = Declared::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().unwrap();
        let args: Vec<&str> = words.collect();
        match keyword {
            "graph" => {
                if net.is_some() {
                    return Err(parse_error(line, "`graph` already declared"));
                }
                let kind = match args.as_slice() {
                    ["undirected"] => Directedness::Undirected,
                    ["directed"] => Directedness::Directed,
                    _ => {
                        return Err(parse_error(
                            line,
                            "expected `graph undirected` or `graph directed`",
                        ))
                    }
                };
                net = Some(Network::new(kind));
            }
            "node" | "edge" => {
                let Some(net) = net.as_mut() else {
                    return Err(parse_error(
                        line,
                        format!("`{keyword}` before `graph` declaration"),
                    ));
                };
                if keyword == "node" {
                    if args.len() != 1 {
                        return Err(parse_error(line, "expected `node <id>`"));
                    }
                    net.add_node(args[0]);
                    continue;
                }
                if args.len() < 2 {
                    return Err(parse_error(
                        line,
                        "expected `edge <u> <v> [cap=<c>] [w=<w>]`",
                    ));
                }
                let mut cap = Rational::ONE;
                let mut weight = Rational::ONE;
                for opt in &args[2..] {
                    match opt.split_once('=') {
                        Some(("cap", v)) => cap = parse_number(line, "cap", v)?,
                        Some(("w", v)) => weight = parse_number(line, "w", v)?,
                        _ => {
                            return Err(parse_error(
                                line,
                                format!("unknown edge attribute `{opt}`"),
                            ))
                        }
                    }
                }
                let u = net.add_node(args[0]);
                let v = net.add_node(args[1]);
                net.add_edge(u, v, cap, weight)
                    .map_err(|e| parse_error(line, e.to_string()))?;
            }
            "route" => {
                if args.len() != 2 {
                    return Err(parse_error(line, "expected `route <s> <t>`"));
                }
                route.set(line, keyword, (args[0].to_string(), args[1].to_string()))?;
            }
            "waypoints" => {
                waypoints.set(line, keyword, args.iter().map(|s| s.to_string()).collect())?;
            }
            "demands" | "bounds" => {
                let values = args
                    .iter()
                    .map(|a| parse_number(line, keyword, a))
                    .collect::<Result<Vec<_>>>()?;
                if keyword == "demands" {
                    demands.set(line, keyword, values)?;
                } else {
                    bounds.set(line, keyword, values)?;
                }
            }
            other => return Err(parse_error(line, format!("unknown declaration `{other}`"))),
        }
    }

    let last_line = text.lines().count().max(1);
    let net = net.ok_or_else(|| parse_error(last_line, "missing `graph` declaration"))?;
    if net.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (route_line, (s, t)) = route
        .value
        .ok_or_else(|| parse_error(last_line, "missing `route` declaration"))?;
    let lookup = |line: usize, name: &str| -> Result<NodeId> {
        net.node(name)
            .ok_or_else(|| parse_error(line, format!("unknown node `{name}`")))
    };
    let source = lookup(route_line, &s)?;
    let target = lookup(route_line, &t)?;
    let (wp_line, wp_names) = waypoints.value.unwrap_or((route_line, Vec::new()));
    let wps = wp_names
        .iter()
        .map(|w| lookup(wp_line, w))
        .collect::<Result<Vec<_>>>()?;

    let mut builder = WaypointInstance::builder(net, source, target)
        .waypoints(wps)
        .allow_degenerate(true);
    let demand_line = demands.value.as_ref().map(|(l, _)| *l);
    let bound_line = bounds.value.as_ref().map(|(l, _)| *l);
    if let Some((_, d)) = demands.value {
        builder = builder.demands(d);
    }
    if let Some((_, b)) = bounds.value {
        builder = builder.bounds(b);
    }
    builder.build().map_err(|e| {
        let line = match &e {
            Error::DuplicateWaypoint(_) => wp_line,
            Error::LengthMismatch {
                field: "demands", ..
            }
            | Error::InvalidField {
                field: "demands", ..
            } => demand_line.unwrap_or(wp_line),
            Error::LengthMismatch {
                field: "bounds", ..
            }
            | Error::InvalidField {
                field: "bounds", ..
            } => bound_line.unwrap_or(wp_line),
            _ => route_line,
        };
        parse_error(line, e.to_string())
    })
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
        return Err(Error::InvalidArgument(format!(
            "node name `{name}` cannot be written in the text format"
        )));
    }
    Ok(())
}

/// Writes an instance so that [`parse_instance`] reproduces it exactly,
/// including node numbering.
pub fn serialize_instance(instance: &WaypointInstance) -> Result<String> {
    let net = &instance.network;
    let mut out = String::new();
    let kind = if net.is_directed() {
        "directed"
    } else {
        "undirected"
    };
    writeln!(out, "graph {kind}").unwrap();

    let mut first_seen = Vec::new();
    let mut seen = vec![false; net.node_count()];
    for e in net.edges() {
        for v in [e.u, e.v] {
            if !seen[v.0] {
                seen[v.0] = true;
                first_seen.push(v.0);
            }
        }
    }
    let natural =
        first_seen.len() == net.node_count() && first_seen.iter().enumerate().all(|(i, &v)| i == v);
    for v in net.nodes() {
        check_name(net.name(v))?;
        if !natural {
            writeln!(out, "node {}", net.name(v)).unwrap();
        }
    }
    for e in net.edges() {
        write!(out, "edge {} {}", net.name(e.u), net.name(e.v)).unwrap();
        if e.capacity != 1 {
            write!(out, " cap={}", e.capacity).unwrap();
        }
        if e.weight != 1 {
            write!(out, " w={}", e.weight).unwrap();
        }
        out.push('\n');
    }
    writeln!(
        out,
        "route {} {}",
        net.name(instance.source),
        net.name(instance.target)
    )
    .unwrap();
    if !instance.waypoints.is_empty() {
        let names: Vec<&str> = instance.waypoints.iter().map(|&w| net.name(w)).collect();
        writeln!(out, "waypoints {}", names.join(" ")).unwrap();
    }
    if !instance.has_unit_demands() {
        let d: Vec<String> = instance.demands.iter().map(|d| d.to_string()).collect();
        writeln!(out, "demands {}", d.join(" ")).unwrap();
    }
    if let Some(bounds) = &instance.bounds {
        let b: Vec<String> = bounds.iter().map(|d| d.to_string()).collect();
        writeln!(out, "bounds {}", b.join(" ")).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_instance_gets_defaults() {
        let inst = parse_instance("graph undirected\nedge s w\nedge s t\nroute s t\nwaypoints w\n")
            .unwrap();
        assert_eq!(inst.network.edge_count(), 2);
        assert!(inst
            .network
            .edges()
            .iter()
            .all(|e| e.capacity == 1 && e.weight == 1));
        assert_eq!(inst.demands, vec![Rational::ONE; 2]);
    }

    #[test]
    fn demands_line() {
        let inst = parse_instance(
            "graph undirected\nedge s w\nedge w t\nroute s t\nwaypoints w\ndemands 1 2\n",
        )
        .unwrap();
        assert_eq!(inst.demands, vec![Rational::ONE, Rational::from_int(2)]);
    }

    #[test]
    fn duplicate_waypoints_report_the_line() {
        let err =
            parse_instance("graph undirected\nedge s w\nedge w t\nroute s t\nwaypoints w w\n")
                .unwrap_err();
        assert_eq!(err.to_string(), "line 5: duplicate waypoint node `w`");
    }

    #[test]
    fn demand_count_mismatch_names_the_field() {
        let err =
            parse_instance("graph undirected\nedge s t\nroute s t\ndemands 1 2\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 4: demands: expected 1 values, found 2"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance("graph undirected\n\nedge a b cap=x\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        let err = parse_instance("edge a b\n").unwrap_err();
        assert!(err.to_string().starts_with("line 1:"));
        let err = parse_instance("graph directed\nedge a b w=-1\nroute a b\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: negative weight unsupported");
    }

    #[test]
    fn round_trip_preserves_everything() {
        let text = "graph directed\nnode z\nedge a b cap=3/2 w=2\nedge a b\nroute a b\nbounds 4\n";
        let inst = parse_instance(text).unwrap();
        let again = parse_instance(&serialize_instance(&inst).unwrap()).unwrap();
        assert_eq!(inst, again);
    }
}
