//! Topology ingestion from the GraphML subset used by topology archives.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Network;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Attr {
    Capacity,
    Weight,
}

fn attr_for(name: &str) -> Option<Attr> {
    match name.to_ascii_lowercase().as_str() {
        "capacity" | "cap" => Some(Attr::Capacity),
        "weight" | "w" | "cost" => Some(Attr::Weight),
        _ => None,
    }
}

/// Reads nodes and edges into an undirected network. Edge data keys named
/// `capacity` or `weight` are honoured; anything missing defaults to 1.
/// Parallel edges are kept as separate instances.
pub fn parse_graphml_topology(text: &str) -> Result<Network> {
    let doc = roxmltree::Document::parse(text).map_err(|e| Error::GraphMl(e.to_string()))?;
    let root = doc.root_element();
    if root.tag_name().name() != "graphml" {
        return Err(Error::GraphMl(format!(
            "expected a <graphml> root element, found <{}>",
            root.tag_name().name()
        )));
    }
    let mut keys: HashMap<String, (Attr, String)> = HashMap::new();
    for key in root.children().filter(|n| n.has_tag_name("key")) {
        let Some(id) = key.attribute("id") else {
            continue;
        };
        let label = key.attribute("attr.name").unwrap_or(id);
        if let Some(attr) = attr_for(label) {
            if matches!(key.attribute("for"), None | Some("edge") | Some("all")) {
                keys.insert(id.to_string(), (attr, label.to_string()));
            }
        }
    }
    let graph = root
        .children()
        .find(|n| n.has_tag_name("graph"))
        .ok_or_else(|| Error::GraphMl("missing <graph> element".into()))?;

    let mut net = Network::undirected();
    for node in graph.children().filter(|n| n.has_tag_name("node")) {
        let id = node
            .attribute("id")
            .ok_or_else(|| Error::GraphMl("node without id".into()))?;
        if net.node(id).is_some() {
            return Err(Error::GraphMl(format!("duplicate node id `{id}`")));
        }
        net.add_node(id);
    }
    for edge in graph.children().filter(|n| n.has_tag_name("edge")) {
        let end = |attr: &str| -> Result<_> {
            let name = edge
                .attribute(attr)
                .ok_or_else(|| Error::GraphMl(format!("edge without {attr}")))?;
            net.node(name)
                .ok_or_else(|| Error::GraphMl(format!("edge references unknown node `{name}`")))
        };
        let (u, v) = (end("source")?, end("target")?);
        let mut cap = Rational::ONE;
        let mut weight = Rational::ONE;
        for data in edge.children().filter(|n| n.has_tag_name("data")) {
            let Some((attr, label)) = data.attribute("key").and_then(|k| keys.get(k)) else {
                continue;
            };
            let raw = data.text().unwrap_or("").trim();
            let value = raw.parse::<Rational>().map_err(|_| {
                Error::GraphMl(format!("non-numeric value `{raw}` for key `{label}`"))
            })?;
            match attr {
                Attr::Capacity => cap = value,
                Attr::Weight => weight = value,
            }
        }
        net.add_edge(u, v, cap, weight)
            .map_err(|e| Error::GraphMl(e.to_string()))?;
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = r#"<?xml version="1.0" encoding="UTF-8"?>
<graphml xmlns="http://graphml.graphdrawing.org/xmlns">
  <key id="d0" for="edge" attr.name="weight" attr.type="double"/>
  <graph edgedefault="undirected">
    <node id="a"/><node id="b"/><node id="c"/>
    <edge source="a" target="b"/>
    <edge source="b" target="c"><data key="d0">2.5</data></edge>
    <edge source="c" target="a"/>
  </graph>
</graphml>"#;

    #[test]
    fn triangle_with_defaults() {
        let net = parse_graphml_topology(TRIANGLE).unwrap();
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edge_count(), 3);
        assert_eq!(net.edges()[0].capacity, Rational::ONE);
        assert_eq!(net.edges()[1].weight, Rational::new(5, 2));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let text = TRIANGLE.replace(r#"<node id="c"/>"#, r#"<node id="a"/>"#);
        assert!(parse_graphml_topology(&text)
            .unwrap_err()
            .to_string()
            .contains("duplicate node id"));
    }

    #[test]
    fn non_numeric_values_name_the_key() {
        let text = TRIANGLE.replace("2.5", "fast");
        let err = parse_graphml_topology(&text).unwrap_err().to_string();
        assert!(err.contains("`weight`"), "{err}");
    }

    #[test]
    fn malformed_markup_is_an_error() {
        assert!(parse_graphml_topology("<graphml><graph>").is_err());
    }
}
