use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Directedness {
    Undirected,
    Directed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: NodeId,
    pub v: NodeId,
    pub capacity: Rational,
    pub weight: Rational,
}

impl Edge {
    /// The endpoint opposite to `node`. For a self-loop this is `node` itself.
    pub fn other(&self, node: NodeId) -> NodeId {
        if node == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn joins(&self, a: NodeId, b: NodeId) -> bool {
        (self.u == a && self.v == b) || (self.u == b && self.v == a)
    }
}

/// A capacitated, weighted multigraph.
///
/// Node names are opaque strings; each receives a dense index in order of
/// first appearance. Edge ids are the insertion index, so parallel edges are
/// distinct instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    kind: Directedness,
    names: Vec<String>,
    index: HashMap<String, NodeId>,
    edges: Vec<Edge>,
    // outgoing arcs (directed) or incident edges (undirected)
    out: Vec<Vec<EdgeId>>,
    // incoming arcs; unused for undirected networks
    inc: Vec<Vec<EdgeId>>,
}

impl Network {
    pub fn new(kind: Directedness) -> Self {
        Network {
            kind,
            names: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
        }
    }

    pub fn undirected() -> Self {
        Self::new(Directedness::Undirected)
    }

    pub fn directed() -> Self {
        Self::new(Directedness::Directed)
    }

    pub fn kind(&self) -> Directedness {
        self.kind
    }

    pub fn is_directed(&self) -> bool {
        self.kind == Directedness::Directed
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Returns the existing id when the name is already known.
    pub fn add_node(&mut self, name: &str) -> NodeId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = NodeId(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        self.out.push(Vec::new());
        self.inc.push(Vec::new());
        id
    }

    /// Adds a node whose name does not collide with any existing one,
    /// starting from `base` and appending a counter if needed.
    pub fn add_fresh_node(&mut self, base: &str) -> NodeId {
        if !self.index.contains_key(base) {
            return self.add_node(base);
        }
        let mut i = 1usize;
        loop {
            let candidate = format!("{base}~{i}");
            if !self.index.contains_key(&candidate) {
                return self.add_node(&candidate);
            }
            i += 1;
        }
    }

    pub fn add_edge(
        &mut self,
        u: NodeId,
        v: NodeId,
        capacity: Rational,
        weight: Rational,
    ) -> Result<EdgeId> {
        if u.0 >= self.names.len() {
            return Err(Error::UnknownNode(format!("#{}", u.0)));
        }
        if v.0 >= self.names.len() {
            return Err(Error::UnknownNode(format!("#{}", v.0)));
        }
        if weight.is_negative() {
            return Err(Error::NegativeWeight);
        }
        if capacity.is_negative() {
            return Err(Error::NegativeCapacity);
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            id,
            u,
            v,
            capacity,
            weight,
        });
        self.out[u.0].push(id);
        match self.kind {
            Directedness::Directed => self.inc[v.0].push(id),
            Directedness::Undirected => {
                if u != v {
                    self.out[v.0].push(id);
                }
            }
        }
        Ok(id)
    }

    /// Convenience for tests and generators: nodes are created on demand.
    pub fn add_named_edge(
        &mut self,
        u: &str,
        v: &str,
        capacity: Rational,
        weight: Rational,
    ) -> Result<EdgeId> {
        let u = self.add_node(u);
        let v = self.add_node(v);
        self.add_edge(u, v, capacity, weight)
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    pub fn require_node(&self, name: &str) -> Result<NodeId> {
        self.node(name)
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    pub fn name(&self, node: NodeId) -> &str {
        &self.names[node.0]
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.names.len()).map(NodeId)
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    pub fn get_edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(id.0)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges that can be traversed when leaving `node`, paired with the
    /// node they lead to. Sorted by edge id.
    pub fn out_edges(&self, node: NodeId) -> impl Iterator<Item = (EdgeId, NodeId)> + '_ {
        self.out[node.0]
            .iter()
            .map(move |&e| (e, self.edges[e.0].other(node)))
    }

    /// Edges that can be traversed to arrive at `node`, paired with the node
    /// they come from.
    pub fn in_edges(&self, node: NodeId) -> impl Iterator<Item = (EdgeId, NodeId)> + '_ {
        let list = match self.kind {
            Directedness::Directed => &self.inc[node.0],
            Directedness::Undirected => &self.out[node.0],
        };
        list.iter().map(move |&e| (e, self.edges[e.0].other(node)))
    }

    /// Number of edge ends at `node` in the underlying undirected multigraph
    /// (a self-loop counts twice).
    pub fn degree(&self, node: NodeId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == node) as usize + (e.v == node) as usize)
            .sum()
    }

    /// Whether an edge can be traversed from `from` to `to`.
    pub fn traversable(&self, edge: EdgeId, from: NodeId, to: NodeId) -> bool {
        let e = &self.edges[edge.0];
        match self.kind {
            Directedness::Directed => e.u == from && e.v == to,
            Directedness::Undirected => e.joins(from, to),
        }
    }

    /// Human-readable `u–v` (or `u→v`) label for an edge.
    pub fn edge_label(&self, id: EdgeId) -> String {
        let e = &self.edges[id.0];
        let sep = match self.kind {
            Directedness::Directed => "→",
            Directedness::Undirected => "–",
        };
        format!("{}{}{}", self.name(e.u), sep, self.name(e.v))
    }

    /// Simple undirected adjacency (no loops, no multiplicity), neighbours
    /// sorted by index.
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for e in &self.edges {
            if e.u != e.v {
                adj[e.u.0].push(e.v.0);
                adj[e.v.0].push(e.u.0);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}
