use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::network::Network;
use crate::treewidth::elimination::{min_fill_order, order_width, width_two_order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    Tree,
    Dag,
    Unicyclic,
    TreewidthLe2,
    General,
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureTag::Tree => "tree",
            StructureTag::Dag => "dag",
            StructureTag::Unicyclic => "unicyclic",
            StructureTag::TreewidthLe2 => "treewidth_le_2",
            StructureTag::General => "general",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub tag: StructureTag,
    /// Upper bound on the treewidth of the underlying undirected graph.
    pub treewidth_upper_bound: Option<usize>,
}

pub fn is_connected(net: &Network) -> bool {
    let n = net.node_count();
    if n == 0 {
        return true;
    }
    let adj = net.simple_adjacency();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// Kahn's algorithm; `None` when the directed network has a cycle.
pub fn topological_order(net: &Network) -> Option<Vec<usize>> {
    let n = net.node_count();
    let mut indeg = vec![0usize; n];
    for e in net.edges() {
        indeg[e.v.0] += 1;
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for (_, u) in net.out_edges(crate::graph::NodeId(v)) {
            indeg[u.0] -= 1;
            if indeg[u.0] == 0 {
                ready.insert(u.0);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Treewidth upper bound of the underlying simple undirected graph.
pub fn treewidth_bound(net: &Network) -> usize {
    let adj = net.simple_adjacency();
    if let Some(order) = width_two_order(&adj) {
        return order_width(&adj, &order).max(1);
    }
    let order = min_fill_order(&adj);
    order_width(&adj, &order).max(1)
}

/// Most specific structural tag of a network.
pub fn classify(net: &Network) -> Result<StructureClass> {
    if net.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = net.node_count();
    let m = net.edge_count();
    if net.is_directed() {
        if topological_order(net).is_some() {
            return Ok(StructureClass {
                tag: StructureTag::Dag,
                treewidth_upper_bound: Some(treewidth_bound(net)),
            });
        }
    } else if is_connected(net) {
        if m + 1 == n {
            return Ok(StructureClass {
                tag: StructureTag::Tree,
                treewidth_upper_bound: Some(1),
            });
        }
        if m == n {
            return Ok(StructureClass {
                tag: StructureTag::Unicyclic,
                treewidth_upper_bound: Some(2),
            });
        }
    }
    let adj = net.simple_adjacency();
    if let Some(order) = width_two_order(&adj) {
        return Ok(StructureClass {
            tag: StructureTag::TreewidthLe2,
            treewidth_upper_bound: Some(order_width(&adj, &order).max(1)),
        });
    }
    let order = min_fill_order(&adj);
    Ok(StructureClass {
        tag: StructureTag::General,
        treewidth_upper_bound: Some(order_width(&adj, &order)),
    })
}
