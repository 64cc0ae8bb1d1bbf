use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Network;
use crate::treewidth::elimination::{exact_order, min_fill_order, order_width, width_two_order};

/// Bags over node indices joined by tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Each bag is sorted ascending.
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Builds the decomposition induced by eliminating nodes in `order`:
    /// each node's bag holds it and its neighbours still present when it is
    /// eliminated, hung below the bag of the first of those to go.
    pub fn from_elimination_order(adj: &[Vec<usize>], order: &[usize]) -> TreeDecomposition {
        let n = adj.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut sets: Vec<BTreeSet<usize>> = adj
            .iter()
            .enumerate()
            .map(|(v, l)| l.iter().copied().filter(|&u| u != v).collect())
            .collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent_node = Vec::with_capacity(n);
        for &v in order {
            let later: Vec<usize> = sets[v].iter().copied().collect();
            for (i, &a) in later.iter().enumerate() {
                sets[a].remove(&v);
                for &b in &later[i + 1..] {
                    sets[a].insert(b);
                    sets[b].insert(a);
                }
            }
            let mut bag = later.clone();
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
            parent_node.push(later.iter().copied().min_by_key(|&u| position[u]));
        }
        let mut edges = Vec::new();
        let mut roots = Vec::new();
        for (i, p) in parent_node.iter().enumerate() {
            match p {
                Some(u) => edges.push((i, position[*u])),
                None => roots.push(i),
            }
        }
        for w in roots.windows(2) {
            edges.push((w[0], w[1]));
        }
        if bags.is_empty() {
            bags.push(Vec::new());
        }
        TreeDecomposition { bags, edges }
    }

    /// Checks that the bag graph is a tree and that the bags holding any
    /// node form a connected subtree.
    pub fn validate_structure(&self) -> Result<()> {
        let b = self.bags.len();
        if b == 0 {
            return Err(Error::InvalidDecomposition("no bags".into()));
        }
        if self.edges.len() + 1 != b {
            return Err(Error::InvalidDecomposition(format!(
                "bag graph has {} bags but {} tree edges",
                b,
                self.edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); b];
        for &(x, y) in &self.edges {
            if x >= b || y >= b {
                return Err(Error::InvalidDecomposition(
                    "tree edge references a missing bag".into(),
                ));
            }
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut seen = vec![false; b];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDecomposition(
                "bag graph is not connected".into(),
            ));
        }
        let nodes: BTreeSet<usize> = self.bags.iter().flatten().copied().collect();
        for v in nodes {
            let holding: Vec<usize> = (0..b).filter(|&i| self.bags[i].contains(&v)).collect();
            let mut seen = vec![false; b];
            let mut stack = vec![holding[0]];
            seen[holding[0]] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] && self.bags[y].contains(&v) {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != holding.len() {
                return Err(Error::InvalidDecomposition(format!(
                    "bags containing node {v} are not connected"
                )));
            }
        }
        Ok(())
    }

    /// Full check against a network: structure, node coverage and edge
    /// coverage.
    pub fn validate(&self, net: &Network) -> Result<()> {
        self.validate_structure()?;
        let mut present = vec![false; net.node_count()];
        for &v in self.bags.iter().flatten() {
            if v >= net.node_count() {
                return Err(Error::InvalidDecomposition(format!(
                    "bag holds unknown node {v}"
                )));
            }
            present[v] = true;
        }
        if let Some(v) = present.iter().position(|p| !p) {
            return Err(Error::InvalidDecomposition(format!(
                "node {} is in no bag",
                net.name(crate::graph::NodeId(v))
            )));
        }
        for e in net.edges() {
            if e.is_loop() {
                continue;
            }
            let covered = self
                .bags
                .iter()
                .any(|bag| bag.contains(&e.u.0) && bag.contains(&e.v.0));
            if !covered {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {} is not covered by any bag",
                    net.edge_label(e.id)
                )));
            }
        }
        Ok(())
    }
}

/// A decomposition of width at most `max_width`, if one of the available
/// methods finds it: degree-two reduction, min-fill, and an exact search
/// on up to 14 nodes.
pub fn decompose(net: &Network, max_width: usize) -> Option<TreeDecomposition> {
    let adj = net.simple_adjacency();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let consider = |best: &mut Option<(usize, Vec<usize>)>, order: Vec<usize>| {
        let w = order_width(&adj, &order);
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            *best = Some((w, order));
        }
    };
    if let Some(order) = width_two_order(&adj) {
        consider(&mut best, order);
    }
    consider(&mut best, min_fill_order(&adj));
    if best.as_ref().is_some_and(|(w, _)| *w > 2) {
        if let Some(order) = exact_order(&adj, 14) {
            consider(&mut best, order);
        }
    }
    let (width, order) = best?;
    if width > max_width {
        return None;
    }
    let td = TreeDecomposition::from_elimination_order(&adj, &order);
    debug_assert!(td.validate(net).is_ok());
    Some(td)
}
