use crate::error::{Error, Result};
use crate::treewidth::decomposition::TreeDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    /// Sorted ascending.
    pub bag: Vec<usize>,
    pub kind: NiceKind,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition. Nodes are stored so that every child comes
/// before its parent; the root is last and has an empty bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks the shape constraints of every node kind.
    pub fn validate(&self) -> Result<()> {
        let bad =
            |i: usize, msg: &str| Err(Error::InvalidDecomposition(format!("nice node {i}: {msg}")));
        if self.nodes.is_empty() || !self.nodes[self.root()].bag.is_empty() {
            return Err(Error::InvalidDecomposition("root bag must be empty".into()));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return bad(i, "child stored after parent");
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            match node.kind {
                NiceKind::Leaf => {
                    if !node.children.is_empty() || !node.bag.is_empty() {
                        return bad(i, "leaf must be empty and childless");
                    }
                }
                NiceKind::Introduce(v) => {
                    if node.children.len() != 1 {
                        return bad(i, "introduce needs one child");
                    }
                    let mut expect = child_bag(0).clone();
                    if expect.contains(&v) {
                        return bad(i, "introduced node already present");
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if expect != node.bag {
                        return bad(i, "introduce bag mismatch");
                    }
                }
                NiceKind::Forget(v) => {
                    if node.children.len() != 1 {
                        return bad(i, "forget needs one child");
                    }
                    let expect: Vec<usize> =
                        child_bag(0).iter().copied().filter(|&x| x != v).collect();
                    if expect.len() + 1 != child_bag(0).len() || expect != node.bag {
                        return bad(i, "forget bag mismatch");
                    }
                }
                NiceKind::Join => {
                    if node.children.len() != 2
                        || child_bag(0) != &node.bag
                        || child_bag(1) != &node.bag
                    {
                        return bad(i, "join children must carry the same bag");
                    }
                }
            }
        }
        Ok(())
    }
}

struct Builder<'a> {
    td: &'a TreeDecomposition,
    adj: Vec<Vec<usize>>,
    out: Vec<NiceNode>,
}

impl Builder<'_> {
    fn push(&mut self, bag: Vec<usize>, kind: NiceKind, children: Vec<usize>) -> usize {
        self.out.push(NiceNode {
            bag,
            kind,
            children,
        });
        self.out.len() - 1
    }

    /// Moves from node `from` (bag `have`) to bag `want` by forgets, then
    /// introduces.
    fn transition(&mut self, mut from: usize, want: &[usize]) -> usize {
        let mut bag = self.out[from].bag.clone();
        let drop: Vec<usize> = bag.iter().copied().filter(|v| !want.contains(v)).collect();
        for v in drop {
            bag.retain(|&x| x != v);
            from = self.push(bag.clone(), NiceKind::Forget(v), vec![from]);
        }
        let add: Vec<usize> = want.iter().copied().filter(|v| !bag.contains(v)).collect();
        for v in add {
            bag.push(v);
            bag.sort_unstable();
            from = self.push(bag.clone(), NiceKind::Introduce(v), vec![from]);
        }
        from
    }

    fn build(&mut self, b: usize, parent: Option<usize>) -> usize {
        let want = self.td.bags[b].clone();
        let children: Vec<usize> = self.adj[b]
            .iter()
            .copied()
            .filter(|&c| Some(c) != parent)
            .collect();
        let mut tops = Vec::new();
        for c in children {
            let sub = self.build(c, Some(b));
            tops.push(self.transition(sub, &want));
        }
        if tops.is_empty() {
            let leaf = self.push(Vec::new(), NiceKind::Leaf, Vec::new());
            return self.transition(leaf, &want);
        }
        let mut acc = tops[0];
        for &next in &tops[1..] {
            acc = self.push(want.clone(), NiceKind::Join, vec![acc, next]);
        }
        acc
    }
}

/// Converts a decomposition into nice form rooted at bag 0, ending with
/// forgets down to an empty root.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceDecomposition> {
    td.validate_structure()?;
    let mut adj = vec![Vec::new(); td.bags.len()];
    for &(x, y) in &td.edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut bags = td.bags.clone();
    for bag in &mut bags {
        bag.sort_unstable();
        bag.dedup();
    }
    let td = TreeDecomposition {
        bags,
        edges: td.edges.clone(),
    };
    let mut builder = Builder {
        td: &td,
        adj,
        out: Vec::new(),
    };
    let top = builder.build(0, None);
    builder.transition(top, &[]);
    let nice = NiceDecomposition { nodes: builder.out };
    debug_assert!(nice.validate().is_ok());
    Ok(nice)
}
