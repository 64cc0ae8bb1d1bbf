//! Elimination orderings on simple undirected graphs given as adjacency
//! lists over `0..n`.

use std::collections::BTreeSet;

fn to_sets(adj: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    adj.iter()
        .enumerate()
        .map(|(v, list)| list.iter().copied().filter(|&u| u != v).collect())
        .collect()
}

fn eliminate(sets: &mut [BTreeSet<usize>], alive: &mut [bool], v: usize) {
    let nbrs: Vec<usize> = sets[v].iter().copied().collect();
    for (i, &a) in nbrs.iter().enumerate() {
        sets[a].remove(&v);
        for &b in &nbrs[i + 1..] {
            sets[a].insert(b);
            sets[b].insert(a);
        }
    }
    sets[v].clear();
    alive[v] = false;
}

/// Induced width of an elimination ordering: the largest number of
/// not-yet-eliminated neighbours any node has at its elimination time.
pub fn order_width(adj: &[Vec<usize>], order: &[usize]) -> usize {
    let mut sets = to_sets(adj);
    let mut alive = vec![true; adj.len()];
    let mut width = 0;
    for &v in order {
        width = width.max(sets[v].len());
        eliminate(&mut sets, &mut alive, v);
    }
    width
}

/// Series-parallel style reduction: repeatedly delete a node of degree at
/// most one or bypass a node of degree two. Returns the elimination order
/// when the graph reduces to nothing, which happens exactly when its
/// treewidth is at most two.
pub fn width_two_order(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut sets = to_sets(adj);
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).rev().collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || sets[v].len() > 2 {
            continue;
        }
        let nbrs: Vec<usize> = sets[v].iter().copied().collect();
        eliminate(&mut sets, &mut alive, v);
        order.push(v);
        for u in nbrs {
            if sets[u].len() <= 2 {
                stack.push(u);
            }
        }
    }
    if order.len() == n {
        Some(order)
    } else {
        None
    }
}

/// Greedy minimum fill-in ordering; ties go to the smaller degree and then
/// the smaller index.
pub fn min_fill_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut sets = to_sets(adj);
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let nbrs: Vec<usize> = sets[v].iter().copied().collect();
            let mut fill = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if !sets[a].contains(&b) {
                        fill += 1;
                    }
                }
            }
            let key = (fill, nbrs.len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.expect("alive node remains").2;
        eliminate(&mut sets, &mut alive, v);
        order.push(v);
    }
    order
}

/// Optimal elimination ordering by dynamic programming over node subsets.
/// Only intended for small graphs; returns `None` above `max_nodes`.
pub fn exact_order(adj: &[Vec<usize>], max_nodes: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if n > max_nodes || n > 20 {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let masks: Vec<u32> = adj
        .iter()
        .enumerate()
        .map(|(v, list)| {
            list.iter()
                .filter(|&&u| u != v)
                .fold(0u32, |m, &u| m | (1 << u))
        })
        .collect();
    // q(s, v): nodes outside s ∪ {v} reachable from v through s
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut out = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = masks[x] & !seen;
            seen |= nb;
            out |= nb & !s;
            frontier |= nb & s;
        }
        out
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut tw = vec![usize::MAX; size];
    let mut choice = vec![usize::MAX; size];
    tw[0] = 0;
    for s in 1..size as u32 {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q(prev, v).count_ones() as usize);
            if cand < tw[s as usize] {
                tw[s as usize] = cand;
                choice[s as usize] = v;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()
    }

    fn clique(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i).collect())
            .collect()
    }

    #[test]
    fn cycles_reduce_with_width_two() {
        let adj = cycle(5);
        let order = width_two_order(&adj).unwrap();
        assert_eq!(order_width(&adj, &order), 2);
    }

    #[test]
    fn k4_does_not_reduce() {
        assert!(width_two_order(&clique(4)).is_none());
        let order = min_fill_order(&clique(4));
        assert_eq!(order_width(&clique(4), &order), 3);
    }

    #[test]
    fn exact_matches_known_widths() {
        let adj = clique(5);
        assert_eq!(order_width(&adj, &exact_order(&adj, 14).unwrap()), 4);
        let grid: Vec<Vec<usize>> = (0..9)
            .map(|v| {
                let (r, c) = (v / 3, v % 3);
                let mut out = Vec::new();
                if r > 0 {
                    out.push(v - 3)
                }
                if r < 2 {
                    out.push(v + 3)
                }
                if c > 0 {
                    out.push(v - 1)
                }
                if c < 2 {
                    out.push(v + 1)
                }
                out
            })
            .collect();
        assert_eq!(order_width(&grid, &exact_order(&grid, 14).unwrap()), 3);
    }
}
