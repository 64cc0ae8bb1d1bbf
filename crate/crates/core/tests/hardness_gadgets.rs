//! Source answer ⇔ gadget feasibility for the many-waypoint reductions,
//! plus witness round trips.

mod common;

use rand::Rng;
use waypoint_core::gadgets::random::{random_connected, random_partial_ktree, seeded, EdgeRanges};
use waypoint_core::gadgets::{gadget_eulerian, gadget_tw3, GadgetOutput};
use waypoint_core::graph::{validate_walk, NodeId};
use waypoint_core::oracle::{feasible_exhaustive, Feasibility};
use waypoint_core::treewidth::decompose;

fn pairs(rng: &mut impl Rng, n: usize, k: usize, distinct: bool) -> Vec<(NodeId, NodeId)> {
    if distinct {
        let mut ids: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(ids.as_mut_slice(), rng);
        return ids[..2 * k]
            .chunks(2)
            .map(|c| (NodeId(c[0]), NodeId(c[1])))
            .collect();
    }
    (0..k)
        .map(|_| {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            (NodeId(a), NodeId(b))
        })
        .collect()
}

/// Returns the gadget verdict, or `None` when the oracle gave up.
fn check(g: &GadgetOutput, label: &str) -> Option<bool> {
    let source = g.source.solve();
    let gadget = match feasible_exhaustive(&g.instance, common::oracle_limits()) {
        Feasibility::Yes(w) => {
            assert!(
                g.source.check(&g.walk_to_witness(&w).unwrap()),
                "{label}: walk maps to a non-witness"
            );
            true
        }
        Feasibility::No => false,
        Feasibility::BudgetExceeded => return None,
    };
    assert_eq!(source.is_some(), gadget, "{label}: source vs gadget");
    if let Some(w) = source {
        let walk = g.witness_to_walk(&w).unwrap();
        assert!(
            validate_walk(&g.instance, &walk).unwrap().is_ok(),
            "{label}: mapped witness invalid"
        );
    }
    Some(gadget)
}

#[test]
fn treewidth_three_gadget_matches_disjoint_paths() {
    let (mut yes, mut done) = (0, 0);
    for seed in 0..300 {
        let mut rng = seeded(seed);
        let n = rng.gen_range(4..=7);
        let net = random_partial_ktree(&mut rng, n, 2, 0.5, EdgeRanges::unit());
        let k = 2;
        let g = gadget_tw3(&net, &pairs(&mut rng, n, k, true)).unwrap();
        assert!(
            decompose(&g.instance.network, 3).is_some(),
            "seed {seed}: width above 3"
        );
        if let Some(v) = check(&g, &format!("tw3 seed {seed}")) {
            done += 1;
            yes += v as usize;
        }
    }
    assert!(done >= 270, "oracle finished only {done} of 300");
    assert!(yes > 0 && yes < done, "one-sided sample: {yes} of {done}");
}

#[test]
fn eulerian_gadget_matches_disjoint_paths() {
    let (mut yes, mut done) = (0, 0);
    for seed in 0..300 {
        let mut rng = seeded(seed);
        let n = rng.gen_range(3..=6);
        let extra = rng.gen_range(0..=4);
        let supply = random_connected(&mut rng, n, extra, EdgeRanges::unit());
        let k = rng.gen_range(1..=3);
        let g = gadget_eulerian(&supply, &pairs(&mut rng, n, k, false)).unwrap();
        if let Some(v) = check(&g, &format!("eulerian seed {seed}")) {
            done += 1;
            yes += v as usize;
        }
    }
    assert!(done >= 270, "oracle finished only {done} of 300");
    assert!(yes > 0 && yes < done, "one-sided sample: {yes} of {done}");
}
