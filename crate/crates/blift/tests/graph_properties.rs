//! Graph-side invariants: cycle structure, si/co reductions, Whitney
//! switches and canonical enumeration.

use blift::bits::Bits32;
use blift::graph::{
    complete_graph, cycle_graph, enumerate::EnumConstraints,
    enumerate::MultigraphEnumerator, k2n, labeled_two_isomorphic, path_graph,
    unlabeled_two_isomorphic, Multigraph,
};
use proptest::prelude::*;

fn all_graphs(n: usize, m: usize) -> Vec<Multigraph> {
    MultigraphEnumerator::new(n, m, EnumConstraints::none())
        .unwrap()
        .collect()
}

#[test]
fn cycles_have_cyclomatic_one_and_minimal() {
    for n in 1..=4 {
        for m in 0..=6 {
            for g in all_graphs(n, m) {
                for c in g.cycles() {
                    assert_eq!(g.cyclomatic(c.edges), 1, "{g:?} cycle {:?}", c.edges);
                    for e in c.edges.iter() {
                        assert_eq!(g.cyclomatic(c.edges.without(e)), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn simplify_and_cosimplify_are_idempotent() {
    for n in 1..=4 {
        for m in 0..=6 {
            for g in all_graphs(n, m) {
                let (s, _) = g.simplify();
                assert_eq!(s.simplify().0, s, "simplify not idempotent on {g:?}");
                let (c, _) = g.cosimplify();
                assert_eq!(c.cosimplify().0, c, "cosimplify not idempotent on {g:?}");
            }
        }
    }
}

#[test]
fn cosimplified_graphs_have_no_cut_edges() {
    // For graphs with at least one cycle in each edge-bearing component
    // (every edge on a cycle), co(G) ends with no cut edges.
    for n in 1..=4 {
        for m in 1..=6 {
            let graphs: Vec<Multigraph> =
                MultigraphEnumerator::new(n, m, EnumConstraints::on_cycles())
                    .unwrap()
                    .collect();
            for g in graphs {
                let (c, _) = g.cosimplify();
                assert!(c.cut_edges().is_empty(), "co({g:?}) still has cut edges");
            }
        }
    }
}

#[test]
fn whitney_switch_preserves_cycles_on_book_graphs() {
    // Families of two blocks glued on a 2-vertex cut, switched at the cut.
    for k in 2..=4usize {
        // Two parallel paths of length 2 plus a k-fan through the cut.
        let mut edges = vec![(0, 2), (1, 2)];
        for i in 0..k {
            edges.push((0, 3 + i));
            edges.push((1, 3 + i));
        }
        let g = Multigraph::new(3 + k, edges).unwrap();
        let part1 = Bits32::from_iter([0, 1]);
        let h = g.whitney_switch(part1, 0, 1).unwrap();
        assert!(labeled_two_isomorphic(&g, &h).unwrap());
        assert_eq!(
            g.cycle_matroid().unwrap(),
            h.cycle_matroid().unwrap(),
            "labeled cycle matroids must be equal after a switch"
        );
    }
}

#[test]
fn unlabeled_two_isomorphism_examples() {
    let k4 = complete_graph(4);
    let relabeled =
        Multigraph::new(4, vec![(2, 3), (1, 2), (0, 3), (1, 3), (0, 2), (0, 1)]).unwrap();
    assert!(unlabeled_two_isomorphic(&k4, &relabeled).unwrap());

    let c4 = cycle_graph(4);
    let p4 = path_graph(4);
    assert!(!unlabeled_two_isomorphic(&c4, &p4).unwrap());

    // Two different trees with the same edge count: both cycle matroids free.
    let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
    let path = path_graph(3);
    assert!(unlabeled_two_isomorphic(&star, &path).unwrap());
}

#[test]
fn k2n_simplifies_to_k2() {
    let (s, map) = k2n(4).simplify();
    assert_eq!(s.edge_count(), 1);
    assert_eq!(map.get(0), Some(0));
    assert!((1..4).all(|i| map.get(i).is_none()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Whitney switching at a valid 2-cut preserves the labeled cycle family.
    #[test]
    fn whitney_switch_preserves_cycle_family(k in 1usize..4, l in 1usize..4) {
        // Theta-ish: two bundles of internally disjoint 2-paths between
        // vertices 0 and 1; part1 = first bundle.
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((0, 2 + i));
            edges.push((1, 2 + i));
        }
        for j in 0..l {
            edges.push((0, 2 + k + j));
            edges.push((1, 2 + k + j));
        }
        let g = Multigraph::new(2 + k + l, edges).unwrap();
        let part1 = Bits32::from_iter(0..2 * k);
        let h = g.whitney_switch(part1, 0, 1).unwrap();
        prop_assert!(labeled_two_isomorphic(&g, &h).unwrap());
    }

    /// Minor label maps stay dense and order-preserving.
    #[test]
    fn minor_label_maps_are_dense(delete_bits in 0u32..64, contract_bits in 0u32..64) {
        let g = complete_graph(4);
        let delete = Bits32(delete_bits & 0x3f);
        let contract = Bits32(contract_bits & 0x3f).difference(delete);
        let (h, map) = g.minor(delete, contract).unwrap();
        let survivors: Vec<usize> = (0..6).filter_map(|e| map.get(e)).collect();
        prop_assert_eq!(survivors.len(), h.edge_count());
        let mut sorted = survivors.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(&survivors, &sorted);
        prop_assert_eq!(survivors.last().copied().map(|x| x + 1).unwrap_or(0), h.edge_count());
    }
}
