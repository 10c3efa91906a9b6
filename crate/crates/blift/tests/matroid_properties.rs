//! Matroid-engine invariants: duality, rank axioms, minor algebra, sums,
//! connectivity and the reduction identities linking graphs and matroids.

use blift::bits::Bits32;
use blift::graph::{
    complete_graph, cycle_graph, enumerate::EnumConstraints,
    enumerate::MultigraphEnumerator, k2n, Multigraph,
};
use blift::lift::lift_matroid;
use blift::matroid::{catalog, iso, uniform, Connectivity, Matroid};
use blift::ElemSet;

fn samples() -> Vec<Matroid> {
    vec![
        uniform(0, 3).unwrap(),
        uniform(2, 4).unwrap(),
        uniform(2, 5).unwrap(),
        uniform(3, 3).unwrap(),
        catalog::get("F7").unwrap(),
        catalog::get("MK4").unwrap(),
        catalog::get("whirl(3)").unwrap(),
        complete_graph(4).cycle_matroid().unwrap(),
        k2n(4).cycle_matroid().unwrap(),
    ]
}

#[test]
fn dual_is_an_involution() {
    for m in samples() {
        assert_eq!(m.dual().dual(), m, "dual^2 != id on {m:?}");
        assert_eq!(m.dual().rank(), m.ground_size() - m.rank());
    }
}

#[test]
fn rank_is_submodular_with_unit_increase() {
    // Exhaustive subset pairs on matroids with up to 8 elements.
    for m in [
        uniform(2, 5).unwrap(),
        catalog::get("F7").unwrap(),
        catalog::get("MK4").unwrap(),
        cycle_graph(4).cycle_matroid().unwrap(),
    ] {
        let n = m.ground_size();
        assert!(n <= 8);
        let full = 1u32 << n;
        for x in 0..full {
            let rx = m.rank_of(Bits32(x));
            for e in 0..n {
                if x & (1 << e) == 0 {
                    let rxe = m.rank_of(Bits32(x).with(e));
                    assert!(rxe == rx || rxe == rx + 1, "unit increase fails");
                }
            }
        }
        for x in 0..full {
            for y in 0..full {
                let (x, y) = (Bits32(x), Bits32(y));
                let lhs = m.rank_of(x.union(y)) + m.rank_of(x.intersection(y));
                let rhs = m.rank_of(x) + m.rank_of(y);
                assert!(lhs <= rhs, "submodularity fails on {x} {y} of {m:?}");
            }
        }
    }
}

#[test]
fn minors_commute_exhaustively() {
    // delete-then-contract equals contract-then-delete on disjoint sets.
    for m in [catalog::get("F7").unwrap(), catalog::get("whirl(3)").unwrap()] {
        let n = m.ground_size();
        assert!(n <= 7);
        for d in 0u32..(1 << n) {
            for c in 0u32..(1 << n) {
                if d & c != 0 {
                    continue;
                }
                let (delete, contract) = (Bits32(d), Bits32(c));
                let (a, _) = m.minor(delete, contract).unwrap();
                let (b1, map1) = m.minor(delete, ElemSet::empty()).unwrap();
                let (b, _) = b1.minor(ElemSet::empty(), map1.image(contract)).unwrap();
                let (c1, map2) = m.minor(ElemSet::empty(), contract).unwrap();
                let (c2, _) = c1.minor(map2.image(delete), ElemSet::empty()).unwrap();
                assert_eq!(a, b, "split deletion first differs");
                assert_eq!(a, c2, "split contraction first differs");
            }
        }
    }
}

#[test]
fn two_sum_rank_formula_on_catalog_pairs() {
    let parts = [
        catalog::get("uniform(2,3)").unwrap(),
        catalog::get("uniform(2,4)").unwrap(),
        catalog::get("uniform(1,3)").unwrap(),
        catalog::get("MK4").unwrap(),
        catalog::get("whirl(2)").unwrap(),
    ];
    let mut checked = 0;
    for m1 in &parts {
        for m2 in &parts {
            if m1.ground_size() + m2.ground_size() - 2 > 12 {
                continue;
            }
            for e1 in 0..m1.ground_size() {
                for e2 in 0..m2.ground_size() {
                    if let Ok(s) = m1.two_sum(e1, m2, e2) {
                        assert_eq!(s.rank(), m1.rank() + m2.rank() - 1);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn cosimplify_commutes_with_cycle_matroid() {
    // co(M(g)) is isomorphic to M(co(g)) over all canonical graphs with
    // n <= 5, m <= 8.
    for n in 1..=5usize {
        for m in 0..=8usize {
            let graphs: Vec<Multigraph> =
                MultigraphEnumerator::new(n, m, EnumConstraints::none())
                    .unwrap()
                    .collect();
            for g in graphs {
                let (co_g, _) = g.cosimplify();
                let lhs = g.cycle_matroid().unwrap().cosimplify().0;
                let rhs = co_g.cycle_matroid().unwrap();
                assert!(
                    iso::find_isomorphism(&lhs, &rhs).is_some(),
                    "co/M mismatch on {g:?}: {lhs:?} vs {rhs:?}"
                );
            }
        }
    }
}

#[test]
fn series_classes_of_lift_match_graph() {
    // Over connected graphs with at least two lift circuits (corank >= 2),
    // the non-trivial series classes of L(g) and of g coincide.
    for n in 1..=5usize {
        for m in 0..=7usize {
            let graphs: Vec<Multigraph> =
                MultigraphEnumerator::new(n, m, EnumConstraints::none())
                    .unwrap()
                    .filter(|g| g.is_connected())
                    .collect();
            for g in graphs {
                let l = lift_matroid(&g).unwrap();
                if l.corank() < 2 {
                    continue;
                }
                let graph_classes = g.edge_classes().series;
                let matroid_classes = l.element_classes().series;
                assert_eq!(
                    graph_classes, matroid_classes,
                    "series classes differ on {g:?}"
                );
            }
        }
    }
}

#[test]
fn three_connected_matroids_have_no_small_separators() {
    for m in samples() {
        if m.ground_size() < 4 {
            continue;
        }
        if m.connectivity_order().unwrap() == Connectivity::ThreeConnected {
            let classes = m.element_classes();
            assert!(classes.loops.is_empty());
            assert!(classes.coloops.is_empty());
            assert!(classes.parallel.is_empty());
            assert!(classes.series.is_empty());
        }
    }
}

#[test]
fn corank_counts_circuits_threshold() {
    // A matroid has at least two circuits exactly when its corank is >= 2.
    for m in samples() {
        assert_eq!(m.circuits().len() >= 2, m.corank() >= 2, "{m:?}");
    }
}

#[test]
fn catalog_self_tests() {
    let f7 = catalog::get("F7").unwrap();
    let f7d = catalog::get("F7dual").unwrap();
    assert!(iso::find_isomorphism(&f7.dual(), &f7d).is_some());
    for k in 2..=4 {
        let wheel = catalog::get(&format!("wheel({k})")).unwrap();
        assert_eq!(wheel, blift::graph::wheel_graph(k).cycle_matroid().unwrap());
    }
    let w2 = catalog::get("whirl(2)").unwrap();
    assert!(iso::find_isomorphism(&w2, &uniform(2, 4).unwrap()).is_some());
    let dual_k5 = catalog::get("dualK5").unwrap();
    assert_eq!(
        dual_k5,
        complete_graph(5).cycle_matroid().unwrap().dual()
    );
}

#[test]
fn matroid_text_rejects_rank_mismatch_and_gaps() {
    let good = "MATROID 3 2\nCIRCUITS 1\n0 1 2\n";
    assert!(blift::matroid::parse_matroid(good, "t").is_ok());
    let bad_rank = "MATROID 3 1\nCIRCUITS 1\n0 1 2\n";
    assert!(blift::matroid::parse_matroid(bad_rank, "t").is_err());
    let bad_order = "MATROID 3 2\nCIRCUITS 1\n2 1 0\n";
    assert!(blift::matroid::parse_matroid(bad_order, "t").is_err());
}
