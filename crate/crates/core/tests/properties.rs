mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use planar_rainbow::coloring::{c_fn, sigma_hk, EdgeColoring};
use planar_rainbow::graph::{
    brute_force_connectivity, connectivity_class, enumerate_cycles, is_separating_cycle,
    ConnectivityOptions,
};
use planar_rainbow::io::{graph_value, parse_graph, to_json_text};
use planar_rainbow::search::{precheck, solve, Budget, SearchProblem, SearchStatus};
use planar_rainbow::verifier::{certify, check_c4_obstructions, check_proper, CertifyOptions};
use planar_rainbow::{build_fn, build_hk, Cycle, FnParams, HkParams, LabeledTriangulation};

fn ops(len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..64, 0..len)
}

fn faces_as_sets(g: &planar_rainbow::PlanarTriangulation) -> BTreeSet<Vec<usize>> {
    g.trace_faces()
        .unwrap()
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            f
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grown_triangulations_satisfy_euler(ops in ops(40)) {
        let g = common::random_triangulation(&ops, 16);
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count(), 3 * n - 6);
        let faces = g.trace_faces().unwrap();
        prop_assert_eq!(faces.len(), 2 * n - 4);
        prop_assert!(faces.iter().all(|f| f.len() == 3));
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn cycle_enumeration_matches_naive(ops in ops(20)) {
        let g = common::random_triangulation(&ops, 10);
        for len in 3..=5 {
            let ours: Vec<Vec<usize>> =
                enumerate_cycles(&g, len).iter().map(|c| c.vertices().to_vec()).collect();
            prop_assert_eq!(ours, common::naive_cycles(&g, len));
        }
    }

    #[test]
    fn separating_triangles_are_the_non_faces(ops in ops(30)) {
        let g = common::random_triangulation(&ops, 14);
        prop_assume!(g.vertex_count() >= 5);
        let faces = faces_as_sets(&g);
        for t in enumerate_cycles(&g, 3) {
            let mut key = t.vertices().to_vec();
            key.sort_unstable();
            prop_assert_eq!(is_separating_cycle(&g, &t).unwrap(), !faces.contains(&key));
        }
    }

    #[test]
    fn connectivity_routes_agree(ops in ops(40)) {
        let g = common::random_triangulation(&ops, 16);
        prop_assume!(g.vertex_count() >= 5);
        let opts = ConnectivityOptions { run_oracle: false, ..ConnectivityOptions::default() };
        let structural = connectivity_class(&g, &opts).unwrap();
        let (oracle, cut) = brute_force_connectivity(&g, 60).unwrap();
        prop_assert_eq!(structural.class, oracle);
        let checked = connectivity_class(&g, &ConnectivityOptions::default()).unwrap();
        prop_assert_eq!(checked.oracle, Some(oracle));
        if let Some(cut) = cut {
            prop_assert_eq!(cut.len(), oracle);
        }
    }

    #[test]
    fn documents_roundtrip(ops in ops(40)) {
        let g = LabeledTriangulation::unlabeled(common::random_triangulation(&ops, 20));
        let text = to_json_text(&graph_value(&g));
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(to_json_text(&graph_value(&back)), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn small_triangulations_never_avoid_rainbow_four_cycles(ops in ops(12)) {
        let g = common::random_triangulation(&ops, 9);
        prop_assume!(g.vertex_count() >= 5);
        prop_assert!(!check_c4_obstructions(&g).is_empty());
        let palette = g.edge_count() as u32;
        let out = solve(&SearchProblem::new(g, palette, [4]).unwrap());
        prop_assert_eq!(out.status, SearchStatus::Unsat);
    }

    #[test]
    fn symmetry_breaking_keeps_verdicts(ops in ops(10), palette in 3u32..7, forbid in 0usize..4) {
        let g = common::random_triangulation(&ops, 8);
        let sets: [&[usize]; 4] = [&[4], &[5], &[4, 5], &[5, 6]];
        let forbid: Vec<usize> =
            sets[forbid].iter().copied().filter(|&l| l <= g.vertex_count()).collect();
        let p = SearchProblem::new(g.clone(), palette, forbid.clone()).unwrap();
        let with = solve(&p);
        let without = solve(&p.clone().with_symmetry_breaking(false));
        prop_assert_eq!(with.status, without.status);
        for w in [&with.witness, &without.witness].into_iter().flatten() {
            let report = certify(&g, w, &forbid.iter().copied().collect(), &CertifyOptions::default()).unwrap();
            prop_assert!(report.claim("proper").unwrap());
            for &l in &forbid {
                prop_assert_eq!(report.rainbow[&l].count, 0);
            }
        }
    }

    #[test]
    fn precheck_agrees_with_search(ops in ops(10), palette in 1u32..9, forbid in 0usize..5) {
        let g = common::random_triangulation(&ops, 8);
        let sets: [&[usize]; 5] = [&[3], &[4], &[5], &[4, 6], &[7]];
        let forbid: Vec<usize> =
            sets[forbid].iter().copied().filter(|&l| l <= g.vertex_count()).collect();
        let p = SearchProblem::new(g, palette, forbid).unwrap();
        if let Some(pre) = precheck(&p) {
            prop_assert_eq!(pre.status, solve(&p).status);
        }
    }

    #[test]
    fn search_is_deterministic(ops in ops(10), palette in 4u32..8) {
        let g = common::random_triangulation(&ops, 8);
        prop_assume!(g.vertex_count() >= 5);
        let p = SearchProblem::new(g, palette, [5]).unwrap();
        prop_assert!(solve(&p).same_result(&solve(&p)));
    }

    #[test]
    fn certify_is_monotone_in_lengths(n in 5usize..40, extra in prop::collection::btree_set(3usize..9, 1..4)) {
        let f = build_fn(FnParams::new(n).unwrap()).unwrap();
        let c = c_fn(&f).unwrap();
        let all: BTreeSet<usize> = extra.iter().copied().chain([5, 6]).collect();
        let big = certify(f.graph(), &c, &all, &CertifyOptions::default()).unwrap();
        for &l in &all {
            let one = certify(f.graph(), &c, &BTreeSet::from([l]), &CertifyOptions::default()).unwrap();
            prop_assert_eq!(one.rainbow[&l].count, big.rainbow[&l].count);
            prop_assert_eq!(one.claim(&format!("no_rainbow_c{l}")), big.claim(&format!("no_rainbow_c{l}")));
        }
    }

    #[test]
    fn cycles_canonicalize_under_rotation_and_reflection(shift in 0usize..6, flip: bool) {
        let base = vec![3, 1, 4, 0, 5, 2];
        let mut v = base.clone();
        v.rotate_left(shift);
        if flip {
            v.reverse();
        }
        prop_assert_eq!(Cycle::new(v), Cycle::new(base));
    }
}

#[test]
fn constructions_are_triangulations() {
    for k in 5..=12 {
        let h = build_hk(HkParams::new(k).unwrap()).unwrap();
        let g = h.graph();
        let n = k * k - 3 * k + 2;
        assert_eq!(g.vertex_count(), n);
        assert_eq!(g.edge_count(), 3 * n - 6);
        let faces = g.trace_faces().unwrap();
        assert_eq!(faces.len(), 2 * n - 4);
        let s = sigma_hk(&h).unwrap();
        assert_eq!(s.len(), g.edge_count());
        assert!(check_proper(g, &s).unwrap().is_empty());
        assert!(s.iter().all(|(_, c)| (1..=k as u32 + 2).contains(&c)));
    }
    for n in 3..=60 {
        let f = build_fn(FnParams::new(n).unwrap()).unwrap();
        let g = f.graph();
        assert_eq!(g.edge_count(), 3 * n - 6, "n={n}");
        assert_eq!(g.trace_faces().unwrap().len(), 2 * n - 4);
        let c = c_fn(&f).unwrap();
        assert_eq!(c.len(), g.edge_count());
        assert!(check_proper(g, &c).unwrap().is_empty(), "n={n}");
        assert!(c.colors_used() <= 6);
    }
}

#[test]
fn labeled_constructions_roundtrip() {
    for k in [5, 8] {
        let h = build_hk(HkParams::new(k).unwrap()).unwrap();
        assert_eq!(parse_graph(&to_json_text(&graph_value(&h))).unwrap(), h);
    }
    for n in [3, 10, 11] {
        let f = build_fn(FnParams::new(n).unwrap()).unwrap();
        assert_eq!(parse_graph(&to_json_text(&graph_value(&f))).unwrap(), f);
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let h = build_hk(HkParams::new(6).unwrap()).unwrap().into_graph();
    let p = SearchProblem::new(h, 8, [4]).unwrap().with_budget(Budget {
        nodes: 5,
        seconds: 300,
    });
    let out = solve(&p);
    assert_eq!(out.status, SearchStatus::BudgetExceeded);
    assert!(out.witness.is_none());
}

#[test]
fn foreign_coloring_is_rejected() {
    let f = build_fn(FnParams::new(8).unwrap()).unwrap();
    let mut c = EdgeColoring::new(6);
    for (e, col) in c_fn(&f).unwrap().iter().skip(1) {
        c.set(e, col);
    }
    assert!(certify(
        f.graph(),
        &c,
        &BTreeSet::from([5]),
        &CertifyOptions::default()
    )
    .is_err());
}
