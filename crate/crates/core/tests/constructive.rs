mod common;

use fum::coloring::{verify_fum, verify_lemma_contract, FaceScope, PrecoloredPath};
use fum::constructive::{extend_precoloring, fum_color_star_forest, Case, ConstructError};
use fum::families;
use fum::instances::filter::{apply_filter, HypothesisFilter};
use fum::instances::random::{random_plane_graph, RandomModel};
use fum::plane_graph::{Dart, PlaneGraph};
use fum::solver::{fum_colorable, Limits, Mode, SolveStatus};
use proptest::prelude::*;

fn assert_theorem(g: &PlaneGraph) {
    let out = fum_color_star_forest(g).unwrap_or_else(|e| panic!("{e}\n{:?}", g.rotations()));
    assert!(out.coloring.max_color() <= 4);
    assert!(verify_fum(g, &out.coloring, FaceScope::All)
        .unwrap()
        .passed());
    assert_eq!(
        out.trace.replay(g.n(), &PrecoloredPath::empty()),
        out.coloring.colors()
    );
}

#[test]
fn named_graphs() {
    for g in [
        families::k4(),
        families::cube(),
        families::wheel(7),
        families::star(5),
        families::bowtie(),
        families::c4_with_chord(),
        families::path(6),
        families::disjoint_union(&families::k4(), &families::path(3)),
    ] {
        assert_theorem(&g);
    }
}

#[test]
fn pendant_inside_the_outer_cycle() {
    // As many edges as vertices, yet not a cycle.
    let g = PlaneGraph::new(vec![vec![3], vec![2, 3], vec![1, 3], vec![1, 0, 2]])
        .unwrap()
        .reroot(Dart::new(1, 2))
        .unwrap();
    assert_eq!(g.outer_vertices(), &[1, 2, 3]);
    assert_theorem(&g);
    let p = PrecoloredPath::new(vec![(1, 1), (2, 2)]).unwrap();
    let out = extend_precoloring(&g, &p).unwrap();
    assert!(verify_lemma_contract(&g, &p, &out.coloring)
        .unwrap()
        .passed());
}

#[test]
fn corpus_star_forest_graphs_up_to_six() {
    for g in common::corpus_upto(6)
        .iter()
        .filter(|g| apply_filter(g, HypothesisFilter::StarForestX))
    {
        assert_theorem(g);
    }
}

#[test]
fn agrees_with_solver_on_lemma_instances() {
    // Whenever the constructive extension exists, the solver must find one too.
    for g in common::corpus_upto(5).iter().filter(|g| g.m() > 0) {
        for &v in g.outer_vertices() {
            let p = PrecoloredPath::new(vec![(v, 2)]).unwrap();
            let Ok(out) = extend_precoloring(g, &p) else {
                continue;
            };
            assert!(verify_lemma_contract(g, &p, &out.coloring)
                .unwrap()
                .passed());
            let solved = fum_colorable(g, 4, &Mode::Lemma(p), &Limits::unlimited()).unwrap();
            assert!(matches!(solved.status, SolveStatus::Colorable(_)));
        }
    }
}

#[test]
fn hypothesis_violations_are_reported() {
    let err = fum_color_star_forest(&families::octahedron()).unwrap_err();
    assert!(
        matches!(err, ConstructError::HypothesisViolated { ref members } if members.len() == 6)
    );
    let p = PrecoloredPath::new(vec![(0, 1), (2, 2)]).unwrap();
    assert!(matches!(
        extend_precoloring(&families::cube(), &p),
        Err(ConstructError::InvalidPrecoloring(_))
    ));
}

#[test]
fn traces_name_their_cases() {
    let out = fum_color_star_forest(&families::wheel(5)).unwrap();
    let cases: Vec<Case> = out.trace.cases().collect();
    assert_eq!(cases[0], Case::RemoveOuterVertex);
    assert!(out.trace.to_string().lines().count() == cases.len());
}

#[test]
fn large_instances_do_not_overflow_the_stack() {
    let g = random_plane_graph(11, 2000, RandomModel::StarForestX);
    assert_theorem(&g);
    assert_theorem(&families::path(3000));
    assert_theorem(&families::cycle(3000));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_star_forest_graphs(seed in any::<u64>(), n in 1usize..80) {
        assert_theorem(&random_plane_graph(seed, n, RandomModel::StarForestX));
    }

    #[test]
    fn random_precolorings_extend(seed in any::<u64>(), n in 3usize..40, pick in any::<prop::sample::Index>(), c1 in 1u32..4, c2 in 1u32..4) {
        let g = random_plane_graph(seed, n, RandomModel::StarForestX);
        let outer = g.outer_vertices();
        let v = outer[pick.index(outer.len())];
        let w = g.rotation(v).iter().copied().find(|&w| g.is_outer_edge(v, w));
        let entries = match w {
            Some(w) if c1 != c2 => vec![(v, c1), (w, c2)],
            _ => vec![(v, c1)],
        };
        let p = PrecoloredPath::new(entries).unwrap();
        match extend_precoloring(&g, &p) {
            Ok(out) => prop_assert!(verify_lemma_contract(&g, &p, &out.coloring).unwrap().passed()),
            Err(ConstructError::HypothesisViolated { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
