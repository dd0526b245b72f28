mod common;

use std::collections::BTreeMap;

use fum::coloring::{verify_fum, verify_lemma_contract, Color, FaceScope, PrecoloredPath};
use fum::families;
use fum::instances::random::{random_plane_graph, RandomModel};
use fum::plane_graph::PlaneGraph;
use fum::solver::{
    chi_fum, chi_fum_ordered, fum_colorable, search_order, ChiValue, Limits, Mode, SolveStatus,
    SolverError,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn chi(g: &PlaneGraph) -> Color {
    match chi_fum(g, 8, &Limits::unlimited()).unwrap().value {
        ChiValue::Exact { value, .. } => value,
        other => panic!("no exact value: {other:?}"),
    }
}

/// Faces as vertex sequences, traced directly from the rotations.
fn naive_faces(g: &PlaneGraph) -> Vec<Vec<usize>> {
    let rot = g.rotations();
    let mut used: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for i in 0..rot[u].len() {
            if used[u][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut j) = (u, i);
            while !used[a][j] {
                used[a][j] = true;
                face.push(a);
                let b = rot[a][j];
                let back = rot[b].iter().position(|&x| x == a).unwrap();
                j = (back + 1) % rot[b].len();
                a = b;
            }
            faces.push(face);
        }
    }
    faces
}

fn naive_is_fum(g: &PlaneGraph, faces: &[Vec<usize>], colors: &[Color]) -> bool {
    if g.edges().any(|(u, v)| colors[u] == colors[v]) {
        return false;
    }
    faces.iter().all(|face| {
        let mut vs = face.clone();
        vs.sort_unstable();
        vs.dedup();
        let max = vs.iter().map(|&v| colors[v]).max().unwrap();
        vs.iter().filter(|&&v| colors[v] == max).count() == 1
    })
}

/// Smallest k admitting a FUM-coloring, by trying every assignment. Only
/// for connected graphs with at least one edge (a lone vertex has no walk).
fn brute_force_chi(g: &PlaneGraph) -> Color {
    let faces = naive_faces(g);
    let n = g.n();
    for k in 1..=6 {
        let mut colors = vec![1; n];
        loop {
            if naive_is_fum(g, &faces, &colors) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    panic!("no FUM-coloring with six colors");
}

#[test]
fn solver_matches_brute_force_on_small_corpus() {
    for g in common::corpus_upto(6).iter().filter(|g| g.m() > 0) {
        assert_eq!(chi(g), brute_force_chi(g), "{:?}", g.rotations());
    }
}

fn chromatic_number(g: &PlaneGraph) -> Color {
    let n = g.n();
    (1..=4)
        .find(|&k| {
            let mut colors = vec![1; n];
            loop {
                if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                    return true;
                }
                let mut i = 0;
                while i < n && colors[i] == k {
                    colors[i] = 1;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                colors[i] += 1;
            }
        })
        .expect("planar graphs on seven vertices are 4-colorable")
}

#[test]
fn corpus_wide_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in common::corpus() {
        let value = chi(&g);
        assert!(value >= chromatic_number(&g));
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        match chi_fum_ordered(&g, 8, &Limits::unlimited(), Some(&order))
            .unwrap()
            .value
        {
            ChiValue::Exact { value: v, .. } => assert_eq!(v, value),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn chi_distribution_over_corpus() {
    let mut hist: BTreeMap<(usize, Color), usize> = BTreeMap::new();
    for g in common::corpus() {
        *hist.entry((g.n(), chi(&g))).or_default() += 1;
    }
    let expected: BTreeMap<(usize, Color), usize> = [
        ((1, 1), 1),
        ((2, 2), 1),
        ((3, 2), 1),
        ((3, 3), 1),
        ((4, 2), 1),
        ((4, 3), 4),
        ((4, 4), 1),
        ((5, 2), 1),
        ((5, 3), 19),
        ((5, 4), 5),
        ((6, 2), 1),
        ((6, 3), 121),
        ((6, 4), 57),
        ((7, 2), 1),
        ((7, 3), 1049),
        ((7, 4), 964),
    ]
    .into_iter()
    .collect();
    assert_eq!(hist, expected);
}

#[test]
fn named_graph_values() {
    assert_eq!(chi(&families::path(1)), 1);
    assert_eq!(chi(&families::path(2)), 2);
    for n in 3..=8 {
        assert_eq!(chi(&families::cycle(n)), 3, "C{n}");
    }
    assert_eq!(chi(&families::k4()), 4);
    for leaves in 1..=6 {
        assert_eq!(chi(&families::star(leaves)), 2, "star with {leaves} leaves");
    }
    for k in 3..=7 {
        assert_eq!(chi(&families::wheel(k)), 4, "wheel {k}");
    }
    assert_eq!(chi(&families::octahedron()), 3);
    assert_eq!(chi(&families::cube()), 3);
    assert_eq!(chi(&families::bowtie()), 3);
    assert_eq!(chi(&families::c4_with_chord()), 3);
    assert_eq!(chi(&families::empty(0)), 0);
    // Isolated vertices share the outer face, so one of them must stand out.
    assert_eq!(chi(&families::empty(3)), 2);
}

#[test]
fn trees_other_than_stars_need_three_colors() {
    // Two colors force the bipartition, and the single face sees every vertex.
    for n in 4..=8 {
        assert_eq!(chi(&families::path(n)), 3, "P{n}");
    }
    for g in common::corpus_upto(7)
        .iter()
        .filter(|g| g.m() + 1 == g.n() && g.n() >= 2)
    {
        let star = g.max_degree() + 1 == g.n();
        assert_eq!(chi(g), if star { 2 } else { 3 });
    }
}

#[test]
fn zero_budget_is_rejected() {
    assert!(matches!(
        chi_fum(&families::k4(), 0, &Limits::default()),
        Err(SolverError::ZeroBudget)
    ));
}

#[test]
fn node_limit_reports_unknown() {
    let g = random_plane_graph(5, 40, RandomModel::Triangulation);
    let limits = Limits {
        max_nodes: 10,
        max_time: None,
    };
    assert!(matches!(
        chi_fum(&g, 4, &limits).unwrap().value,
        ChiValue::Unknown { .. }
    ));
    let r = fum_colorable(&g, 4, &Mode::AllFaces, &limits).unwrap();
    assert_eq!(r.status, SolveStatus::Timeout);
}

#[test]
fn lemma_mode_witnesses_meet_the_contract() {
    for g in common::corpus_upto(5).iter().filter(|g| g.m() > 0) {
        let outer = g.outer_vertices().to_vec();
        for &v in &outer {
            for c in 1..=3 {
                let p = PrecoloredPath::new(vec![(v, c)]).unwrap();
                let r = fum_colorable(g, 4, &Mode::Lemma(p.clone()), &Limits::unlimited()).unwrap();
                if let SolveStatus::Colorable(w) = r.status {
                    assert!(verify_lemma_contract(g, &p, &w).unwrap().passed());
                }
            }
        }
    }
}

#[test]
fn search_order_is_a_permutation_with_the_path_first() {
    let g = families::cube();
    let p = PrecoloredPath::new(vec![(2, 1), (3, 2)]).unwrap();
    let order = search_order(&g, &Mode::Lemma(p));
    assert_eq!(&order[..2], &[2, 3]);
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..8).collect::<Vec<_>>());
}

fn arb_graph() -> impl Strategy<Value = PlaneGraph> {
    (any::<u64>(), 3usize..11, 0usize..3).prop_map(|(seed, n, model)| {
        let model = match model {
            0 => RandomModel::Triangulation,
            1 => RandomModel::TriangulationMinusRandomEdges(0.5),
            _ => RandomModel::StarForestX,
        };
        random_plane_graph(seed, n, model)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_verify_and_chi_is_tight(g in arb_graph()) {
        let r = chi_fum(&g, 6, &Limits::unlimited()).unwrap();
        let ChiValue::Exact { value, witness } = r.value else { panic!("no value") };
        prop_assert!(verify_fum(&g, &witness, FaceScope::All).unwrap().passed());
        prop_assert!(witness.max_color() <= value);
        let below = fum_colorable(&g, value - 1, &Mode::AllFaces, &Limits::unlimited()).unwrap();
        prop_assert_eq!(below.status, SolveStatus::NotColorable);
        let above = fum_colorable(&g, value + 1, &Mode::AllFaces, &Limits::unlimited()).unwrap();
        prop_assert!(matches!(above.status, SolveStatus::Colorable(_)));
    }

    #[test]
    fn vertex_order_does_not_change_chi(g in arb_graph(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = chi_fum(&g, 6, &Limits::unlimited()).unwrap().value;
        let b = chi_fum_ordered(&g, 6, &Limits::unlimited(), Some(&order)).unwrap().value;
        let value = |v: &ChiValue| match v { ChiValue::Exact { value, .. } => *value, _ => 0 };
        prop_assert_eq!(value(&a), value(&b));
    }
}
