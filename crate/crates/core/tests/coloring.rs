use fum::coloring::{
    compute_xset, induced_shape, is_proper, is_star_forest, verify_extension, verify_fum, Coloring,
    FaceScope, PathError, PrecoloredPath, XMode,
};
use fum::families;
use fum::instances::random::{random_plane_graph, RandomModel};
use fum::plane_graph::{PlaneGraph, Vertex};
use proptest::prelude::*;

fn colors(c: &[u32]) -> Coloring {
    Coloring::new(c.to_vec()).unwrap()
}

#[test]
fn bipartite_square_fails_on_both_faces() {
    let g = families::cycle(4);
    let report = verify_fum(&g, &colors(&[1, 2, 1, 2]), FaceScope::All).unwrap();
    assert!(!report.passed());
    assert_eq!(report.failing_faces().count(), 2);
    assert!(report.conflict.is_none());
    let internal = verify_fum(&g, &colors(&[1, 2, 1, 2]), FaceScope::Internal).unwrap();
    assert_eq!(internal.faces.len(), 1);
    assert!(verify_fum(&g, &colors(&[1, 2, 1, 3]), FaceScope::All)
        .unwrap()
        .passed());
}

#[test]
fn improper_colorings_are_caught() {
    let g = families::triangle();
    let report = verify_fum(&g, &colors(&[1, 1, 2]), FaceScope::All).unwrap();
    assert_eq!(report.conflict, Some((0, 1)));
    assert!(!report.passed());
    assert!(!is_proper(&g, &colors(&[1, 1, 2])).unwrap());
    assert!(verify_fum(&g, &colors(&[1, 2]), FaceScope::All).is_err());
    assert!(Coloring::new(vec![0, 1]).is_err());
}

#[test]
fn shared_outer_face_counts_attaining_vertices_once() {
    let g = families::disjoint_union(&families::triangle(), &families::triangle());
    let report = verify_fum(&g, &colors(&[1, 2, 3, 1, 2, 3]), FaceScope::All).unwrap();
    assert!(report.shared_outer_face);
    assert!(!report.passed());
    assert!(verify_fum(&g, &colors(&[1, 2, 4, 1, 2, 3]), FaceScope::All)
        .unwrap()
        .passed());
}

#[test]
fn extension_contract() {
    let g = families::wheel(4);
    let p = PrecoloredPath::new(vec![(0, 1), (1, 2)]).unwrap();
    let good = colors(&[1, 2, 1, 3, 4]);
    assert!(verify_extension(&g, &p, &good, 4).unwrap().passed());
    let changed = colors(&[3, 2, 3, 1, 4]);
    assert_eq!(
        verify_extension(&g, &p, &changed, 4)
            .unwrap()
            .precoloring_mismatches,
        vec![0]
    );
    let outer_four = colors(&[1, 2, 1, 4, 3]);
    assert_eq!(
        verify_extension(&g, &p, &outer_four, 4)
            .unwrap()
            .outer_reserved,
        vec![3]
    );
}

#[test]
fn precolored_path_validation() {
    assert!(matches!(
        PrecoloredPath::new(vec![(0, 1), (1, 2), (2, 3)]),
        Err(PathError::TooLong(3))
    ));
    assert!(matches!(
        PrecoloredPath::new(vec![(0, 4)]),
        Err(PathError::ColorOutOfRange { .. })
    ));
    let g = families::wheel(4);
    assert!(matches!(
        PrecoloredPath::new(vec![(4, 1)]).unwrap().check_on(&g),
        Err(PathError::NotOnOuterFace(4))
    ));
    assert!(matches!(
        PrecoloredPath::new(vec![(0, 1), (2, 2)])
            .unwrap()
            .check_on(&g),
        Err(PathError::NotAnOuterEdge(0, 2))
    ));
    assert!(matches!(
        PrecoloredPath::new(vec![(0, 1), (1, 1)])
            .unwrap()
            .check_on(&g),
        Err(PathError::SameColor(0, 1))
    ));
}

#[test]
fn xset_examples() {
    let x = compute_xset(
        &families::wheel(6),
        &PrecoloredPath::empty(),
        XMode::Theorem,
    );
    assert_eq!(x.members, vec![6]);
    assert!(x.shape.star_forest);
    let oct = compute_xset(
        &families::octahedron(),
        &PrecoloredPath::empty(),
        XMode::Theorem,
    );
    assert_eq!(oct.members.len(), 6);
    assert!(!oct.shape.star_forest && !oct.shape.acyclic);
    let p = PrecoloredPath::new(vec![(0, 1)]).unwrap();
    assert_eq!(
        compute_xset(&families::wheel(6), &p, XMode::Lemma).members,
        vec![0, 6]
    );
}

/// Star forest by definition: every component is a tree with at most one
/// vertex of degree above one.
fn star_forest_oracle(g: &PlaneGraph, s: &[Vertex]) -> bool {
    let inside = |v: Vertex| s.contains(&v);
    let mut seen = vec![false; g.n()];
    for &root in s {
        if seen[root] {
            continue;
        }
        let mut comp = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in g.rotation(comp[i]) {
                if inside(w) && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let degree = |v: Vertex| g.rotation(v).iter().filter(|&&w| inside(w)).count();
        let edges: usize = comp.iter().map(|&v| degree(v)).sum::<usize>() / 2;
        if edges + 1 != comp.len() || comp.iter().filter(|&&v| degree(v) > 1).count() > 1 {
            return false;
        }
    }
    true
}

fn arb_graph_and_subset() -> impl Strategy<Value = (PlaneGraph, Vec<Vertex>)> {
    (
        any::<u64>(),
        1usize..30,
        0.0f64..0.9,
        prop::collection::vec(any::<bool>(), 30),
    )
        .prop_map(|(seed, n, p, mask)| {
            let g = random_plane_graph(seed, n, RandomModel::TriangulationMinusRandomEdges(p));
            let s = (0..g.n()).filter(|&v| mask[v]).collect();
            (g, s)
        })
}

proptest! {
    #[test]
    fn star_forest_matches_oracle((g, s) in arb_graph_and_subset()) {
        prop_assert_eq!(is_star_forest(&g, &s), star_forest_oracle(&g, &s));
        let shape = induced_shape(&g, &s);
        prop_assert!(!shape.star_forest || shape.acyclic);
    }

    #[test]
    fn lemma_xset_contains_theorem_xset(seed in any::<u64>(), n in 3usize..30, pick in any::<prop::sample::Index>()) {
        let g = random_plane_graph(seed, n, RandomModel::TriangulationMinusRandomEdges(0.4));
        let outer = g.outer_vertices();
        let v = outer[pick.index(outer.len())];
        let p = PrecoloredPath::new(vec![(v, 1)]).unwrap();
        let theorem = compute_xset(&g, &p, XMode::Theorem).members;
        let lemma = compute_xset(&g, &p, XMode::Lemma).members;
        prop_assert!(theorem.iter().all(|x| lemma.contains(x)));
        prop_assert!(lemma.iter().all(|&x| g.degree(x) >= 4 || (x == v && g.degree(x) == 3)));
    }
}
