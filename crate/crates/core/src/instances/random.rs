//! Seeded random plane graphs.
//!
//! Triangulations grow from a triangle by inserting vertices into uniformly
//! chosen internal faces, then get `n` random edge-flip attempts to spread
//! the degree distribution. The outer face is always the triangle `0 1 2`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::induced_shape;
use crate::plane_graph::{PlaneGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RandomModel {
    /// A maximal plane graph.
    Triangulation,
    /// A triangulation with each edge off the outer face deleted with the
    /// given probability, skipping deletions that would disconnect it.
    TriangulationMinusRandomEdges(f64),
    /// A triangulation thinned until the vertices of degree at least 4
    /// induce a star forest.
    StarForestX,
}

fn insert_after(rot: &mut [Vec<Vertex>], v: Vertex, after: Vertex, x: Vertex) {
    let pos = rot[v]
        .iter()
        .position(|&w| w == after)
        .expect("neighbor present");
    rot[v].insert(pos + 1, x);
}

fn remove_neighbor(rot: &mut [Vec<Vertex>], v: Vertex, w: Vertex) {
    rot[v].retain(|&x| x != w);
}

fn successor(rot: &[Vec<Vertex>], v: Vertex, after: Vertex) -> Vertex {
    let r = &rot[v];
    let pos = r
        .iter()
        .position(|&w| w == after)
        .expect("neighbor present");
    r[(pos + 1) % r.len()]
}

fn is_outer_triangle_edge(a: Vertex, b: Vertex) -> bool {
    a < 3 && b < 3
}

fn triangulation(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Vertex>> {
    let mut rot: Vec<Vec<Vertex>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Internal faces as walks a -> b -> c.
    let mut faces: Vec<[Vertex; 3]> = vec![[1, 0, 2]];
    for x in 3..n {
        let [a, b, c] = faces.swap_remove(rng.gen_range(0..faces.len()));
        rot.push(vec![a, c, b]);
        insert_after(&mut rot, b, a, x);
        insert_after(&mut rot, c, b, x);
        insert_after(&mut rot, a, c, x);
        faces.extend([[a, b, x], [b, c, x], [c, a, x]]);
    }
    for _ in 0..n {
        let a = rng.gen_range(0..n);
        let b = rot[a][rng.gen_range(0..rot[a].len())];
        if is_outer_triangle_edge(a, b) || rot[a].len() <= 3 || rot[b].len() <= 3 {
            continue;
        }
        let c = successor(&rot, b, a);
        let d = successor(&rot, a, b);
        if c == d || rot[c].contains(&d) {
            continue;
        }
        remove_neighbor(&mut rot, a, b);
        remove_neighbor(&mut rot, b, a);
        insert_after(&mut rot, c, b, d);
        insert_after(&mut rot, d, a, c);
    }
    rot
}

fn connected_without(rot: &[Vec<Vertex>], a: Vertex, b: Vertex) -> bool {
    let mut seen = vec![false; rot.len()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(x) = stack.pop() {
        for &y in &rot[x] {
            if (x == a && y == b) || (x == b && y == a) || seen[y] {
                continue;
            }
            if y == b {
                return true;
            }
            seen[y] = true;
            stack.push(y);
        }
    }
    false
}

fn delete_random_edges(rng: &mut ChaCha8Rng, rot: &mut [Vec<Vertex>], p: f64) {
    let edges: Vec<(Vertex, Vertex)> = (0..rot.len())
        .flat_map(|u| {
            rot[u]
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
                .collect::<Vec<_>>()
        })
        .collect();
    for (u, v) in edges {
        if is_outer_triangle_edge(u, v) {
            continue;
        }
        let roll: f64 = rng.gen();
        if roll < p && connected_without(rot, u, v) {
            remove_neighbor(rot, u, v);
            remove_neighbor(rot, v, u);
        }
    }
}

/// Deletes edges until no edge joins two high-degree vertices that both
/// have another high-degree neighbor, which is exactly when the
/// high-degree vertices induce a star forest.
fn thin_to_star_forest(rng: &mut ChaCha8Rng, rot: &mut [Vec<Vertex>]) {
    let high = |rot: &[Vec<Vertex>], v: Vertex| rot[v].len() >= 4;
    let x_degree =
        |rot: &[Vec<Vertex>], v: Vertex| rot[v].iter().filter(|&&w| high(rot, w)).count();
    loop {
        let violating: Vec<(Vertex, Vertex)> = (0..rot.len())
            .filter(|&u| high(rot, u) && x_degree(rot, u) >= 2)
            .flat_map(|u| {
                rot[u]
                    .iter()
                    .filter(|&&v| u < v && high(rot, v) && x_degree(rot, v) >= 2)
                    .map(|&v| (u, v))
                    .collect::<Vec<_>>()
            })
            .collect();
        let Some(&(u, v)) = violating.choose(rng) else {
            return;
        };
        let mut candidates: Vec<(Vertex, Vertex)> = [u, v]
            .iter()
            .flat_map(|&a| rot[a].iter().map(move |&b| (a, b)).collect::<Vec<_>>())
            .filter(|&(a, b)| connected_without(rot, a, b))
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        let (a, b) = candidates.choose(rng).copied().unwrap_or((u, v));
        remove_neighbor(rot, a, b);
        remove_neighbor(rot, b, a);
    }
}

/// A random plane graph on `n` vertices, determined by `(seed, n, model)`.
/// Fewer than three vertices give a path.
pub fn random_plane_graph(seed: u64, n: usize, model: RandomModel) -> PlaneGraph {
    if n < 3 {
        return crate::families::path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot = triangulation(&mut rng, n);
    match model {
        RandomModel::Triangulation => {}
        RandomModel::TriangulationMinusRandomEdges(p) => delete_random_edges(&mut rng, &mut rot, p),
        RandomModel::StarForestX => thin_to_star_forest(&mut rng, &mut rot),
    }
    let g = PlaneGraph::new(rot).expect("random constructions stay plane");
    if model == RandomModel::StarForestX {
        let x: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
        debug_assert!(induced_shape(&g, &x).star_forest);
    }
    g
}

/// `count` instances with vertex counts drawn uniformly from `n_min..=n_max`,
/// each with its own derived seed.
pub fn random_batch(
    seed: u64,
    count: usize,
    n_min: usize,
    n_max: usize,
    model: RandomModel,
) -> Vec<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            random_plane_graph(rng.gen(), n, model)
        })
        .collect()
}
