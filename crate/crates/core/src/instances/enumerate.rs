//! Exhaustive generation of small connected plane graphs.
//!
//! Every connected plane graph is either a tree, which loses a leaf, or has an
//! edge whose deletion keeps it connected. Running both steps backwards from a
//! single vertex (attach a pendant vertex in any corner; join two non-adjacent
//! vertices across a face) therefore reaches every embedding. Embeddings are
//! identified up to orientation-preserving and orientation-reversing
//! homeomorphisms of the sphere, so the outer face plays no role.

use std::collections::{BTreeMap, HashSet};

use crate::plane_graph::{PlaneGraph, Vertex};

/// Largest vertex count the enumerator accepts without a degree bound.
pub const MAX_VERTICES: usize = 7;

/// Breadth-first code of the embedding rooted at the dart `root -> rot[root][first]`,
/// walking rotations forward or backward. Returns `None` as soon as it
/// exceeds `best`.
fn code_from(
    rot: &[Vec<Vertex>],
    root: Vertex,
    first: usize,
    forward: bool,
    best: Option<&[u16]>,
) -> Option<Vec<u16>> {
    let n = rot.len();
    let mut label = vec![0u16; n];
    let mut reference = vec![0usize; n];
    label[root] = 1;
    reference[root] = first;
    let mut order = vec![root];
    let mut out: Vec<u16> = Vec::new();
    let mut decided = best.is_none();
    let mut emit = |value: u16, out: &mut Vec<u16>| -> bool {
        out.push(value);
        if !decided {
            let b = best.expect("undecided implies a bound")[out.len() - 1];
            if value < b {
                decided = true;
            } else if value > b {
                return false;
            }
        }
        true
    };
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        k += 1;
        let d = rot[x].len();
        for j in 0..d {
            let idx = if forward {
                (reference[x] + j) % d
            } else {
                (reference[x] + d - j) % d
            };
            let w = rot[x][idx];
            if label[w] == 0 {
                label[w] = order.len() as u16 + 1;
                reference[w] = rot[w]
                    .iter()
                    .position(|&y| y == x)
                    .expect("symmetric rotation");
                order.push(w);
            }
            if !emit(label[w], &mut out) {
                return None;
            }
        }
        if !emit(0, &mut out) {
            return None;
        }
    }
    Some(out)
}

/// A code identifying a connected embedding up to homeomorphism of the
/// sphere, mirror images included.
pub fn canonical_code(g: &PlaneGraph) -> Vec<u16> {
    let rot = g.rotations();
    if g.m() == 0 {
        return vec![0; g.n()];
    }
    let mut best: Option<Vec<u16>> = None;
    for (root, r) in rot.iter().enumerate() {
        for first in 0..r.len() {
            for forward in [true, false] {
                if let Some(code) = code_from(rot, root, first, forward, best.as_deref()) {
                    if best.as_ref().is_none_or(|b| code < *b) {
                        best = Some(code);
                    }
                }
            }
        }
    }
    best.expect("a graph with edges has darts")
}

/// Rotation lists with `x` inserted right after `after` in `rot[v]`.
fn insert_after(rot: &mut [Vec<Vertex>], v: Vertex, after: Vertex, x: Vertex) {
    let pos = rot[v]
        .iter()
        .position(|&w| w == after)
        .expect("neighbor present");
    rot[v].insert(pos + 1, x);
}

fn pendant_extensions(g: &PlaneGraph, max_degree: usize) -> Vec<Vec<Vec<Vertex>>> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 0..n {
        if g.degree(v) >= max_degree {
            continue;
        }
        for pos in 0..g.degree(v).max(1) {
            let mut rot = g.rotations().to_vec();
            let at = pos.min(rot[v].len());
            rot[v].insert(at, n);
            rot.push(vec![v]);
            out.push(rot);
        }
    }
    out
}

fn edge_extensions(g: &PlaneGraph, max_degree: usize) -> Vec<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    for face in g.faces().faces() {
        let walk = face.walk();
        let k = walk.len();
        // Corner i sits at walk[i].tail, entered from walk[i-1].tail.
        let corner = |i: usize| (walk[i].tail, walk[(i + k - 1) % k].tail);
        for i in 0..k {
            for j in i + 1..k {
                let ((a, pa), (b, pb)) = (corner(i), corner(j));
                if a == b
                    || g.has_edge(a, b)
                    || g.degree(a) >= max_degree
                    || g.degree(b) >= max_degree
                {
                    continue;
                }
                let mut rot = g.rotations().to_vec();
                insert_after(&mut rot, a, pa, b);
                insert_after(&mut rot, b, pb, a);
                out.push(rot);
            }
        }
    }
    out
}

/// Enumerates connected plane graphs with at most `n_max` vertices and
/// maximum degree at most `max_degree`, one per embedding class, sorted by
/// vertex count, edge count and canonical code.
pub fn enumerate_connected(n_max: usize, max_degree: usize) -> Vec<PlaneGraph> {
    let mut result: Vec<(usize, usize, Vec<u16>, PlaneGraph)> = Vec::new();
    if n_max == 0 {
        return Vec::new();
    }
    let single = PlaneGraph::new(vec![Vec::new()]).expect("one vertex");
    let mut trees: Vec<PlaneGraph> = vec![single.clone()];
    result.push((1, 0, canonical_code(&single), single));
    for n in 2..=n_max {
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let mut level: Vec<PlaneGraph> = Vec::new();
        for t in &trees {
            for rot in pendant_extensions(t, max_degree) {
                let g = PlaneGraph::new(rot).expect("pendant insertion keeps the embedding planar");
                if seen.insert(canonical_code(&g)) {
                    level.push(g);
                }
            }
        }
        trees = level.clone();
        let mut by_edges: BTreeMap<usize, Vec<PlaneGraph>> = BTreeMap::new();
        by_edges.insert(n - 1, level);
        let mut m = n - 1;
        while let Some(current) = by_edges.get(&m).cloned() {
            let mut next = Vec::new();
            for g in &current {
                for rot in edge_extensions(g, max_degree) {
                    let h = PlaneGraph::new(rot)
                        .expect("edge insertion across a face keeps the embedding planar");
                    if seen.insert(canonical_code(&h)) {
                        next.push(h);
                    }
                }
            }
            if !next.is_empty() {
                by_edges.insert(m + 1, next);
            }
            m += 1;
        }
        for (m, graphs) in by_edges {
            for g in graphs {
                result.push((n, m, canonical_code(&g), g));
            }
        }
    }
    result.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    result.into_iter().map(|(_, _, _, g)| g).collect()
}

/// All connected plane graphs with at most `n_max <= 7` vertices.
pub fn enumerate_small(n_max: usize) -> Vec<PlaneGraph> {
    assert!(
        n_max <= MAX_VERTICES,
        "internal enumeration is capped at {MAX_VERTICES} vertices"
    );
    enumerate_connected(n_max, usize::MAX)
}

/// All connected plane graphs of maximum degree at most 3 with at most `n_max` vertices.
pub fn enumerate_subcubic(n_max: usize) -> Vec<PlaneGraph> {
    enumerate_connected(n_max, 3)
}
