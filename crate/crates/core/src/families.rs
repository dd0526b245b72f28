//! Small named plane graphs.

use std::collections::HashMap;

use crate::plane_graph::{GraphError, PlaneGraph, Vertex};

/// Builds a plane graph from its faces, each listed as a closed walk in
/// tracing order. The face containing the dart from vertex 0 to its smallest
/// neighbor becomes the outer face.
pub fn from_face_cycles(n: usize, faces: &[&[Vertex]]) -> Result<PlaneGraph, GraphError> {
    let mut succ: Vec<HashMap<Vertex, Vertex>> = vec![HashMap::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            if b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a,
                    neighbor: b,
                    n,
                });
            }
            succ[b].insert(a, c);
        }
    }
    let rotations = succ
        .iter()
        .map(|map| {
            let Some(&start) = map.keys().min() else {
                return Vec::new();
            };
            let mut rot = vec![start];
            let mut x = map[&start];
            while x != start && rot.len() <= map.len() {
                rot.push(x);
                x = map.get(&x).copied().unwrap_or(start);
            }
            rot
        })
        .collect();
    PlaneGraph::new(rotations)
}

fn known(g: Result<PlaneGraph, GraphError>) -> PlaneGraph {
    g.expect("named graphs are valid embeddings")
}

/// `n` isolated vertices.
pub fn empty(n: usize) -> PlaneGraph {
    known(PlaneGraph::new(vec![Vec::new(); n]))
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> PlaneGraph {
    let rot = (0..n)
        .map(|i| {
            let mut r = Vec::new();
            if i + 1 < n {
                r.push(i + 1);
            }
            if i > 0 {
                r.push(i - 1);
            }
            r
        })
        .collect();
    known(PlaneGraph::new(rot))
}

/// Cycle on `n >= 3` vertices; the outer walk is `0, 1, ..., n-1`.
pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    known(PlaneGraph::new(rot))
}

pub fn triangle() -> PlaneGraph {
    cycle(3)
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> PlaneGraph {
    let mut rot = vec![(1..=leaves).collect::<Vec<_>>()];
    rot.extend((0..leaves).map(|_| vec![0]));
    known(PlaneGraph::new(rot))
}

/// Wheel with rim `0..k` (the outer cycle) and hub `k`.
pub fn wheel(k: usize) -> PlaneGraph {
    assert!(k >= 3, "a wheel needs a rim of at least three vertices");
    let mut rot: Vec<Vec<Vertex>> = (0..k)
        .map(|i| vec![(i + 1) % k, k, (i + k - 1) % k])
        .collect();
    rot.push((0..k).collect());
    known(PlaneGraph::new(rot))
}

/// K4 with outer triangle `0 1 2` and vertex 3 inside.
pub fn k4() -> PlaneGraph {
    known(PlaneGraph::new(vec![
        vec![1, 3, 2],
        vec![2, 3, 0],
        vec![0, 3, 1],
        vec![0, 1, 2],
    ]))
}

/// Octahedron with outer triangle `0 1 2`; 0 and 5 are antipodal.
pub fn octahedron() -> PlaneGraph {
    known(from_face_cycles(
        6,
        &[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 1],
            &[5, 2, 1],
            &[5, 3, 2],
            &[5, 4, 3],
            &[5, 1, 4],
        ],
    ))
}

/// The 3-cube with outer square `0 1 2 3` and inner square `4 5 6 7`.
pub fn cube() -> PlaneGraph {
    known(from_face_cycles(
        8,
        &[
            &[0, 1, 2, 3],
            &[1, 0, 4, 5],
            &[2, 1, 5, 6],
            &[3, 2, 6, 7],
            &[0, 3, 7, 4],
            &[4, 7, 6, 5],
        ],
    ))
}

/// Two triangles `0 1 2` and `2 3 4` sharing the cut vertex 2.
pub fn bowtie() -> PlaneGraph {
    known(PlaneGraph::new(vec![
        vec![1, 2],
        vec![2, 0],
        vec![0, 1, 3, 4],
        vec![4, 2],
        vec![2, 3],
    ]))
}

/// The 4-cycle `0 1 2 3` with the chord `0 2`.
pub fn c4_with_chord() -> PlaneGraph {
    known(PlaneGraph::new(vec![
        vec![1, 2, 3],
        vec![2, 0],
        vec![3, 0, 1],
        vec![0, 2],
    ]))
}

/// `a` followed by `b` with its vertices shifted by `a.n()`.
pub fn disjoint_union(a: &PlaneGraph, b: &PlaneGraph) -> PlaneGraph {
    let shift = a.n();
    let mut rot: Vec<Vec<Vertex>> = a.rotations().to_vec();
    rot.extend(
        b.rotations()
            .iter()
            .map(|r| r.iter().map(|&w| w + shift).collect()),
    );
    known(PlaneGraph::new(rot))
}

/// The same embedding with vertex `v` renamed to `n - 1 - v`.
pub fn reverse_labels(g: &PlaneGraph) -> PlaneGraph {
    let n = g.n();
    let rot = (0..n)
        .rev()
        .map(|v| g.rotation(v).iter().map(|&w| n - 1 - w).collect())
        .collect();
    known(PlaneGraph::new(rot))
}

/// Looks up a family by name, e.g. `cycle:5`, `k4`, `wheel:6`.
pub fn by_name(spec: &str) -> Option<PlaneGraph> {
    let (name, arg) = match spec.split_once(':') {
        Some((name, arg)) => (name, Some(arg.parse::<usize>().ok()?)),
        None => (spec, None),
    };
    Some(match (name, arg) {
        ("empty", Some(k)) => empty(k),
        ("path", Some(k)) => path(k),
        ("cycle", Some(k)) if k >= 3 => cycle(k),
        ("star", Some(k)) => star(k),
        ("wheel", Some(k)) if k >= 3 => wheel(k),
        ("triangle", None) => triangle(),
        ("k4", None) => k4(),
        ("octahedron", None) => octahedron(),
        ("cube", None) => cube(),
        ("bowtie", None) => bowtie(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut lens: Vec<usize> = g.faces().faces().iter().map(|f| f.walk_len()).collect();
        lens.sort_unstable();
        lens
    }

    #[test]
    fn family_shapes() {
        assert_eq!(face_lengths(&octahedron()), vec![3; 8]);
        assert_eq!(face_lengths(&cube()), vec![4; 6]);
        assert_eq!(face_lengths(&wheel(5)), vec![3, 3, 3, 3, 3, 5]);
        assert_eq!(face_lengths(&bowtie()), vec![3, 3, 6]);
        assert_eq!(face_lengths(&star(4)), vec![8]);
        assert_eq!(octahedron().outer_vertices(), &[0, 1, 2]);
        assert_eq!(cube().outer_vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("cycle:4").unwrap().m(), 4);
        assert_eq!(by_name("k4").unwrap().m(), 6);
        assert!(by_name("cycle:2").is_none());
        assert!(by_name("petersen").is_none());
    }
}
