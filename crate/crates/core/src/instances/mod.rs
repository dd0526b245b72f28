//! Instance supply: file parsing, exhaustive and random generation,
//! hypothesis filters and the counterexample search.

pub mod enumerate;
pub mod filter;
pub mod planar_code;
pub mod random;
pub mod search;

use crate::plane_graph::{PlaneGraph, Vertex};

/// The graph relabeled in breadth-first order from vertex 0 (neighbors taken
/// in rotation order), rotations otherwise unchanged.
pub fn bfs_relabel(g: &PlaneGraph) -> PlaneGraph {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = order.len();
        order.push(s);
        let mut k = order.len() - 1;
        while k < order.len() {
            let x = order[k];
            k += 1;
            for &y in g.rotation(x) {
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
        }
    }
    let rotations = order
        .iter()
        .map(|&x| g.rotation(x).iter().map(|&y| label[y]).collect())
        .collect();
    PlaneGraph::new(rotations).expect("relabeling preserves validity")
}

/// Stable identifier: hex of the planar_code bytes of [`bfs_relabel`].
pub fn canonical_id(g: &PlaneGraph) -> String {
    if g.n() == 0 {
        return "empty".to_string();
    }
    let mut bytes = Vec::new();
    planar_code::encode_graph(&bfs_relabel(g), &mut bytes)
        .expect("relabeled graphs use the default outer face");
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
