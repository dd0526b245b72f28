//! Colorings, the high-degree vertex set, and the FUM verifiers.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{PlaneGraph, Vertex};

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    PartialColoring { expected: usize, got: usize },
    #[error("vertex {0} has color 0; colors are positive integers")]
    ZeroColor(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("a precolored path has at most two vertices, got {0}")]
    TooLong(usize),
    #[error("precolored vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("precolored vertex {0} is listed twice")]
    RepeatedVertex(Vertex),
    #[error("precolored vertex {vertex} has color {color}, outside 1..=3")]
    ColorOutOfRange { vertex: Vertex, color: Color },
    #[error("precolored vertex {0} is not on the outer face")]
    NotOnOuterFace(Vertex),
    #[error("precolored vertices {0} and {1} are not joined by an outer-face edge")]
    NotAnOuterEdge(Vertex, Vertex),
    #[error("adjacent precolored vertices {0} and {1} share a color")]
    SameColor(Vertex, Vertex),
}

/// A total map from vertices to positive colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest color used, 0 for the empty coloring.
    pub fn max_color(&self) -> Color {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.0
    }

    fn check_len(&self, g: &PlaneGraph) -> Result<(), ColoringError> {
        if self.0.len() != g.n() {
            return Err(ColoringError::PartialColoring {
                expected: g.n(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Up to two precolored vertices forming a path on the outer face.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecoloredPath {
    entries: Vec<(Vertex, Color)>,
}

impl PrecoloredPath {
    pub fn empty() -> Self {
        PrecoloredPath::default()
    }

    /// Checks the shape constraints that do not depend on a graph.
    pub fn new(entries: Vec<(Vertex, Color)>) -> Result<Self, PathError> {
        if entries.len() > 2 {
            return Err(PathError::TooLong(entries.len()));
        }
        for &(v, c) in &entries {
            if !(1..=3).contains(&c) {
                return Err(PathError::ColorOutOfRange {
                    vertex: v,
                    color: c,
                });
            }
        }
        if entries.len() == 2 && entries[0].0 == entries[1].0 {
            return Err(PathError::RepeatedVertex(entries[0].0));
        }
        Ok(PrecoloredPath { entries })
    }

    pub fn entries(&self) -> &[(Vertex, Color)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.entries.iter().any(|&(w, _)| w == v)
    }

    pub fn color_of(&self, v: Vertex) -> Option<Color> {
        self.entries.iter().find(|&&(w, _)| w == v).map(|&(_, c)| c)
    }

    /// Checks that the path lies on the outer face of `g`.
    pub fn check_on(&self, g: &PlaneGraph) -> Result<(), PathError> {
        for &(v, _) in &self.entries {
            if v >= g.n() {
                return Err(PathError::VertexOutOfRange(v));
            }
            if !g.is_outer_vertex(v) {
                return Err(PathError::NotOnOuterFace(v));
            }
        }
        if let [(a, ca), (b, cb)] = self.entries[..] {
            if !g.is_outer_edge(a, b) {
                return Err(PathError::NotAnOuterEdge(a, b));
            }
            if ca == cb {
                return Err(PathError::SameColor(a, b));
            }
        }
        Ok(())
    }

    /// The path relabeled through `map`, dropping vertices that map to `None`.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Option<Vertex>) -> Self {
        PrecoloredPath {
            entries: self
                .entries
                .iter()
                .filter_map(|&(v, c)| map(v).map(|w| (w, c)))
                .collect(),
        }
    }
}

/// Which faces a verification covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceScope {
    All,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCheck {
    pub face: usize,
    pub outer: bool,
    pub max: Color,
    /// Distinct vertices of the face carrying the maximum color.
    pub attaining: Vec<Vertex>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scope: FaceScope,
    /// One edge whose endpoints share a color, if any.
    pub conflict: Option<(Vertex, Vertex)>,
    pub faces: Vec<FaceCheck>,
    /// Vertices colored outside the allowed palette.
    pub palette_violations: Vec<Vertex>,
    /// Outer-face vertices carrying a color reserved for the interior.
    pub outer_reserved: Vec<Vertex>,
    /// Precolored vertices whose color was changed.
    pub precoloring_mismatches: Vec<Vertex>,
    /// The outer face is shared by several components and was checked once.
    pub shared_outer_face: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.conflict.is_none()
            && self.faces.iter().all(|f| f.pass)
            && self.palette_violations.is_empty()
            && self.outer_reserved.is_empty()
            && self.precoloring_mismatches.is_empty()
    }

    pub fn failing_faces(&self) -> impl Iterator<Item = &FaceCheck> {
        self.faces.iter().filter(|f| !f.pass)
    }
}

/// One edge whose endpoints share a color, if any.
pub fn conflicting_edge(
    g: &PlaneGraph,
    c: &Coloring,
) -> Result<Option<(Vertex, Vertex)>, ColoringError> {
    c.check_len(g)?;
    Ok(g.edges().find(|&(u, v)| c.get(u) == c.get(v)))
}

pub fn is_proper(g: &PlaneGraph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(conflicting_edge(g, c)?.is_none())
}

fn check_faces(g: &PlaneGraph, c: &Coloring, scope: FaceScope) -> Vec<FaceCheck> {
    let faces = g.faces();
    (0..faces.len())
        .filter(|&f| scope == FaceScope::All || !faces.is_outer(f))
        .map(|f| {
            let vertices = faces.faces()[f].vertices();
            let max = vertices.iter().map(|&v| c.get(v)).max().unwrap_or(0);
            let attaining: Vec<Vertex> = vertices
                .iter()
                .copied()
                .filter(|&v| c.get(v) == max)
                .collect();
            FaceCheck {
                face: f,
                outer: faces.is_outer(f),
                max,
                pass: attaining.len() == 1,
                attaining,
            }
        })
        .collect()
}

/// Checks properness and that each face in scope has a unique maximum.
pub fn verify_fum(
    g: &PlaneGraph,
    c: &Coloring,
    scope: FaceScope,
) -> Result<VerificationReport, ColoringError> {
    let conflict = conflicting_edge(g, c)?;
    Ok(VerificationReport {
        scope,
        conflict,
        faces: check_faces(g, c, scope),
        palette_violations: Vec::new(),
        outer_reserved: Vec::new(),
        precoloring_mismatches: Vec::new(),
        shared_outer_face: scope == FaceScope::All && g.component_count() > 1,
    })
}

/// Checks the precoloring-extension contract with colors `1..=palette`:
/// proper, extends `p`, outer-face vertices use only `{1,2,3}`, and every
/// internal face has a unique maximum.
pub fn verify_extension(
    g: &PlaneGraph,
    p: &PrecoloredPath,
    c: &Coloring,
    palette: Color,
) -> Result<VerificationReport, ColoringError> {
    let conflict = conflicting_edge(g, c)?;
    let palette_violations = (0..g.n())
        .filter(|&v| c.get(v) == 0 || c.get(v) > palette)
        .collect();
    let outer_reserved = g
        .outer_vertices()
        .iter()
        .copied()
        .filter(|&v| c.get(v) > 3)
        .collect();
    let precoloring_mismatches = p
        .entries()
        .iter()
        .filter(|&&(v, col)| v >= g.n() || c.get(v) != col)
        .map(|&(v, _)| v)
        .collect();
    Ok(VerificationReport {
        scope: FaceScope::Internal,
        conflict,
        faces: check_faces(g, c, FaceScope::Internal),
        palette_violations,
        outer_reserved,
        precoloring_mismatches,
        shared_outer_face: false,
    })
}

/// [`verify_extension`] with the four-color palette.
pub fn verify_lemma_contract(
    g: &PlaneGraph,
    p: &PrecoloredPath,
    c: &Coloring,
) -> Result<VerificationReport, ColoringError> {
    verify_extension(g, p, c, 4)
}

/// Which high-degree set to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XMode {
    /// Vertices of degree at least 4.
    Theorem,
    /// Additionally the degree-3 vertices of the precolored path.
    Lemma,
}

/// Shape of the subgraph induced by the high-degree set, first match wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum XClass {
    StarForest,
    Acyclic,
    MaxDeg2,
    MaxDeg3,
    Other,
}

/// Structural facts about an induced subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InducedShape {
    pub star_forest: bool,
    pub acyclic: bool,
    pub max_degree: usize,
}

impl InducedShape {
    pub fn class(&self) -> XClass {
        if self.star_forest {
            XClass::StarForest
        } else if self.acyclic {
            XClass::Acyclic
        } else if self.max_degree <= 2 {
            XClass::MaxDeg2
        } else if self.max_degree <= 3 {
            XClass::MaxDeg3
        } else {
            XClass::Other
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSet {
    pub members: Vec<Vertex>,
    pub shape: InducedShape,
}

impl XSet {
    pub fn class(&self) -> XClass {
        self.shape.class()
    }
}

pub fn compute_xset(g: &PlaneGraph, p: &PrecoloredPath, mode: XMode) -> XSet {
    let members: Vec<Vertex> = (0..g.n())
        .filter(|&v| {
            g.degree(v) >= 4 || (mode == XMode::Lemma && g.degree(v) == 3 && p.contains(v))
        })
        .collect();
    let shape = induced_shape(g, &members);
    XSet { members, shape }
}

/// Computes acyclicity, maximum degree and the star-forest property of `G[s]`.
pub fn induced_shape(g: &PlaneGraph, s: &[Vertex]) -> InducedShape {
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    let deg: Vec<usize> = (0..g.n())
        .map(|v| {
            if inside[v] {
                g.rotation(v).iter().filter(|&&w| inside[w]).count()
            } else {
                0
            }
        })
        .collect();
    let max_degree = deg.iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; g.n()];
    let mut acyclic = true;
    let mut star_forest = true;
    for &root in s {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let (mut verts, mut degree_sum, mut hubs) = (0usize, 0usize, 0usize);
        while let Some(x) = stack.pop() {
            verts += 1;
            degree_sum += deg[x];
            if deg[x] > 1 {
                hubs += 1;
            }
            for &y in g.rotation(x) {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if degree_sum / 2 != verts - 1 {
            acyclic = false;
            star_forest = false;
        }
        if hubs > 1 {
            star_forest = false;
        }
    }
    InducedShape {
        star_forest,
        acyclic,
        max_degree,
    }
}

pub fn is_star_forest(g: &PlaneGraph, s: &[Vertex]) -> bool {
    induced_shape(g, s).star_forest
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn col(v: &[Color]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn properness() {
        assert!(is_proper(&families::triangle(), &col(&[1, 2, 3])).unwrap());
        assert_eq!(
            conflicting_edge(&families::path(2), &col(&[1, 1])).unwrap(),
            Some((0, 1))
        );
        assert!(is_proper(&families::empty(3), &col(&[1, 1, 1])).unwrap());
        assert_eq!(
            is_proper(&families::triangle(), &col(&[1, 2])).unwrap_err(),
            ColoringError::PartialColoring {
                expected: 3,
                got: 2
            }
        );
        assert_eq!(
            Coloring::new(vec![1, 0]).unwrap_err(),
            ColoringError::ZeroColor(1)
        );
    }

    #[test]
    fn fum_examples() {
        assert!(
            verify_fum(&families::triangle(), &col(&[1, 2, 3]), FaceScope::All)
                .unwrap()
                .passed()
        );
        let c4 = verify_fum(&families::cycle(4), &col(&[1, 2, 1, 2]), FaceScope::All).unwrap();
        assert!(!c4.passed());
        assert_eq!(c4.failing_faces().count(), 2);
        assert!(
            verify_fum(&families::k4(), &col(&[1, 2, 3, 4]), FaceScope::All)
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn cut_vertex_counts_once() {
        // The bowtie's outer walk visits vertex 2 twice; it alone carries the maximum.
        let report =
            verify_fum(&families::bowtie(), &col(&[1, 2, 3, 1, 2]), FaceScope::All).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn lemma_contract_examples() {
        let tri = families::triangle();
        let p = PrecoloredPath::new(vec![(0, 1), (1, 2)]).unwrap();
        assert!(verify_lemma_contract(&tri, &p, &col(&[1, 2, 3]))
            .unwrap()
            .passed());
        let outer_four =
            verify_lemma_contract(&tri, &PrecoloredPath::empty(), &col(&[1, 2, 4])).unwrap();
        assert_eq!(outer_four.outer_reserved, vec![2]);
        assert!(!outer_four.passed());
        let changed = verify_lemma_contract(&tri, &p, &col(&[2, 1, 3])).unwrap();
        assert_eq!(changed.precoloring_mismatches, vec![0, 1]);
        let k4 = families::k4();
        assert!(
            verify_lemma_contract(&k4, &PrecoloredPath::empty(), &col(&[1, 2, 3, 4]))
                .unwrap()
                .passed()
        );
        assert_eq!(
            verify_lemma_contract(&k4, &PrecoloredPath::empty(), &col(&[1, 2, 3, 5]))
                .unwrap()
                .palette_violations,
            vec![3]
        );
    }

    #[test]
    fn precolored_path_checks() {
        assert_eq!(
            PrecoloredPath::new(vec![(0, 1), (1, 2), (2, 3)]).unwrap_err(),
            PathError::TooLong(3)
        );
        assert!(matches!(
            PrecoloredPath::new(vec![(0, 4)]).unwrap_err(),
            PathError::ColorOutOfRange { .. }
        ));
        let k4 = families::k4();
        assert_eq!(
            PrecoloredPath::new(vec![(3, 1)])
                .unwrap()
                .check_on(&k4)
                .unwrap_err(),
            PathError::NotOnOuterFace(3)
        );
        assert_eq!(
            PrecoloredPath::new(vec![(0, 1), (1, 1)])
                .unwrap()
                .check_on(&k4)
                .unwrap_err(),
            PathError::SameColor(0, 1)
        );
        assert_eq!(
            PrecoloredPath::new(vec![(0, 1), (2, 2)])
                .unwrap()
                .check_on(&families::cycle(4))
                .unwrap_err(),
            PathError::NotAnOuterEdge(0, 2)
        );
        assert!(PrecoloredPath::new(vec![(0, 1), (1, 2)])
            .unwrap()
            .check_on(&k4)
            .is_ok());
    }

    #[test]
    fn xset_examples() {
        let k4 = compute_xset(&families::k4(), &PrecoloredPath::empty(), XMode::Theorem);
        assert!(k4.members.is_empty());
        assert_eq!(k4.class(), XClass::StarForest);
        let oct = compute_xset(
            &families::octahedron(),
            &PrecoloredPath::empty(),
            XMode::Theorem,
        );
        assert_eq!(oct.members.len(), 6);
        assert_eq!(oct.class(), XClass::Other);
        let p = PrecoloredPath::new(vec![(0, 1)]).unwrap();
        assert!(compute_xset(&families::cycle(5), &p, XMode::Lemma)
            .members
            .is_empty());
        let k4p = compute_xset(&families::k4(), &p, XMode::Lemma);
        assert_eq!(k4p.members, vec![0]);
    }

    #[test]
    fn star_forest_examples() {
        let p6 = families::path(6);
        assert!(!is_star_forest(&p6, &[0, 1, 2, 3]));
        assert!(is_star_forest(&p6, &[0, 1, 2]));
        assert!(is_star_forest(&p6, &[0, 1, 3, 4]));
        assert!(!is_star_forest(&families::triangle(), &[0, 1, 2]));
        assert!(is_star_forest(&families::star(5), &[0, 1, 2, 3, 4, 5]));
        assert_eq!(
            induced_shape(&families::cycle(5), &[0, 1, 2, 3, 4]).class(),
            XClass::MaxDeg2
        );
        assert_eq!(induced_shape(&p6, &[0, 1, 2, 3]).class(), XClass::Acyclic);
    }
}
