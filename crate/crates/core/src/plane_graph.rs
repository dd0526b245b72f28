//! Plane graphs stored as rotation systems.
//!
//! A [`PlaneGraph`] is an immutable, validated combinatorial embedding: for
//! every vertex the cyclic order of its neighbors. Rotations are read as
//! counterclockwise, and faces are the orbits of the rule "after the dart
//! `u -> v`, continue with `v -> w` where `w` follows `u` in the rotation of
//! `v`". Every connected component is assumed to lie in the outer face of the
//! others, so a disconnected graph has a single outer face bounded by one walk
//! per component (plus its isolated vertices).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Dart {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("expected {expected} rotation lists, got {got}")]
    RotationCount { expected: usize, got: usize },
    #[error("vertex {vertex} lists neighbor {neighbor}, out of range for {n} vertices")]
    VertexOutOfRange {
        vertex: Vertex,
        neighbor: Vertex,
        n: usize,
    },
    #[error("asymmetric rotation: {0} lists {1} but {1} does not list {0}")]
    AsymmetricRotation(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} lists neighbor {1} more than once")]
    DuplicateNeighbor(Vertex, Vertex),
    #[error("rotation system is not planar (a component has genus {genus})")]
    NonPlanarEmbedding { genus: usize },
    #[error("outer face dart {0} is not an edge of the graph")]
    UnknownDart(Dart),
    #[error("outer face darts {0} and {1} designate different faces of one component")]
    ConflictingOuterDarts(Dart, Dart),
    #[error("the outer boundary is not a cycle")]
    NotACycleBoundary,
    #[error("vertex set {0:?} does not separate the graph")]
    NotASeparator(Vec<Vertex>),
}

/// One face: its boundary walks and the distinct vertices on them.
///
/// Internal faces have exactly one walk. The outer face has one walk per
/// connected component with edges; isolated vertices appear only in
/// `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    walks: Vec<Vec<Dart>>,
    vertices: Vec<Vertex>,
}

impl Face {
    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    /// The first boundary walk (the only one for an internal face).
    pub fn walk(&self) -> &[Dart] {
        self.walks.first().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Sorted distinct vertices incident to the face.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Total number of darts over all boundary walks.
    pub fn walk_len(&self) -> usize {
        self.walks.iter().map(Vec::len).sum()
    }
}

/// The traced faces of a plane graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    outer: Option<usize>,
    dart_face: Vec<usize>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the outer face; `None` only for the empty graph.
    pub fn outer(&self) -> Option<usize> {
        self.outer
    }

    pub fn is_outer(&self, face: usize) -> bool {
        self.outer == Some(face)
    }

    /// Indices of all faces other than the outer one.
    pub fn internal(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| !self.is_outer(f))
    }

    /// Face containing the dart with the given id.
    pub fn face_of_dart_id(&self, dart_id: usize) -> usize {
        self.dart_face[dart_id]
    }
}

/// Shape of the outer boundary, in the order the case analysis needs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryClass {
    /// The outer walk is a simple cycle, listed in walk order.
    Cycle(Vec<Vertex>),
    /// Some vertex appears at least twice on the outer walk.
    WalkWithCutVertex(Vertex),
    /// The outer face is the only face (a tree, a vertex, or nothing).
    NoInternalFaces,
    /// More than one connected component, listed by smallest vertex.
    Disconnected(Vec<Vec<Vertex>>),
}

/// An induced subgraph with its vertex labels in the parent graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: PlaneGraph,
    /// `labels[i]` is the parent vertex of subgraph vertex `i` (ascending).
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    /// Subgraph index of a parent vertex, if kept.
    pub fn local(&self, parent: Vertex) -> Option<Vertex> {
        self.labels.binary_search(&parent).ok()
    }
}

/// A validated plane graph with traced faces and a designated outer face.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    rotations: Vec<Vec<Vertex>>,
    offsets: Vec<usize>,
    reverse: Vec<usize>,
    component: Vec<usize>,
    component_count: usize,
    outer_roots: Vec<Option<usize>>,
    on_outer: Vec<bool>,
    faces: FaceSet,
}

/// Same rotations and the same darts on the outer face.
impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations
            && (0..self.dart_count()).all(|d| {
                self.faces.is_outer(self.faces.dart_face[d])
                    == other.faces.is_outer(other.faces.dart_face[d])
            })
    }
}

impl Eq for PlaneGraph {}

/// Dart bookkeeping shared by validation and face tracing.
struct Skeleton {
    rotations: Vec<Vec<Vertex>>,
    offsets: Vec<usize>,
    reverse: Vec<usize>,
    tails: Vec<Vertex>,
    component: Vec<usize>,
    component_count: usize,
}

struct Orbits {
    of_dart: Vec<usize>,
    list: Vec<Vec<usize>>,
}

impl Skeleton {
    fn new(rotations: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tails = Vec::new();
        offsets.push(0);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        neighbor: w,
                        n,
                    });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                tails.push(v);
            }
            offsets.push(tails.len());
        }

        // Pair each dart with its reverse by sorting on the undirected edge.
        let mut keyed: Vec<(Vertex, Vertex, Vertex, usize)> = Vec::with_capacity(tails.len());
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                keyed.push((v.min(w), v.max(w), v, offsets[v] + i));
            }
        }
        keyed.sort_unstable();
        let mut reverse = vec![usize::MAX; tails.len()];
        let mut i = 0;
        while i < keyed.len() {
            let (a, b, tail, id) = keyed[i];
            let head = if tail == a { b } else { a };
            let mut j = i + 1;
            while j < keyed.len() && keyed[j].0 == a && keyed[j].1 == b {
                j += 1;
            }
            let group = &keyed[i..j];
            for pair in group.windows(2) {
                if pair[0].2 == pair[1].2 {
                    return Err(GraphError::DuplicateNeighbor(
                        pair[0].2,
                        if pair[0].2 == a { b } else { a },
                    ));
                }
            }
            match group.len() {
                1 => return Err(GraphError::AsymmetricRotation(tail, head)),
                2 => {
                    let other = group[1].3;
                    reverse[id] = other;
                    reverse[other] = id;
                }
                _ => unreachable!("groups larger than two contain a repeated tail"),
            }
            i = j;
        }

        let mut component = vec![usize::MAX; n];
        let mut component_count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = component_count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &rotations[x] {
                    if component[y] == usize::MAX {
                        component[y] = component_count;
                        queue.push_back(y);
                    }
                }
            }
            component_count += 1;
        }

        Ok(Skeleton {
            rotations,
            offsets,
            reverse,
            tails,
            component,
            component_count,
        })
    }

    fn head(&self, dart: usize) -> Vertex {
        self.tails[self.reverse[dart]]
    }

    /// The dart following `dart` on its face.
    fn next_on_face(&self, dart: usize) -> usize {
        let rev = self.reverse[dart];
        let v = self.tails[rev];
        let deg = self.offsets[v + 1] - self.offsets[v];
        let pos = rev - self.offsets[v];
        self.offsets[v] + (pos + 1) % deg
    }

    fn orbits(&self) -> Orbits {
        let mut of_dart = vec![usize::MAX; self.tails.len()];
        let mut list = Vec::new();
        for start in 0..self.tails.len() {
            if of_dart[start] != usize::MAX {
                continue;
            }
            let id = list.len();
            let mut orbit = Vec::new();
            let mut d = start;
            while of_dart[d] == usize::MAX {
                of_dart[d] = id;
                orbit.push(d);
                d = self.next_on_face(d);
            }
            list.push(orbit);
        }
        Orbits { of_dart, list }
    }

    fn check_euler(&self, orbits: &Orbits) -> Result<(), GraphError> {
        let c = self.component_count;
        let mut verts = vec![0i64; c];
        let mut darts = vec![0i64; c];
        let mut faces = vec![0i64; c];
        for &comp in &self.component {
            verts[comp] += 1;
        }
        for &t in &self.tails {
            darts[self.component[t]] += 1;
        }
        for orbit in &orbits.list {
            faces[self.component[self.tails[orbit[0]]]] += 1;
        }
        for k in 0..c {
            let f = faces[k].max(1);
            let chi = verts[k] - darts[k] / 2 + f;
            if chi != 2 {
                return Err(GraphError::NonPlanarEmbedding {
                    genus: ((2 - chi) / 2).max(0) as usize,
                });
            }
        }
        Ok(())
    }

    /// Lexicographically smallest dart out of the smallest vertex of each component.
    fn default_roots(&self) -> Vec<Option<usize>> {
        let mut roots = vec![None; self.component_count];
        let mut seen = vec![false; self.component_count];
        for v in 0..self.rotations.len() {
            let c = self.component[v];
            if seen[c] {
                continue;
            }
            seen[c] = true;
            roots[c] = self.rotations[v]
                .iter()
                .enumerate()
                .min_by_key(|&(_, &w)| w)
                .map(|(i, _)| self.offsets[v] + i);
        }
        roots
    }

    fn dart_id(&self, d: Dart) -> Option<usize> {
        let rot = self.rotations.get(d.tail)?;
        rot.iter()
            .position(|&w| w == d.head)
            .map(|i| self.offsets[d.tail] + i)
    }

    fn finish(self, orbits: Orbits, roots: Vec<Option<usize>>) -> PlaneGraph {
        let n = self.rotations.len();
        let mut faces = Vec::new();
        let mut dart_face = vec![usize::MAX; self.tails.len()];
        let mut on_outer = vec![false; n];
        let dart = |id: usize| Dart::new(self.tails[id], self.head(id));
        let outer = if n == 0 {
            None
        } else {
            let mut walks = Vec::new();
            let mut outer_orbit = vec![false; orbits.list.len()];
            for root in roots.iter().flatten() {
                let orbit = orbits.of_dart[*root];
                outer_orbit[orbit] = true;
                walks.push(
                    rotate_to(&orbits.list[orbit], *root)
                        .into_iter()
                        .map(dart)
                        .collect::<Vec<_>>(),
                );
            }
            for (id, orbit) in orbits.list.iter().enumerate() {
                if outer_orbit[id] {
                    for &d in orbit {
                        dart_face[d] = 0;
                    }
                }
            }
            for (v, slot) in on_outer.iter_mut().enumerate() {
                *slot = self.rotations[v].is_empty();
            }
            for walk in &walks {
                for d in walk {
                    on_outer[d.tail] = true;
                }
            }
            let vertices = (0..n).filter(|&v| on_outer[v]).collect();
            faces.push(Face { walks, vertices });
            for (id, orbit) in orbits.list.iter().enumerate() {
                if outer_orbit[id] {
                    continue;
                }
                let face = faces.len();
                for &d in orbit {
                    dart_face[d] = face;
                }
                faces.push(face_from_orbit(orbit.iter().map(|&d| dart(d)).collect()));
            }
            Some(0)
        };
        PlaneGraph {
            rotations: self.rotations,
            offsets: self.offsets,
            reverse: self.reverse,
            component: self.component,
            component_count: self.component_count,
            outer_roots: roots,
            on_outer,
            faces: FaceSet {
                faces,
                outer,
                dart_face,
            },
        }
    }
}

fn rotate_to(orbit: &[usize], start: usize) -> Vec<usize> {
    let k = orbit.iter().position(|&d| d == start).unwrap_or(0);
    orbit[k..].iter().chain(&orbit[..k]).copied().collect()
}

fn face_from_orbit(walk: Vec<Dart>) -> Face {
    let mut vertices: Vec<Vertex> = walk.iter().map(|d| d.tail).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Face {
        walks: vec![walk],
        vertices,
    }
}

/// Disjoint-set forest over face indices.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl PlaneGraph {
    /// Validates a rotation system and traces its faces with the default
    /// outer face in every component.
    pub fn new(rotations: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        Self::with_outer(rotations, &[])
    }

    /// Like [`PlaneGraph::new`], but the outer face of each component that
    /// contains one of `outer` is the face to the left of that dart.
    pub fn with_outer(rotations: Vec<Vec<Vertex>>, outer: &[Dart]) -> Result<Self, GraphError> {
        let skel = Skeleton::new(rotations)?;
        let orbits = skel.orbits();
        skel.check_euler(&orbits)?;
        let mut roots = skel.default_roots();
        let mut chosen: Vec<Option<Dart>> = vec![None; skel.component_count];
        for &d in outer {
            let id = skel.dart_id(d).ok_or(GraphError::UnknownDart(d))?;
            let comp = skel.component[d.tail];
            if let Some(prev) = chosen[comp] {
                let prev_id = skel.dart_id(prev).expect("validated above");
                if orbits.of_dart[prev_id] != orbits.of_dart[id] {
                    return Err(GraphError::ConflictingOuterDarts(prev, d));
                }
                continue;
            }
            chosen[comp] = Some(d);
            roots[comp] = Some(id);
        }
        Ok(skel.finish(orbits, roots))
    }

    /// Builds from an explicit vertex count; the rotation list must match it.
    pub fn build(n: usize, rotations: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        if rotations.len() != n {
            return Err(GraphError::RotationCount {
                expected: n,
                got: rotations.len(),
            });
        }
        Self::new(rotations)
    }

    /// The same embedding with the outer face of `dart`'s component moved to
    /// the face left of `dart`.
    pub fn reroot(&self, dart: Dart) -> Result<Self, GraphError> {
        let mut outer: Vec<Dart> = self.outer_darts();
        let comp = self.component.get(dart.tail).copied();
        outer.retain(|d| Some(self.component[d.tail]) != comp);
        outer.push(dart);
        Self::with_outer(self.rotations.clone(), &outer)
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn m(&self) -> usize {
        self.reverse.len() / 2
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    /// Neighbors of `v` in rotation order.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.rotations[a].contains(&b)
    }

    /// Undirected edges `(u, v)` with `u < v`, in dart order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.rotations
            .iter()
            .enumerate()
            .flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn dart_count(&self) -> usize {
        self.reverse.len()
    }

    pub fn dart_id(&self, d: Dart) -> Option<usize> {
        let rot = self.rotations.get(d.tail)?;
        rot.iter()
            .position(|&w| w == d.head)
            .map(|i| self.offsets[d.tail] + i)
    }

    pub fn dart(&self, id: usize) -> Dart {
        let tail = match self.offsets.binary_search(&id) {
            Ok(mut v) => {
                while self.offsets[v + 1] == id {
                    v += 1;
                }
                v
            }
            Err(v) => v - 1,
        };
        Dart::new(tail, self.rotations[tail][id - self.offsets[tail]])
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn face(&self, index: usize) -> &Face {
        &self.faces.faces[index]
    }

    pub fn outer_face(&self) -> Option<&Face> {
        self.faces.outer.map(|f| &self.faces.faces[f])
    }

    /// Sorted vertices incident to the outer face.
    pub fn outer_vertices(&self) -> &[Vertex] {
        self.outer_face().map(Face::vertices).unwrap_or(&[])
    }

    pub fn is_outer_vertex(&self, v: Vertex) -> bool {
        self.on_outer[v]
    }

    /// Whether the edge `u v` borders the outer face on at least one side.
    pub fn is_outer_edge(&self, u: Vertex, v: Vertex) -> bool {
        let Some(outer) = self.faces.outer else {
            return false;
        };
        [Dart::new(u, v), Dart::new(v, u)]
            .into_iter()
            .filter_map(|d| self.dart_id(d))
            .any(|id| self.faces.dart_face[id] == outer)
    }

    pub fn face_of_dart(&self, d: Dart) -> Option<usize> {
        self.dart_id(d).map(|id| self.faces.dart_face[id])
    }

    /// Per component, the dart whose left face is that component's share of
    /// the outer face (`None` entries for isolated vertices are skipped).
    pub fn outer_darts(&self) -> Vec<Dart> {
        self.outer_roots
            .iter()
            .flatten()
            .map(|&id| self.dart(id))
            .collect()
    }

    /// Whether every component uses the default outer face.
    pub fn has_default_outer(&self) -> bool {
        let skel_roots = {
            let mut roots = vec![None; self.component_count];
            let mut seen = vec![false; self.component_count];
            for v in 0..self.n() {
                let c = self.component[v];
                if !seen[c] {
                    seen[c] = true;
                    roots[c] = self.rotations[v]
                        .iter()
                        .enumerate()
                        .min_by_key(|&(_, &w)| w)
                        .map(|(i, _)| self.offsets[v] + i);
                }
            }
            roots
        };
        skel_roots
            .iter()
            .zip(&self.outer_roots)
            .all(|(d, r)| match (d, r) {
                (Some(d), Some(r)) => self.faces.dart_face[*d] == self.faces.dart_face[*r],
                _ => true,
            })
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.component[v]
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comps = vec![Vec::new(); self.component_count];
        for v in 0..self.n() {
            comps[self.component[v]].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    /// Classifies the outer boundary.
    pub fn classify_boundary(&self) -> BoundaryClass {
        if self.component_count > 1 {
            return BoundaryClass::Disconnected(self.components());
        }
        if self.faces.len() <= 1 {
            return BoundaryClass::NoInternalFaces;
        }
        let walk = self.outer_face().expect("non-empty graph").walk();
        let mut seen = vec![0u32; self.n()];
        for d in walk {
            seen[d.tail] += 1;
        }
        if let Some(v) = seen.iter().position(|&k| k >= 2) {
            return BoundaryClass::WalkWithCutVertex(v);
        }
        BoundaryClass::Cycle(walk.iter().map(|d| d.tail).collect())
    }

    /// Edges joining two non-consecutive vertices of the outer cycle.
    pub fn chords_of_outer_cycle(&self) -> Result<Vec<(Vertex, Vertex)>, GraphError> {
        let BoundaryClass::Cycle(cycle) = self.classify_boundary() else {
            return Err(GraphError::NotACycleBoundary);
        };
        let len = cycle.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        let chords = self
            .edges()
            .filter(|&(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                if a == usize::MAX || b == usize::MAX {
                    return false;
                }
                let gap = a.abs_diff(b);
                gap != 1 && gap != len - 1
            })
            .collect();
        Ok(chords)
    }

    /// Merges the faces of `self` that become one face once the vertices
    /// outside `keep` are deleted.
    fn merged_faces(&self, keep: &[bool]) -> UnionFind {
        let mut uf = UnionFind::new(self.faces.len());
        for id in 0..self.dart_count() {
            let rev = self.reverse[id];
            if id > rev {
                continue;
            }
            let tail = self.dart(id).tail;
            let head = self.dart(rev).tail;
            if !(keep[tail] && keep[head]) {
                uf.union(self.faces.dart_face[id], self.faces.dart_face[rev]);
            }
        }
        uf
    }

    /// `y` together with every vertex drawn strictly inside an internal face
    /// of the embedded subgraph induced by `y`.
    pub fn interior_closure(&self, y: &[Vertex]) -> Vec<Vertex> {
        let mut keep = vec![false; self.n()];
        for &v in y {
            keep[v] = true;
        }
        let Some(outer) = self.faces.outer else {
            return Vec::new();
        };
        let mut uf = self.merged_faces(&keep);
        let outer_class = uf.find(outer);
        (0..self.n())
            .filter(|&w| {
                keep[w] || {
                    let class = if self.degree(w) == 0 {
                        outer_class
                    } else {
                        uf.find(self.faces.dart_face[self.offsets[w]])
                    };
                    class != outer_class
                }
            })
            .collect()
    }

    /// The subgraph induced by `keep` with the inherited embedding.
    ///
    /// Each component's outer face is the subgraph face that contains the
    /// parent's outer face. A component that ends up enclosed by another one
    /// is flattened into the outer face, which the representation requires.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> InducedSubgraph {
        let mut mask = vec![false; self.n()];
        for &v in keep {
            mask[v] = true;
        }
        self.induced_by_mask(&mask)
    }

    pub fn induced_by_mask(&self, mask: &[bool]) -> InducedSubgraph {
        let labels: Vec<Vertex> = (0..self.n()).filter(|&v| mask[v]).collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let mut parent_dart = Vec::new();
        let rotations: Vec<Vec<Vertex>> = labels
            .iter()
            .map(|&v| {
                let mut rot = Vec::with_capacity(self.degree(v));
                for (i, &w) in self.rotations[v].iter().enumerate() {
                    if mask[w] {
                        rot.push(local[w]);
                        parent_dart.push(self.offsets[v] + i);
                    }
                }
                rot
            })
            .collect();

        let skel =
            Skeleton::new(rotations).expect("an induced subgraph of a valid embedding is valid");
        let orbits = skel.orbits();
        debug_assert!(skel.check_euler(&orbits).is_ok());

        let mut roots = vec![None; skel.component_count];
        if let Some(outer) = self.faces.outer {
            let mut uf = self.merged_faces(mask);
            let outer_class = uf.find(outer);
            let class: Vec<usize> = orbits
                .list
                .iter()
                .map(|orbit| uf.find(self.faces.dart_face[parent_dart[orbit[0]]]))
                .collect();
            let orbit_comp = |o: usize| skel.component[skel.tails[orbits.list[o][0]]];
            for (o, orbit) in orbits.list.iter().enumerate() {
                let comp = orbit_comp(o);
                if class[o] == outer_class {
                    roots[comp] = Some(*orbit.iter().min().expect("orbits are non-empty"));
                }
            }
            for (comp, root) in roots.iter_mut().enumerate() {
                if root.is_some() {
                    continue;
                }
                let mine: Vec<usize> = (0..orbits.list.len())
                    .filter(|&o| orbit_comp(o) == comp)
                    .collect();
                let shared = mine.iter().copied().find(|&o| {
                    (0..orbits.list.len()).any(|p| orbit_comp(p) != comp && class[p] == class[o])
                });
                *root = shared.or(mine.first().copied()).map(|o| orbits.list[o][0]);
            }
        }
        let graph = skel.finish(orbits, roots);
        InducedSubgraph { graph, labels }
    }

    /// Splits along a cut vertex or the endpoints of a chord.
    ///
    /// `Y` is the separator plus the component of `G - sep` meeting `anchor`
    /// (otherwise the smallest-indexed component touching the outer face).
    /// Returns `(Y', Z)` where `Y'` is the interior closure of `Y` and
    /// `Z = (V \ Y') ∪ sep`.
    pub fn split_at_separator(
        &self,
        sep: &[Vertex],
        anchor: &[Vertex],
    ) -> Result<(Vec<Vertex>, Vec<Vertex>), GraphError> {
        let n = self.n();
        if sep.is_empty()
            || sep.len() > 2
            || sep.iter().any(|&s| s >= n)
            || (sep.len() == 2 && sep[0] == sep[1])
        {
            return Err(GraphError::NotASeparator(sep.to_vec()));
        }
        let mut removed = vec![false; n];
        for &s in sep {
            removed[s] = true;
        }
        let mut comp = vec![usize::MAX; n];
        let mut comps: Vec<Vec<Vertex>> = Vec::new();
        for s in 0..n {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for &y in &self.rotations[x] {
                    if !removed[y] && comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            comps.push(members);
        }
        if comps.len() < 2 {
            return Err(GraphError::NotASeparator(sep.to_vec()));
        }
        let chosen = anchor
            .iter()
            .find(|&&a| a < n && !removed[a])
            .map(|&a| comp[a])
            .or_else(|| {
                (0..n)
                    .find(|&v| !removed[v] && self.on_outer[v])
                    .map(|v| comp[v])
            })
            .unwrap_or(0);
        let mut y: Vec<Vertex> = sep.to_vec();
        y.extend(&comps[chosen]);
        let y_prime = self.interior_closure(&y);
        let mut in_y_prime = vec![false; n];
        for &v in &y_prime {
            in_y_prime[v] = true;
        }
        let z = (0..n).filter(|&v| !in_y_prime[v] || removed[v]).collect();
        Ok((y_prime, z))
    }
}
