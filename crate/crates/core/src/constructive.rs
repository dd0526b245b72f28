//! Constructive FUM 4-coloring for plane graphs whose vertices of degree at
//! least 4 induce a star forest.
//!
//! [`extend_precoloring`] extends a precolored path of at most two outer
//! vertices to a coloring with colors `{1,2,3,4}` in which no outer vertex
//! gets color 4 and every internal face has a unique maximum. It recurses on
//! smaller graphs: it splits disconnected graphs, cut vertices and chords,
//! colors trees and cycles directly, and otherwise deletes a small set of
//! vertices next to the outer face, colors the rest recursively and gives
//! color 4 to one deleted vertex `u` whose faces all become outer in the
//! child. [`fum_color_star_forest`] deletes one outer vertex, extends the
//! empty precoloring on the rest and colors the deleted vertex 4.
//!
//! Every level verifies its own output and every recursive call checks that
//! the child problem still satisfies the hypothesis, so a bug surfaces as an
//! error instead of a wrong coloring.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    compute_xset, verify_fum, verify_lemma_contract, Color, Coloring, ColoringError, FaceScope,
    PathError, PrecoloredPath, XMode,
};
use crate::format::rotation_text;
use crate::plane_graph::{BoundaryClass, InducedSubgraph, PlaneGraph, Vertex};

/// Which reduction produced a trace step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    /// Deletes one outer vertex, colors the rest, then gives it color 4.
    RemoveOuterVertex,
    Components,
    TreeBase,
    CutVertex,
    Chord,
    CycleBase,
    LowDegreeVertex,
    ThreeHighOnC,
    TwoTwoP,
    FourCycleC,
    TwoVertexInP,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One applied reduction. Vertices are labels of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub case: Case,
    pub depth: usize,
    /// The vertices the reduction is about (separator, deleted vertices, ...).
    pub vertices: Vec<Vertex>,
    /// Colors fixed by this step, including precolorings handed to children.
    pub assigned: Vec<(Vertex, Color)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub steps: Vec<TraceStep>,
}

impl CaseTrace {
    /// Rebuilds the coloring from the precoloring and the recorded assignments.
    pub fn replay(&self, n: usize, p: &PrecoloredPath) -> Vec<Color> {
        let mut colors = vec![0; n];
        for &(v, c) in p.entries() {
            colors[v] = c;
        }
        for step in &self.steps {
            for &(v, c) in &step.assigned {
                colors[v] = c;
            }
        }
        colors
    }

    pub fn cases(&self) -> impl Iterator<Item = Case> + '_ {
        self.steps.iter().map(|s| s.case)
    }
}

impl fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(
                f,
                "{:indent$}{} {:?}",
                "",
                step.case,
                step.vertices,
                indent = 2 * step.depth
            )?;
            for (v, c) in &step.assigned {
                write!(f, " {v}={c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("the high-degree vertices {members:?} do not induce a star forest")]
    HypothesisViolated { members: Vec<Vertex> },
    #[error("invalid precoloring: {0}")]
    InvalidPrecoloring(#[from] PathError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("{case} at depth {depth}: child problem violates the hypothesis ({reason})")]
    TransferFailed {
        case: Case,
        depth: usize,
        reason: String,
    },
    #[error("{case} at depth {depth}: produced coloring fails its contract")]
    ChildContractFailure {
        case: Case,
        depth: usize,
        coloring: Coloring,
    },
    #[error("no reduction applies at depth {depth}; problem:\n{dump}")]
    InternalCaseExhaustion { depth: usize, dump: String },
}

/// A coloring together with the reductions that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub coloring: Coloring,
    pub trace: CaseTrace,
}

/// Colors `g` with colors `{1,2,3,4}` so that every face has a unique maximum.
pub fn fum_color_star_forest(g: &PlaneGraph) -> Result<Outcome, ConstructError> {
    let x = compute_xset(g, &PrecoloredPath::empty(), XMode::Theorem);
    if !x.shape.star_forest {
        return Err(ConstructError::HypothesisViolated { members: x.members });
    }
    let Some(&v) = g.outer_vertices().first() else {
        return Ok(Outcome {
            coloring: Coloring::new(Vec::new())?,
            trace: CaseTrace::default(),
        });
    };
    with_stack(g.n(), || {
        let mut b = Builder::default();
        let keep: Vec<Vertex> = (0..g.n()).filter(|&w| w != v).collect();
        let sub = g.induced_subgraph(&keep);
        b.steps.push(TraceStep {
            case: Case::RemoveOuterVertex,
            depth: 0,
            vertices: vec![v],
            assigned: vec![(v, 4)],
        });
        let mut colors = vec![0; g.n()];
        let child = b.extend(&sub.graph, &PrecoloredPath::empty(), &sub.labels, 1)?;
        for (i, &w) in sub.labels.iter().enumerate() {
            colors[w] = child[i];
        }
        colors[v] = 4;
        let coloring = Coloring::new(colors)?;
        if !verify_fum(g, &coloring, FaceScope::All)?.passed() {
            return Err(ConstructError::ChildContractFailure {
                case: Case::RemoveOuterVertex,
                depth: 0,
                coloring,
            });
        }
        Ok(Outcome {
            coloring,
            trace: CaseTrace { steps: b.steps },
        })
    })
}

/// Extends the precolored outer path `p` to all of `g` (see the module docs).
pub fn extend_precoloring(g: &PlaneGraph, p: &PrecoloredPath) -> Result<Outcome, ConstructError> {
    p.check_on(g)?;
    let x = compute_xset(g, p, XMode::Lemma);
    if !x.shape.star_forest {
        return Err(ConstructError::HypothesisViolated { members: x.members });
    }
    with_stack(g.n(), || {
        let mut b = Builder::default();
        let labels: Vec<Vertex> = (0..g.n()).collect();
        let colors = b.extend(g, p, &labels, 0)?;
        Ok(Outcome {
            coloring: Coloring::new(colors)?,
            trace: CaseTrace { steps: b.steps },
        })
    })
}

/// Whether a child problem on the induced subgraph `child` with precoloring
/// `child_p` (in child labels) still satisfies the hypothesis: each newly
/// precolored vertex of child degree 3 lost a neighbor, and the child's
/// high-degree set induces a star forest.
pub fn check_transfer(
    parent: &PlaneGraph,
    parent_p: &PrecoloredPath,
    child: &InducedSubgraph,
    child_p: &PrecoloredPath,
) -> bool {
    let degrees_ok = child_p.vertices().all(|w| {
        let pw = child.labels[w];
        parent_p.contains(pw)
            || child.graph.degree(w) != 3
            || child.graph.degree(w) < parent.degree(pw)
    });
    degrees_ok
        && compute_xset(&child.graph, child_p, XMode::Lemma)
            .shape
            .star_forest
}

fn with_stack<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    if n <= 64 {
        return f();
    }
    let size = (16 << 20) + n * (64 << 10);
    std::thread::scope(|s| {
        let handle = std::thread::Builder::new()
            .stack_size(size)
            .spawn_scoped(s, f)
            .expect("spawn coloring thread");
        match handle.join() {
            Ok(v) => v,
            Err(panic) => std::panic::resume_unwind(panic),
        }
    })
}

fn smallest_missing(used: &[Color]) -> Color {
    (1..=3)
        .find(|c| !used.contains(c))
        .expect("at most two colors are excluded")
}

#[derive(Default)]
struct Builder {
    steps: Vec<TraceStep>,
}

/// The outer cycle of a graph that reached the cycle-based cases.
struct OuterCycle {
    order: Vec<Vertex>,
    on: Vec<bool>,
}

impl OuterCycle {
    fn new(n: usize, order: Vec<Vertex>) -> Self {
        let mut on = vec![false; n];
        for &v in &order {
            on[v] = true;
        }
        OuterCycle { order, on }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    fn index(&self, v: Vertex) -> usize {
        self.order
            .iter()
            .position(|&w| w == v)
            .expect("vertex on the cycle")
    }

    /// The vertex `offset` steps after `v` in walk order.
    fn after(&self, v: Vertex, offset: usize) -> Vertex {
        self.order[(self.index(v) + offset) % self.len()]
    }

    fn before(&self, v: Vertex) -> Vertex {
        self.after(v, self.len() - 1)
    }
}

/// The smallest vertex outside `removed` and off the cycle that lies on the
/// outer face once `removed` is deleted.
fn outer_off_cycle(g: &PlaneGraph, removed: &[Vertex], cycle: &OuterCycle) -> Option<Vertex> {
    let mut mask = vec![true; g.n()];
    for &r in removed {
        mask[r] = false;
    }
    let sub = g.induced_by_mask(&mask);
    sub.graph
        .outer_vertices()
        .iter()
        .map(|&w| sub.labels[w])
        .filter(|&w| !cycle.on[w])
        .min()
}

impl Builder {
    fn push(&mut self, case: Case, depth: usize, labels: &[Vertex], vertices: &[Vertex]) -> usize {
        self.steps.push(TraceStep {
            case,
            depth,
            vertices: vertices.iter().map(|&v| labels[v]).collect(),
            assigned: Vec::new(),
        });
        self.steps.len() - 1
    }

    fn assign(&mut self, step: usize, labels: &[Vertex], v: Vertex, c: Color) {
        self.steps[step].assigned.push((labels[v], c));
    }

    /// Solves the child problem on `g[keep]` with precoloring `pre` (parent
    /// labels) and writes its colors into `colors`.
    #[allow(clippy::too_many_arguments)]
    fn child(
        &mut self,
        case: Case,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        keep: &[bool],
        pre: &[(Vertex, Color)],
        colors: &mut [Color],
    ) -> Result<(), ConstructError> {
        let sub = g.induced_by_mask(keep);
        let entries = pre
            .iter()
            .map(|&(v, c)| sub.local(v).map(|w| (w, c)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| transfer_failed(case, depth, "precolored vertex was deleted"))?;
        let child_p = PrecoloredPath::new(entries)
            .map_err(|e| transfer_failed(case, depth, &e.to_string()))?;
        child_p
            .check_on(&sub.graph)
            .map_err(|e| transfer_failed(case, depth, &e.to_string()))?;
        if !check_transfer(g, p, &sub, &child_p) {
            return Err(transfer_failed(
                case,
                depth,
                "high-degree set is not a star forest",
            ));
        }
        let child_labels: Vec<Vertex> = sub.labels.iter().map(|&v| labels[v]).collect();
        let child_colors = self.extend(&sub.graph, &child_p, &child_labels, depth + 1)?;
        for (i, &v) in sub.labels.iter().enumerate() {
            colors[v] = child_colors[i];
        }
        Ok(())
    }

    fn extend(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
    ) -> Result<Vec<Color>, ConstructError> {
        let n = g.n();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut colors = vec![0; n];
        let case = self.dispatch(g, p, labels, depth, &mut colors)?;
        let coloring = Coloring::new(colors)?;
        if !verify_lemma_contract(g, p, &coloring)?.passed() {
            return Err(ConstructError::ChildContractFailure {
                case,
                depth,
                coloring,
            });
        }
        Ok(coloring.into_vec())
    }

    fn dispatch(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        colors: &mut [Color],
    ) -> Result<Case, ConstructError> {
        let n = g.n();
        let cycle = match g.classify_boundary() {
            BoundaryClass::Disconnected(components) => {
                let all: Vec<Vertex> = (0..n).collect();
                self.push(Case::Components, depth, labels, &all);
                for comp in components {
                    let mut keep = vec![false; n];
                    for &v in &comp {
                        keep[v] = true;
                    }
                    let pre: Vec<(Vertex, Color)> = p
                        .entries()
                        .iter()
                        .copied()
                        .filter(|&(v, _)| keep[v])
                        .collect();
                    self.child(Case::Components, g, p, labels, depth, &keep, &pre, colors)?;
                }
                return Ok(Case::Components);
            }
            BoundaryClass::NoInternalFaces => {
                self.tree_base(g, p, labels, depth, colors);
                return Ok(Case::TreeBase);
            }
            BoundaryClass::WalkWithCutVertex(v) => {
                self.split(Case::CutVertex, g, p, labels, depth, &[v], colors)?;
                return Ok(Case::CutVertex);
            }
            BoundaryClass::Cycle(order) => OuterCycle::new(n, order),
        };
        let chords = g.chords_of_outer_cycle().expect("boundary is a cycle");
        if let Some(&(a, b)) = chords.iter().min() {
            self.split(Case::Chord, g, p, labels, depth, &[a, b], colors)?;
            return Ok(Case::Chord);
        }
        if cycle.len() == n {
            self.cycle_base(g, p, labels, depth, &cycle, colors);
            return Ok(Case::CycleBase);
        }
        if self.low_degree_vertex(g, p, labels, depth, &cycle, colors)? {
            return Ok(Case::LowDegreeVertex);
        }
        if self.three_high_on_c(g, p, labels, depth, &cycle, colors)? {
            return Ok(Case::ThreeHighOnC);
        }
        if self.two_two_p(g, p, labels, depth, &cycle, colors)? {
            return Ok(Case::TwoTwoP);
        }
        if self.four_cycle_c(g, p, labels, depth, &cycle, colors)? {
            return Ok(Case::FourCycleC);
        }
        if self.two_vertex_in_p(g, p, labels, depth, &cycle, colors)? {
            return Ok(Case::TwoVertexInP);
        }
        let dump = rotation_text(g, None, Some(p));
        Err(ConstructError::InternalCaseExhaustion { depth, dump })
    }

    /// Greedy proper coloring from `{1,2,3}` in breadth-first order from `p`.
    fn tree_base(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        colors: &mut [Color],
    ) {
        let step = self.push(Case::TreeBase, depth, labels, &[]);
        let mut queue: std::collections::VecDeque<Vertex> = p.vertices().collect();
        for &(v, c) in p.entries() {
            colors[v] = c;
        }
        if queue.is_empty() {
            colors[0] = 1;
            queue.push_back(0);
        }
        while let Some(x) = queue.pop_front() {
            for &y in g.rotation(x) {
                if colors[y] == 0 {
                    let used: Vec<Color> = g.rotation(y).iter().map(|&z| colors[z]).collect();
                    colors[y] = smallest_missing(&used);
                    queue.push_back(y);
                }
            }
        }
        for (v, &c) in colors[..g.n()].iter().enumerate() {
            self.assign(step, labels, v, c);
        }
    }

    /// Splits at a cut vertex or chord: the side holding `p` first, then the
    /// rest with the separator precolored.
    #[allow(clippy::too_many_arguments)]
    fn split(
        &mut self,
        case: Case,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        sep: &[Vertex],
        colors: &mut [Color],
    ) -> Result<(), ConstructError> {
        let anchor: Vec<Vertex> = p.vertices().filter(|v| !sep.contains(v)).collect();
        let (y, z) = g
            .split_at_separator(sep, &anchor)
            .map_err(|e| transfer_failed(case, depth, &e.to_string()))?;
        self.push(case, depth, labels, sep);
        let n = g.n();
        let mut keep = vec![false; n];
        for &v in &y {
            keep[v] = true;
        }
        self.child(case, g, p, labels, depth, &keep, p.entries(), colors)?;
        let mut keep = vec![false; n];
        for &v in &z {
            keep[v] = true;
        }
        let pre: Vec<(Vertex, Color)> = sep.iter().map(|&s| (s, colors[s])).collect();
        self.child(case, g, p, labels, depth, &keep, &pre, colors)
    }

    /// Colors a cycle: one vertex gets 3 and the rest alternate 1 and 2.
    fn cycle_base(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) {
        let top = p
            .entries()
            .iter()
            .find(|&&(_, c)| c == 3)
            .map(|&(v, _)| v)
            .unwrap_or_else(|| {
                *cycle
                    .order
                    .iter()
                    .filter(|&&v| !p.contains(v))
                    .min()
                    .expect("a cycle has a vertex off p")
            });
        let step = self.push(Case::CycleBase, depth, labels, &[top]);
        let path: Vec<Vertex> = (1..cycle.len()).map(|i| cycle.after(top, i)).collect();
        let (anchor, anchor_color) = path
            .iter()
            .enumerate()
            .find_map(|(i, &v)| p.color_of(v).map(|c| (i, c)))
            .unwrap_or((0, 1));
        colors[top] = 3;
        for (i, &v) in path.iter().enumerate() {
            colors[v] = if i.abs_diff(anchor) % 2 == 0 {
                anchor_color
            } else {
                3 - anchor_color
            };
        }
        for (v, &c) in colors[..g.n()].iter().enumerate() {
            self.assign(step, labels, v, c);
        }
    }

    fn low_degree_vertex(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) -> Result<bool, ConstructError> {
        let Some(v) = cycle
            .order
            .iter()
            .copied()
            .filter(|&v| !p.contains(v) && g.degree(v) <= 3)
            .min()
        else {
            return Ok(false);
        };
        let u = if g.degree(v) == 3 {
            g.rotation(v).iter().copied().find(|&w| !cycle.on[w])
        } else {
            outer_off_cycle(g, &[v], cycle)
        };
        let Some(u) = u else { return Ok(false) };
        let step = self.push(Case::LowDegreeVertex, depth, labels, &[v, u]);
        let mut keep = vec![true; g.n()];
        keep[u] = false;
        keep[v] = false;
        self.child(
            Case::LowDegreeVertex,
            g,
            p,
            labels,
            depth,
            &keep,
            p.entries(),
            colors,
        )?;
        colors[u] = 4;
        colors[v] = smallest_missing(&[colors[cycle.before(v)], colors[cycle.after(v, 1)]]);
        self.assign(step, labels, u, 4);
        self.assign(step, labels, v, colors[v]);
        Ok(true)
    }

    /// Three high-degree vertices `v1 v2 v3` on the outer cycle after the
    /// precolored 2-vertices `p1 p2`, in walk order `p1 p2 v1 v2 v3`.
    fn three_high_on_c(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) -> Result<bool, ConstructError> {
        if p.is_empty() || cycle.len() != p.len() + 3 || p.vertices().any(|v| g.degree(v) != 2) {
            return Ok(false);
        }
        let entries = p.entries();
        let (p1, p2) = match entries {
            [(a, _)] => (*a, *a),
            [(a, _), (b, _)] if cycle.after(*a, 1) == *b => (*a, *b),
            [(a, _), (b, _)] => (*b, *a),
            _ => return Ok(false),
        };
        let (v2, v3) = (cycle.after(p2, 2), cycle.after(p2, 3));
        let Some(u) = outer_off_cycle(g, &[p1, p2], cycle) else {
            return Ok(false);
        };
        let step = self.push(Case::ThreeHighOnC, depth, labels, &[p1, p2, u]);
        let c1 = p.color_of(p1).expect("p1 is precolored");
        let c2 = p.color_of(p2).expect("p2 is precolored");
        let c3 = smallest_missing(&[c1, c2]);
        self.assign(step, labels, v2, c2);
        self.assign(step, labels, v3, c3);
        self.assign(step, labels, u, 4);
        let mut keep = vec![true; g.n()];
        for r in [p1, p2, u] {
            keep[r] = false;
        }
        self.child(
            Case::ThreeHighOnC,
            g,
            p,
            labels,
            depth,
            &keep,
            &[(v2, c2), (v3, c3)],
            colors,
        )?;
        colors[p1] = c1;
        colors[p2] = c2;
        colors[u] = 4;
        Ok(true)
    }

    fn two_two_p(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) -> Result<bool, ConstructError> {
        let [(p1, c1), (p2, c2)] = p.entries()[..] else {
            return Ok(false);
        };
        if g.degree(p1) != 2 || g.degree(p2) != 2 {
            return Ok(false);
        }
        let other = |x: Vertex, y: Vertex| {
            g.rotation(x)
                .iter()
                .copied()
                .find(|&w| w != y)
                .expect("2-vertex")
        };
        let (v1, v2) = (other(p1, p2), other(p2, p1));
        if v1 != v2 && !g.has_edge(v1, v2) {
            return Ok(false);
        }
        let Some(u) = outer_off_cycle(g, &[p1, p2], cycle) else {
            return Ok(false);
        };
        let step = self.push(Case::TwoTwoP, depth, labels, &[p1, p2, u]);
        let pre = if v1 == v2 {
            vec![(v1, smallest_missing(&[c1, c2]))]
        } else {
            let d1 = smallest_missing(&[c1]);
            vec![(v1, d1), (v2, smallest_missing(&[c2, d1]))]
        };
        for &(v, c) in &pre {
            self.assign(step, labels, v, c);
        }
        self.assign(step, labels, u, 4);
        let mut keep = vec![true; g.n()];
        for r in [p1, p2, u] {
            keep[r] = false;
        }
        self.child(Case::TwoTwoP, g, p, labels, depth, &keep, &pre, colors)?;
        colors[p1] = c1;
        colors[p2] = c2;
        colors[u] = 4;
        Ok(true)
    }

    /// Outer 4-cycle `p1 p2 v1 v2` where only `p2` is a 2-vertex.
    fn four_cycle_c(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) -> Result<bool, ConstructError> {
        let [(a, ca), (b, cb)] = p.entries()[..] else {
            return Ok(false);
        };
        if cycle.len() != 4 || (g.degree(a) == 2) == (g.degree(b) == 2) {
            return Ok(false);
        }
        let ((p1, c1), (p2, c2)) = if g.degree(b) == 2 {
            ((a, ca), (b, cb))
        } else {
            ((b, cb), (a, ca))
        };
        let v2 = if cycle.after(p1, 1) == p2 {
            cycle.before(p1)
        } else {
            cycle.after(p1, 1)
        };
        let Some(u) = outer_off_cycle(g, &[p2], cycle) else {
            return Ok(false);
        };
        let step = self.push(Case::FourCycleC, depth, labels, &[p2, u]);
        self.assign(step, labels, v2, c2);
        self.assign(step, labels, u, 4);
        let mut keep = vec![true; g.n()];
        keep[p2] = false;
        keep[u] = false;
        self.child(
            Case::FourCycleC,
            g,
            p,
            labels,
            depth,
            &keep,
            &[(p1, c1), (v2, c2)],
            colors,
        )?;
        colors[p2] = c2;
        colors[u] = 4;
        Ok(true)
    }

    fn two_vertex_in_p(
        &mut self,
        g: &PlaneGraph,
        p: &PrecoloredPath,
        labels: &[Vertex],
        depth: usize,
        cycle: &OuterCycle,
        colors: &mut [Color],
    ) -> Result<bool, ConstructError> {
        let Some(&(pv, cp)) = p.entries().iter().find(|&&(v, _)| g.degree(v) == 2) else {
            return Ok(false);
        };
        let (a, b) = (g.rotation(pv)[0], g.rotation(pv)[1]);
        let (v1, v2) = match (p.contains(a), p.contains(b)) {
            (false, true) => (a, b),
            (true, false) => (b, a),
            _ => (a.min(b), a.max(b)),
        };
        if !g.has_edge(v1, v2) {
            return Ok(false);
        }
        let Some(u) = outer_off_cycle(g, &[pv], cycle) else {
            return Ok(false);
        };
        let step = self.push(Case::TwoVertexInP, depth, labels, &[pv, u]);
        let d2 = p.color_of(v2).unwrap_or_else(|| smallest_missing(&[cp]));
        let d1 = smallest_missing(&[cp, d2]);
        self.assign(step, labels, v1, d1);
        self.assign(step, labels, v2, d2);
        self.assign(step, labels, u, 4);
        let mut keep = vec![true; g.n()];
        keep[pv] = false;
        keep[u] = false;
        self.child(
            Case::TwoVertexInP,
            g,
            p,
            labels,
            depth,
            &keep,
            &[(v1, d1), (v2, d2)],
            colors,
        )?;
        colors[pv] = cp;
        colors[u] = 4;
        Ok(true)
    }
}

fn transfer_failed(case: Case, depth: usize, reason: &str) -> ConstructError {
    ConstructError::TransferFailed {
        case,
        depth,
        reason: reason.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_lemma_contract;
    use crate::families;

    fn path(entries: &[(Vertex, Color)]) -> PrecoloredPath {
        PrecoloredPath::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn c5_with_top_precolored() {
        let out = extend_precoloring(&families::cycle(5), &path(&[(0, 3)])).unwrap();
        assert_eq!(out.coloring.colors(), &[3, 1, 2, 1, 2]);
        assert_eq!(out.trace.cases().collect::<Vec<_>>(), vec![Case::CycleBase]);
    }

    #[test]
    fn bowtie_splits_at_cut_vertex() {
        let g = families::bowtie();
        let p = path(&[(0, 1)]);
        let out = extend_precoloring(&g, &p).unwrap();
        assert!(verify_lemma_contract(&g, &p, &out.coloring)
            .unwrap()
            .passed());
        let cases: Vec<Case> = out.trace.cases().collect();
        assert_eq!(
            cases,
            vec![Case::CutVertex, Case::CycleBase, Case::CycleBase]
        );
    }

    #[test]
    fn path_uses_tree_base() {
        let out = extend_precoloring(&families::path(4), &path(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(out.trace.cases().collect::<Vec<_>>(), vec![Case::TreeBase]);
        assert!(out.coloring.colors().iter().all(|&c| c <= 3));
    }

    #[test]
    fn theorem_examples() {
        for g in [
            families::k4(),
            families::cube(),
            families::wheel(7),
            families::star(4),
        ] {
            let out = fum_color_star_forest(&g).unwrap();
            assert!(out.coloring.max_color() <= 4);
            assert!(verify_fum(&g, &out.coloring, FaceScope::All)
                .unwrap()
                .passed());
        }
        assert!(matches!(
            fum_color_star_forest(&families::octahedron()).unwrap_err(),
            ConstructError::HypothesisViolated { .. }
        ));
    }

    #[test]
    fn replay_reproduces_coloring() {
        let g = families::wheel(6);
        let out = fum_color_star_forest(&g).unwrap();
        assert_eq!(
            out.trace.replay(g.n(), &PrecoloredPath::empty()),
            out.coloring.colors()
        );
    }

    #[test]
    fn rejects_bad_precoloring() {
        assert!(matches!(
            extend_precoloring(&families::k4(), &path(&[(3, 1)])).unwrap_err(),
            ConstructError::InvalidPrecoloring(PathError::NotOnOuterFace(3))
        ));
    }

    #[test]
    fn transfer_examples() {
        let g = families::c4_with_chord();
        let (_, z) = g.split_at_separator(&[0, 2], &[1]).unwrap();
        let sub = g.induced_subgraph(&z);
        let chord = path(&[(sub.local(0).unwrap(), 1), (sub.local(2).unwrap(), 2)]);
        assert!(check_transfer(&g, &PrecoloredPath::empty(), &sub, &chord));

        let k4 = families::k4();
        let same = k4.induced_subgraph(&[0, 1, 2, 3]);
        assert!(!check_transfer(
            &k4,
            &PrecoloredPath::empty(),
            &same,
            &path(&[(0, 1)])
        ));
        assert!(check_transfer(
            &k4,
            &path(&[(0, 1)]),
            &same,
            &path(&[(0, 1)])
        ));
    }
}
