//! Exhaustive backtracking search for FUM colorings.
//!
//! Vertices are colored in breadth-first order from the outer face with colors
//! tried in ascending order. A branch is cut as soon as an edge is
//! monochromatic, a fully colored face lacks a unique maximum, or a face's
//! current maximum is attained twice and no uncolored vertex of the face can
//! still exceed it.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    verify_extension, verify_fum, Color, Coloring, ColoringError, FaceScope, PathError,
    PrecoloredPath,
};
use crate::plane_graph::{PlaneGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("the color budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("solver produced a witness that fails verification: {0}")]
    UnsoundWitness(Coloring),
}

/// Search limits; a search that hits either one reports a timeout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 200_000_000,
            max_time: Some(Duration::from_secs(60)),
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_nodes: u64::MAX,
            max_time: None,
        }
    }
}

/// Which contract a coloring must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every face, including the outer one, has a unique maximum.
    AllFaces,
    /// Extends the precoloring, keeps the outer face within `{1,2,3}`, and
    /// gives every internal face a unique maximum.
    Lemma(PrecoloredPath),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Colorable(Coloring),
    NotColorable,
    Timeout,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(serialize_with = "micros")]
    pub elapsed: Duration,
}

fn micros<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_micros())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub stats: SolveStats,
}

/// Outcome of a chromatic-number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiValue {
    Exact {
        value: Color,
        witness: Coloring,
    },
    /// Exhaustively not colorable with `k_max` colors.
    Exceeds {
        k_max: Color,
    },
    /// A search at budget `at` hit the limits before any smaller budget succeeded.
    Unknown {
        at: Color,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub value: ChiValue,
    pub stats: SolveStats,
}

struct Budget {
    start: Instant,
    nodes: u64,
    limits: Limits,
    exhausted: bool,
}

impl Budget {
    fn new(limits: Limits) -> Self {
        Budget {
            start: Instant::now(),
            nodes: 0,
            limits,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(t) = self.limits.max_time {
                if self.start.elapsed() > t {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

struct Search<'a> {
    g: &'a PlaneGraph,
    order: Vec<Vertex>,
    caps: Vec<Color>,
    fixed: Vec<Color>,
    face_vertices: Vec<&'a [Vertex]>,
    faces_of: Vec<Vec<usize>>,
    color: Vec<Color>,
}

impl<'a> Search<'a> {
    fn new(g: &'a PlaneGraph, k: Color, mode: &Mode, order: Option<&[Vertex]>) -> Self {
        let n = g.n();
        let mut caps = vec![k; n];
        let mut fixed = vec![0; n];
        let scope = match mode {
            Mode::AllFaces => FaceScope::All,
            Mode::Lemma(p) => {
                for &v in g.outer_vertices() {
                    caps[v] = k.min(3);
                }
                for &(v, c) in p.entries() {
                    fixed[v] = c;
                }
                FaceScope::Internal
            }
        };
        let faces = g.faces();
        let mut face_vertices = Vec::new();
        let mut faces_of = vec![Vec::new(); n];
        for f in 0..faces.len() {
            if scope == FaceScope::Internal && faces.is_outer(f) {
                continue;
            }
            let vs = faces.faces()[f].vertices();
            for &v in vs {
                faces_of[v].push(face_vertices.len());
            }
            face_vertices.push(vs);
        }
        let order = match order {
            Some(o) => o.to_vec(),
            None => search_order(g, mode),
        };
        Search {
            g,
            order,
            caps,
            fixed,
            face_vertices,
            faces_of,
            color: vec![0; n],
        }
    }

    /// Whether the faces around `v` can still get a unique maximum.
    fn faces_ok(&self, v: Vertex) -> bool {
        for &f in &self.faces_of[v] {
            let (mut max, mut count, mut open_cap) = (0, 0, 0);
            for &w in self.face_vertices[f] {
                let c = self.color[w];
                if c == 0 {
                    open_cap = open_cap.max(self.caps[w]);
                } else if c > max {
                    max = c;
                    count = 1;
                } else if c == max {
                    count += 1;
                }
            }
            if count >= 2 && open_cap <= max {
                return false;
            }
        }
        true
    }

    fn proper_at(&self, v: Vertex, c: Color) -> bool {
        self.g.rotation(v).iter().all(|&w| self.color[w] != c)
    }

    fn run(&mut self, depth: usize, budget: &mut Budget) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let choices: Vec<Color> = if self.fixed[v] != 0 {
            vec![self.fixed[v]]
        } else {
            (1..=self.caps[v]).collect()
        };
        for c in choices {
            if !budget.tick() {
                return false;
            }
            if !self.proper_at(v, c) {
                continue;
            }
            self.color[v] = c;
            if self.faces_ok(v) && self.run(depth + 1, budget) {
                return true;
            }
            self.color[v] = 0;
            if budget.exhausted {
                return false;
            }
        }
        false
    }
}

/// Precolored vertices first, then breadth-first from the outer face.
pub fn search_order(g: &PlaneGraph, mode: &Mode) -> Vec<Vertex> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let push = |v: Vertex, seen: &mut Vec<bool>, queue: &mut VecDeque<Vertex>| {
        if !seen[v] {
            seen[v] = true;
            queue.push_back(v);
        }
    };
    if let Mode::Lemma(p) = mode {
        for v in p.vertices() {
            push(v, &mut seen, &mut queue);
        }
    }
    if let Some(outer) = g.outer_face() {
        for walk in outer.walks() {
            for d in walk {
                push(d.tail, &mut seen, &mut queue);
            }
        }
        for &v in outer.vertices() {
            push(v, &mut seen, &mut queue);
        }
    }
    for s in 0..n {
        push(s, &mut seen, &mut queue);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in g.rotation(x) {
                push(y, &mut seen, &mut queue);
            }
        }
    }
    order
}

fn solve_with_budget(
    g: &PlaneGraph,
    k: Color,
    mode: &Mode,
    order: Option<&[Vertex]>,
    budget: &mut Budget,
) -> Result<SolveStatus, SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroBudget);
    }
    if let Mode::Lemma(p) = mode {
        p.check_on(g)?;
    }
    let mut search = Search::new(g, k, mode, order);
    if search.run(0, budget) {
        let witness = Coloring::new(search.color)?;
        let report = match mode {
            Mode::AllFaces => verify_fum(g, &witness, FaceScope::All)?,
            Mode::Lemma(p) => verify_extension(g, p, &witness, k)?,
        };
        if !report.passed() || witness.max_color() > k {
            return Err(SolverError::UnsoundWitness(witness));
        }
        return Ok(SolveStatus::Colorable(witness));
    }
    Ok(if budget.exhausted {
        SolveStatus::Timeout
    } else {
        SolveStatus::NotColorable
    })
}

/// Decides whether `g` has a coloring with colors `1..=k` meeting `mode`.
pub fn fum_colorable(
    g: &PlaneGraph,
    k: Color,
    mode: &Mode,
    limits: &Limits,
) -> Result<SolveResult, SolverError> {
    let mut budget = Budget::new(*limits);
    let status = solve_with_budget(g, k, mode, None, &mut budget)?;
    Ok(SolveResult {
        status,
        stats: budget.stats(),
    })
}

/// [`fum_colorable`] with an explicit vertex order (a permutation of the vertices).
pub fn fum_colorable_in_order(
    g: &PlaneGraph,
    k: Color,
    mode: &Mode,
    limits: &Limits,
    order: &[Vertex],
) -> Result<SolveResult, SolverError> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    assert!(
        sorted.iter().copied().eq(0..g.n()),
        "order must be a permutation of the vertices"
    );
    let mut budget = Budget::new(*limits);
    let status = solve_with_budget(g, k, mode, Some(order), &mut budget)?;
    Ok(SolveResult {
        status,
        stats: budget.stats(),
    })
}

/// The FUM chromatic number if it is at most `k_max`. Limits apply to the
/// whole computation.
pub fn chi_fum(g: &PlaneGraph, k_max: Color, limits: &Limits) -> Result<ChiResult, SolverError> {
    chi_fum_ordered(g, k_max, limits, None)
}

pub fn chi_fum_ordered(
    g: &PlaneGraph,
    k_max: Color,
    limits: &Limits,
    order: Option<&[Vertex]>,
) -> Result<ChiResult, SolverError> {
    if k_max == 0 {
        return Err(SolverError::ZeroBudget);
    }
    let mut budget = Budget::new(*limits);
    if g.n() == 0 {
        let value = ChiValue::Exact {
            value: 0,
            witness: Coloring::new(Vec::new())?,
        };
        return Ok(ChiResult {
            value,
            stats: budget.stats(),
        });
    }
    for k in 1..=k_max {
        match solve_with_budget(g, k, &Mode::AllFaces, order, &mut budget)? {
            SolveStatus::Colorable(witness) => {
                return Ok(ChiResult {
                    value: ChiValue::Exact { value: k, witness },
                    stats: budget.stats(),
                })
            }
            SolveStatus::Timeout => {
                return Ok(ChiResult {
                    value: ChiValue::Unknown { at: k },
                    stats: budget.stats(),
                })
            }
            SolveStatus::NotColorable => {}
        }
    }
    Ok(ChiResult {
        value: ChiValue::Exceeds { k_max },
        stats: budget.stats(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn chi(g: &PlaneGraph) -> Color {
        match chi_fum(g, 8, &Limits::default()).unwrap().value {
            ChiValue::Exact { value, .. } => value,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn c4_needs_three() {
        let c4 = families::cycle(4);
        let limits = Limits::default();
        assert_eq!(
            fum_colorable(&c4, 2, &Mode::AllFaces, &limits)
                .unwrap()
                .status,
            SolveStatus::NotColorable
        );
        assert!(matches!(
            fum_colorable(&c4, 3, &Mode::AllFaces, &limits)
                .unwrap()
                .status,
            SolveStatus::Colorable(_)
        ));
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&families::empty(1)), 1);
        assert_eq!(chi(&families::path(2)), 2);
        assert_eq!(chi(&families::k4()), 4);
        assert_eq!(chi(&families::cycle(6)), 3);
        assert_eq!(chi(&families::empty(0)), 0);
    }

    #[test]
    fn star_center_is_not_forced_to_one() {
        // Fixing the first searched vertex (the center) to color 1 would
        // force three colors here.
        assert_eq!(chi(&families::star(3)), 2);
    }

    #[test]
    fn lemma_mode_respects_precoloring() {
        let tri = families::triangle();
        let p = PrecoloredPath::new(vec![(0, 3)]).unwrap();
        let res = fum_colorable(&tri, 4, &Mode::Lemma(p), &Limits::default()).unwrap();
        let SolveStatus::Colorable(w) = res.status else {
            panic!("triangle extends")
        };
        assert_eq!(w.get(0), 3);
        assert!(w.colors().iter().all(|&c| c <= 3));
    }

    #[test]
    fn node_limit_reports_timeout() {
        let limits = Limits {
            max_nodes: 3,
            max_time: None,
        };
        let res = chi_fum(&families::cube(), 5, &limits).unwrap();
        assert!(matches!(res.value, ChiValue::Unknown { .. }));
    }

    #[test]
    fn zero_budget_is_rejected() {
        assert_eq!(
            fum_colorable(&families::k4(), 0, &Mode::AllFaces, &Limits::default()).unwrap_err(),
            SolverError::ZeroBudget
        );
    }
}
