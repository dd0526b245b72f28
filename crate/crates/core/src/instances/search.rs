//! Counterexample search: compute χ_fum up to a threshold over a graph source
//! and record every graph the exact solver proves to need more colors.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{verify_fum, Color, FaceScope};
use crate::instances::canonical_id;
use crate::instances::filter::{FilterFlags, HypothesisFilter};
use crate::plane_graph::PlaneGraph;
use crate::solver::{chi_fum, ChiValue, Limits, SolverError};

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub filter: HypothesisFilter,
    pub threshold: Color,
    pub limits: Limits,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// χ_fum is known exactly and at most the threshold.
    Within,
    /// Exhaustively proven to need more than `threshold` colors.
    Exceeds,
    /// The solver hit its limits.
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    /// Position in the source sequence.
    pub index: usize,
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub flags: FilterFlags,
    pub outcome: Outcome,
    /// Exact χ_fum when known (for exceedances, from a follow-up search).
    pub chi: Option<Color>,
    pub witness: Option<Vec<Color>>,
    pub nodes: u64,
    pub micros: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub source: String,
    pub filter: HypothesisFilter,
    pub threshold: Color,
    pub examined: usize,
    pub matched: usize,
    pub counterexamples: usize,
    pub timeouts: usize,
    pub max_chi: Option<Color>,
    pub nodes: u64,
    pub micros: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub summary: SearchSummary,
    pub records: Vec<GraphRecord>,
}

impl SearchReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &GraphRecord> {
        self.records
            .iter()
            .filter(|r| r.outcome == Outcome::Exceeds)
    }

    /// The report with wall-clock fields cleared, for reproducibility checks.
    pub fn without_timing(&self) -> SearchReport {
        let mut out = self.clone();
        out.summary.micros = None;
        for r in &mut out.records {
            r.micros = None;
        }
        out
    }

    /// One JSON object per record, then a `{"summary": ...}` line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut line = serde_json::to_value(r).expect("records serialize");
            if let Some(obj) = line.as_object_mut() {
                obj.remove("witness");
            }
            let _ = writeln!(out, "{line}");
        }
        let summary = serde_json::json!({ "summary": &self.summary });
        let _ = writeln!(out, "{summary}");
        out
    }

    /// Witness colorings keyed by graph id, one `id colors...` line each.
    pub fn witness_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            if let Some(w) = &r.witness {
                let colors: Vec<String> = w.iter().map(Color::to_string).collect();
                let _ = writeln!(out, "{} {}", r.id, colors.join(" "));
            }
        }
        out
    }
}

fn examine(
    index: usize,
    g: &PlaneGraph,
    flags: FilterFlags,
    cfg: &SearchConfig,
) -> Result<GraphRecord, SolverError> {
    let start = Instant::now();
    let result = chi_fum(g, cfg.threshold, &cfg.limits)?;
    let mut nodes = result.stats.nodes;
    let (outcome, chi, witness) = match result.value {
        ChiValue::Exact { value, witness } => (Outcome::Within, Some(value), Some(witness)),
        ChiValue::Unknown { .. } => (Outcome::Timeout, None, None),
        ChiValue::Exceeds { .. } => {
            // Look a little further for the actual value and a witness.
            let follow = chi_fum(g, cfg.threshold + 2, &cfg.limits)?;
            nodes += follow.stats.nodes;
            match follow.value {
                ChiValue::Exact { value, witness } => {
                    (Outcome::Exceeds, Some(value), Some(witness))
                }
                _ => (Outcome::Exceeds, None, None),
            }
        }
    };
    if let Some(w) = &witness {
        assert!(
            verify_fum(g, w, FaceScope::All)
                .map(|r| r.passed())
                .unwrap_or(false),
            "solver witness re-verifies"
        );
    }
    Ok(GraphRecord {
        index,
        id: canonical_id(g),
        n: g.n(),
        m: g.m(),
        flags,
        outcome,
        chi,
        witness: witness.map(|w| w.into_vec()),
        nodes,
        micros: Some(start.elapsed().as_micros()),
    })
}

/// Runs the search. Records follow source order regardless of `jobs`.
pub fn search_counterexamples(
    source: &str,
    graphs: &[PlaneGraph],
    cfg: &SearchConfig,
) -> Result<SearchReport, SolverError> {
    let start = Instant::now();
    let matched: Vec<(usize, FilterFlags)> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| (i, FilterFlags::of(g)))
        .filter(|(_, flags)| flags.passes(cfg.filter))
        .collect();
    let run = || {
        matched
            .par_iter()
            .map(|&(i, flags)| examine(i, &graphs[i], flags, cfg))
            .collect::<Result<Vec<_>, _>>()
    };
    let records = if cfg.jobs == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool")
            .install(run)?
    };
    let summary = SearchSummary {
        source: source.to_string(),
        filter: cfg.filter,
        threshold: cfg.threshold,
        examined: graphs.len(),
        matched: records.len(),
        counterexamples: records
            .iter()
            .filter(|r| r.outcome == Outcome::Exceeds)
            .count(),
        timeouts: records
            .iter()
            .filter(|r| r.outcome == Outcome::Timeout)
            .count(),
        max_chi: records.iter().filter_map(|r| r.chi).max(),
        nodes: records.iter().map(|r| r.nodes).sum(),
        micros: Some(start.elapsed().as_micros()),
    };
    Ok(SearchReport { summary, records })
}

/// Default per-graph limits for searches.
pub fn default_search_limits() -> Limits {
    Limits {
        max_nodes: 50_000_000,
        max_time: Some(Duration::from_secs(30)),
    }
}
