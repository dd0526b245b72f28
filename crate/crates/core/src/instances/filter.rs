//! Hypothesis filters over plane graphs.

use serde::Serialize;

use crate::coloring::{compute_xset, PrecoloredPath, XMode};
use crate::plane_graph::PlaneGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisFilter {
    /// Vertices of degree at least 4 induce a star forest.
    #[value(name = "star-forest")]
    #[serde(rename = "star-forest")]
    StarForestX,
    /// Vertices of degree at least 4 induce a forest.
    #[value(name = "acyclic")]
    #[serde(rename = "acyclic")]
    AcyclicX,
    /// Vertices of degree at least 4 induce a graph of maximum degree 2.
    #[value(name = "max-deg2")]
    #[serde(rename = "max-deg2")]
    MaxDeg2X,
    /// Vertices of degree at least 4 induce a graph of maximum degree 3.
    #[value(name = "max-deg3")]
    #[serde(rename = "max-deg3")]
    MaxDeg3X,
    /// Connected with maximum degree at most 4.
    #[value(name = "connected-max-deg4")]
    #[serde(rename = "connected-max-deg4")]
    ConnectedMaxDeg4,
    /// Maximum degree at most 3.
    Subcubic,
    All,
}

/// Every filter's verdict on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FilterFlags {
    pub star_forest: bool,
    pub acyclic: bool,
    pub max_deg2: bool,
    pub max_deg3: bool,
    pub connected_max_deg4: bool,
    pub subcubic: bool,
}

impl FilterFlags {
    pub fn of(g: &PlaneGraph) -> Self {
        let shape = compute_xset(g, &PrecoloredPath::empty(), XMode::Theorem).shape;
        FilterFlags {
            star_forest: shape.star_forest,
            acyclic: shape.acyclic,
            max_deg2: shape.max_degree <= 2,
            max_deg3: shape.max_degree <= 3,
            connected_max_deg4: g.is_connected() && g.max_degree() <= 4,
            subcubic: g.max_degree() <= 3,
        }
    }

    pub fn passes(&self, f: HypothesisFilter) -> bool {
        match f {
            HypothesisFilter::StarForestX => self.star_forest,
            HypothesisFilter::AcyclicX => self.acyclic,
            HypothesisFilter::MaxDeg2X => self.max_deg2,
            HypothesisFilter::MaxDeg3X => self.max_deg3,
            HypothesisFilter::ConnectedMaxDeg4 => self.connected_max_deg4,
            HypothesisFilter::Subcubic => self.subcubic,
            HypothesisFilter::All => true,
        }
    }
}

pub fn apply_filter(g: &PlaneGraph, f: HypothesisFilter) -> bool {
    FilterFlags::of(g).passes(f)
}
