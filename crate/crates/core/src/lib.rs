//! Facial unique-maximum colorings of plane graphs.
//!
//! A coloring of a plane graph is a FUM-coloring when it is proper and every
//! face has exactly one incident vertex carrying the largest color on that
//! face. The crate provides a rotation-system graph kernel, verifiers, an
//! exact solver for the FUM chromatic number of small graphs, a constructive
//! 4-coloring for graphs whose vertices of degree at least 4 induce a star
//! forest, and tooling to enumerate, generate and search instances.

pub mod cli;
pub mod coloring;
pub mod constructive;
pub mod families;
pub mod format;
pub mod instances;
pub mod plane_graph;
pub mod solver;
