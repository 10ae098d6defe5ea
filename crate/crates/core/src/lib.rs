//! Exact-arithmetic construction and verification of the unit-distance graphs
//! behind the "chromatic number of the plane ≥ 5" lower bound.
//!
//! The crate builds the five graphs of the construction (G40, G79, G49, G51,
//! G627) over the real field Q(√3, √11, √247), verifies the three coloring
//! claims by exhaustive search, runs the circumcenter forcing-chain procedure,
//! and assembles the final 5-chromatic graph. Everything is exact: the only
//! floating-point code in the repository is the SVG exporter's coordinate
//! formatting.

pub mod assembly;
pub mod catalog;
pub mod coloring;
pub mod data;
pub mod export;
pub mod field;
pub mod forcing;
pub mod geometry;
pub mod graph;
pub mod report;

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("segment lengths differ or a segment is degenerate")]
    SegmentMismatch,
    #[error("special vertex {0:?} refers to index {1}, outside the point list")]
    BadSpecial(String, usize),
    #[error("constraint spec is inconsistent: {0}")]
    InconsistentSpec(String),
    #[error("replay step {index} invalid: {reason}")]
    ReplayStep { index: usize, reason: String },
    #[error("placement failure: {0}")]
    Placement(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
