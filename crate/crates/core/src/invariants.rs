use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::matching::{edge_cover_number, matching_number};
use crate::spectral::algebraic_connectivity;

/// Order, size, algebraic connectivity, matching number, edge covering
/// number and diameter of a graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantSummary {
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
    pub beta: usize,
    /// Absent when the graph has an isolated vertex.
    pub gamma: Option<usize>,
    /// Absent when the graph is disconnected.
    pub diameter: Option<usize>,
    pub connected: bool,
}

pub fn invariant_summary(g: &Graph) -> Result<InvariantSummary> {
    let alpha = if g.order() >= 2 { algebraic_connectivity(g)? } else { 0.0 };
    Ok(InvariantSummary {
        n: g.order(),
        m: g.size(),
        alpha,
        beta: matching_number(g)?,
        gamma: edge_cover_number(g).ok(),
        diameter: g.diameter().ok(),
        connected: g.is_connected(),
    })
}
