//! Scalar structural metrics.

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Hyperedge, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("hypergraph has no vertices")]
    EmptyHypergraph,
    #[error("hypergraph has no edges")]
    NoEdges,
}

/// `|E| / (2^|V| − 1)`: the fraction of all possible non-empty edges present.
///
/// Exact up to the final division for `|V| <= 62`, where the denominator is
/// formed as an integer. Beyond that it is evaluated as `|E|·2^-n / (1 − 2^-n)`
/// and underflows to 0 once `2^-n` does.
pub fn density(h: &Hypergraph) -> Result<f64, MetricError> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(MetricError::EmptyHypergraph);
    }
    let edges = h.edge_count() as f64;
    if n <= 62 {
        let possible = (1u64 << n) - 1;
        Ok(edges / possible as f64)
    } else {
        let tail = (-(n as f64)).exp2();
        Ok(edges * tail / (1.0 - tail))
    }
}

/// Size of the smallest edge.
pub fn girth(h: &Hypergraph) -> Result<usize, MetricError> {
    h.edges().map(Hyperedge::len).min().ok_or(MetricError::NoEdges)
}

pub fn average_vertex_degree(h: &Hypergraph) -> Result<f64, MetricError> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(MetricError::EmptyHypergraph);
    }
    let total: usize = h.degrees().iter().sum();
    Ok(total as f64 / n as f64)
}

pub fn average_edge_size(h: &Hypergraph) -> Result<f64, MetricError> {
    let m = h.edge_count();
    if m == 0 {
        return Err(MetricError::NoEdges);
    }
    Ok(h.incidence_count() as f64 / m as f64)
}

/// Every metric at once; unavailable ones carry the reason they failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub vertices: usize,
    pub edges: usize,
    pub density: Outcome<f64>,
    pub girth: Outcome<usize>,
    pub average_vertex_degree: Outcome<f64>,
    pub average_edge_size: Outcome<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome<T> {
    pub value: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl<T> From<Result<T, MetricError>> for Outcome<T> {
    fn from(r: Result<T, MetricError>) -> Self {
        match r {
            Ok(value) => Outcome {
                value: Some(value),
                reason: None,
            },
            Err(e) => Outcome {
                value: None,
                reason: Some(e.to_string().replace("hypergraph has ", "")),
            },
        }
    }
}

pub fn report(h: &Hypergraph) -> MetricsReport {
    MetricsReport {
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        density: density(h).into(),
        girth: girth(h).into(),
        average_vertex_degree: average_vertex_degree(h).into(),
        average_edge_size: average_edge_size(h).into(),
    }
}
