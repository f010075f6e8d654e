//! Hypergraph computation toolkit.
//!
//! The crate is organised around a handful of modules:
//!
//! - [`hypergraph`]: undirected, directed and multilayer hypergraphs plus the
//!   incidence-matrix view that every other module computes from.
//! - [`generators`]: seedable random hypergraph models.
//! - [`metrics`]: scalar structural summaries.
//! - [`algorithms`]: connected components, simple reduction and graph expansions.
//! - [`dynamics`]: random walks, a generalized Schelling segregation model, SIR
//!   epidemics and a histogram mutual-information estimator.
//! - [`io`]: the JSON document format and CSV / edge-list exports.

pub mod algorithms;
pub mod dynamics;
pub mod generators;
pub mod hypergraph;
pub mod io;
pub mod metrics;
pub mod rng;

pub use hypergraph::{
    DirectedHyperedge, DirectedHypergraph, Hyperedge, Hypergraph, HypergraphError, IncidenceMatrix, Interlink,
    LayerVertex, MultilayerHypergraph, VertexId,
};
pub use rng::RngSeed;
