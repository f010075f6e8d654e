//! Hypergraph representations.
//!
//! A [`Hypergraph`] is a vertex set together with a *set* of hyperedges, each a
//! non-empty set of vertices. Inserting an edge that is already present is a
//! no-op. Edges keep their insertion order, which together with ascending
//! vertex order defines the canonical row/column order of the
//! [`IncidenceMatrix`].
//!
//! Optional vertex/edge weights and string-keyed attributes are carried along
//! for persistence. No computation in this crate reads them.

mod directed;
mod incidence;
mod multilayer;

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use directed::{DirectedHyperedge, DirectedHypergraph};
pub use incidence::IncidenceMatrix;
pub use multilayer::{Interlink, LayerVertex, MultilayerHypergraph};

/// Attribute map attached to a vertex or an edge.
pub type Attrs = BTreeMap<String, serde_json::Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hyperedge must contain at least one vertex")]
    EmptyEdge,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown hyperedge {0}")]
    UnknownEdge(Hyperedge),
    #[error("unknown layer {0}")]
    UnknownLayer(usize),
    #[error("interlink endpoints must lie in different layers (both in layer {0})")]
    SameLayer(usize),
    #[error("incidence matrix column {0} is empty")]
    EmptyColumn(usize),
    #[error("incidence matrix shape {rows}x{cols} does not match its index ({row_index} rows, {col_index} columns)")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        row_index: usize,
        col_index: usize,
    },
}

/// A hyperedge: a non-empty, sorted, duplicate-free list of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Hyperedge(Vec<VertexId>);

impl TryFrom<Vec<VertexId>> for Hyperedge {
    type Error = HypergraphError;

    fn try_from(members: Vec<VertexId>) -> Result<Self, Self::Error> {
        Hyperedge::new(members)
    }
}

impl From<Hyperedge> for Vec<VertexId> {
    fn from(e: Hyperedge) -> Self {
        e.0
    }
}

impl Hyperedge {
    pub fn new<I, V>(members: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut members: Vec<VertexId> = members.into_iter().map(Into::into).collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(HypergraphError::EmptyEdge);
        }
        Ok(Hyperedge(members))
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other`. Both member lists are sorted, so this is a merge walk.
    pub fn is_subset(&self, other: &Hyperedge) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Meta {
    weight: f64,
    attrs: Attrs,
}

impl Default for Meta {
    fn default() -> Self {
        Meta {
            weight: 1.0,
            attrs: Attrs::new(),
        }
    }
}

/// Undirected hypergraph with set semantics on both vertices and edges.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Hypergraph {
    vertices: BTreeMap<VertexId, Meta>,
    edges: IndexMap<Hyperedge, Meta>,
    vertex_weighted: bool,
    edge_weighted: bool,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Hypergraph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut h = Self::new();
        for v in 0..n {
            h.add_vertex(VertexId(v));
        }
        h
    }

    /// Builds a hypergraph from an edge list, adding every member as a vertex.
    pub fn from_edges<I, E, V>(edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut h = Self::new();
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) {
        self.vertices.entry(v.into()).or_default();
    }

    /// Inserts an edge, auto-adding absent members. Returns `false` if an
    /// identical edge was already present.
    pub fn add_edge<I, V>(&mut self, members: I) -> Result<bool, HypergraphError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let edge = Hyperedge::new(members)?;
        Ok(self.insert_edge(edge))
    }

    pub fn insert_edge(&mut self, edge: Hyperedge) -> bool {
        for v in edge.iter() {
            self.add_vertex(v);
        }
        if self.edges.contains_key(&edge) {
            return false;
        }
        self.edges.insert(edge, Meta::default());
        true
    }

    /// Removes the edge with exactly these members. Absent edges are ignored.
    pub fn remove_edge<I, V>(&mut self, members: I) -> bool
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        match Hyperedge::new(members) {
            Ok(edge) => self.edges.shift_remove(&edge).is_some(),
            Err(_) => false,
        }
    }

    /// Removes `v` together with every edge that contains it.
    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        if self.vertices.remove(&v).is_none() {
            return false;
        }
        self.edges.retain(|e, _| !e.contains(v));
        true
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn contains_edge(&self, edge: &Hyperedge) -> bool {
        self.edges.contains_key(edge)
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &Hyperedge> + '_ {
        self.edges.keys()
    }

    pub fn edge(&self, index: usize) -> Option<&Hyperedge> {
        self.edges.get_index(index).map(|(e, _)| e)
    }

    pub fn edge_index(&self, edge: &Hyperedge) -> Option<usize> {
        self.edges.get_index_of(edge)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize, HypergraphError> {
        if !self.contains_vertex(v) {
            return Err(HypergraphError::UnknownVertex(v));
        }
        Ok(self.edges.keys().filter(|e| e.contains(v)).count())
    }

    /// Degree of every vertex, in ascending vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        let index = self.vertex_positions();
        let mut deg = vec![0; self.vertex_count()];
        for e in self.edges.keys() {
            for v in e.iter() {
                deg[index[&v]] += 1;
            }
        }
        deg
    }

    /// Σ_e |e|, the number of nonzero incidence entries.
    pub fn incidence_count(&self) -> usize {
        self.edges.keys().map(Hyperedge::len).sum()
    }

    /// Map from vertex to its row in the canonical ordering.
    pub fn vertex_positions(&self) -> BTreeMap<VertexId, usize> {
        self.vertices.keys().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// For each vertex in canonical order, the indices of the edges containing it.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let index = self.vertex_positions();
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (m, e) in self.edges.keys().enumerate() {
            for v in e.iter() {
                out[index[&v]].push(m);
            }
        }
        out
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix::from_hypergraph(self)
    }

    /// `A = e·eᵀ`: entry (i, j) counts the edges containing both i and j.
    pub fn adjacency_matrix(&self) -> ndarray::Array2<u64> {
        self.incidence_matrix().adjacency()
    }

    pub fn is_vertex_weighted(&self) -> bool {
        self.vertex_weighted
    }

    pub fn is_edge_weighted(&self) -> bool {
        self.edge_weighted
    }

    /// `None` when the hypergraph carries no vertex weights or `v` is unknown.
    pub fn vertex_weight(&self, v: VertexId) -> Option<f64> {
        if !self.vertex_weighted {
            return None;
        }
        self.vertices.get(&v).map(|m| m.weight)
    }

    /// Sets one vertex weight. The first call turns weights on for every
    /// vertex, with 1.0 for those not set explicitly.
    pub fn set_vertex_weight(&mut self, v: VertexId, weight: f64) -> Result<(), HypergraphError> {
        let meta = self.vertices.get_mut(&v).ok_or(HypergraphError::UnknownVertex(v))?;
        meta.weight = weight;
        self.vertex_weighted = true;
        Ok(())
    }

    pub fn edge_weight(&self, edge: &Hyperedge) -> Option<f64> {
        if !self.edge_weighted {
            return None;
        }
        self.edges.get(edge).map(|m| m.weight)
    }

    pub fn set_edge_weight(&mut self, edge: &Hyperedge, weight: f64) -> Result<(), HypergraphError> {
        let meta = self
            .edges
            .get_mut(edge)
            .ok_or_else(|| HypergraphError::UnknownEdge(edge.clone()))?;
        meta.weight = weight;
        self.edge_weighted = true;
        Ok(())
    }

    pub fn vertex_attrs(&self, v: VertexId) -> Option<&Attrs> {
        self.vertices.get(&v).map(|m| &m.attrs)
    }

    pub fn vertex_attrs_mut(&mut self, v: VertexId) -> Result<&mut Attrs, HypergraphError> {
        self.vertices
            .get_mut(&v)
            .map(|m| &mut m.attrs)
            .ok_or(HypergraphError::UnknownVertex(v))
    }

    pub fn edge_attrs(&self, edge: &Hyperedge) -> Option<&Attrs> {
        self.edges.get(edge).map(|m| &m.attrs)
    }

    pub fn edge_attrs_mut(&mut self, edge: &Hyperedge) -> Result<&mut Attrs, HypergraphError> {
        self.edges
            .get_mut(edge)
            .map(|m| &mut m.attrs)
            .ok_or_else(|| HypergraphError::UnknownEdge(edge.clone()))
    }

    /// Copy without vertices of degree zero.
    pub fn without_isolated_vertices(&self) -> Hypergraph {
        let degrees = self.degrees();
        let mut out = self.clone();
        for (v, d) in self.vertices().zip(degrees) {
            if d == 0 {
                out.vertices.remove(&v);
            }
        }
        out
    }
}
