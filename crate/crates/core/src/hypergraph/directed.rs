use std::ops::Deref;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use super::{Hyperedge, Hypergraph, HypergraphError, VertexId};

/// A directed hyperedge from a tail set to a head set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectedHyperedge {
    pub tail: Hyperedge,
    pub head: Hyperedge,
}

impl DirectedHyperedge {
    /// The undirected edge `tail ∪ head`.
    pub fn support(&self) -> Hyperedge {
        Hyperedge::new(self.tail.iter().chain(self.head.iter())).expect("tail is non-empty")
    }
}

/// A hypergraph carrying directed hyperedges next to its undirected family.
///
/// Every directed edge also contributes `tail ∪ head` to the undirected
/// family, so all undirected analyses see it. Dereferences to the underlying
/// [`Hypergraph`] for read access.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DirectedHypergraph {
    base: Hypergraph,
    directed: IndexSet<DirectedHyperedge>,
}

impl DirectedHypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_base(base: Hypergraph) -> Self {
        DirectedHypergraph {
            base,
            directed: IndexSet::new(),
        }
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn into_base(self) -> Hypergraph {
        self.base
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) {
        self.base.add_vertex(v);
    }

    pub fn add_edge<I, V>(&mut self, members: I) -> Result<bool, HypergraphError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        self.base.add_edge(members)
    }

    pub fn remove_edge<I, V>(&mut self, members: I) -> bool
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        self.base.remove_edge(members)
    }

    /// Records `tail → head` and adds `tail ∪ head` to the undirected family.
    /// A vertex may appear on both sides. Returns `false` if the pair was
    /// already present.
    pub fn add_directed_edge<T, H, V, W>(&mut self, tail: T, head: H) -> Result<bool, HypergraphError>
    where
        T: IntoIterator<Item = V>,
        H: IntoIterator<Item = W>,
        V: Into<VertexId>,
        W: Into<VertexId>,
    {
        let edge = DirectedHyperedge {
            tail: Hyperedge::new(tail)?,
            head: Hyperedge::new(head)?,
        };
        Ok(self.insert_directed_edge(edge))
    }

    pub fn insert_directed_edge(&mut self, edge: DirectedHyperedge) -> bool {
        self.base.insert_edge(edge.support());
        self.directed.insert(edge)
    }

    pub fn remove_directed_edge(&mut self, edge: &DirectedHyperedge) -> bool {
        self.directed.shift_remove(edge)
    }

    /// Removes `v`, every undirected edge containing it and every directed
    /// edge touching it.
    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        if !self.base.remove_vertex(v) {
            return false;
        }
        self.directed.retain(|d| !d.tail.contains(v) && !d.head.contains(v));
        true
    }

    pub fn directed_edges(&self) -> impl ExactSizeIterator<Item = &DirectedHyperedge> + '_ {
        self.directed.iter()
    }

    pub fn directed_edge_count(&self) -> usize {
        self.directed.len()
    }

    /// Mutable access to weights and attributes of the undirected view.
    pub fn base_mut(&mut self) -> BaseMut<'_> {
        BaseMut(&mut self.base)
    }
}

impl Deref for DirectedHypergraph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.base
    }
}

/// Restricted mutable view that cannot drop vertices out from under the
/// directed edges.
pub struct BaseMut<'a>(&'a mut Hypergraph);

impl BaseMut<'_> {
    pub fn set_vertex_weight(&mut self, v: VertexId, w: f64) -> Result<(), HypergraphError> {
        self.0.set_vertex_weight(v, w)
    }

    pub fn set_edge_weight(&mut self, e: &Hyperedge, w: f64) -> Result<(), HypergraphError> {
        self.0.set_edge_weight(e, w)
    }

    pub fn vertex_attrs_mut(&mut self, v: VertexId) -> Result<&mut super::Attrs, HypergraphError> {
        self.0.vertex_attrs_mut(v)
    }

    pub fn edge_attrs_mut(&mut self, e: &Hyperedge) -> Result<&mut super::Attrs, HypergraphError> {
        self.0.edge_attrs_mut(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_edge_also_adds_support() {
        let mut h = DirectedHypergraph::new();
        assert!(h.add_directed_edge([0], [1, 2]).unwrap());
        let d = h.directed_edges().next().unwrap();
        assert_eq!(d.tail, Hyperedge::new([0]).unwrap());
        assert_eq!(d.head, Hyperedge::new([1, 2]).unwrap());
        assert!(h.contains_edge(&Hyperedge::new([0, 1, 2]).unwrap()));
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn empty_sides_rejected() {
        let mut h = DirectedHypergraph::new();
        assert_eq!(
            h.add_directed_edge(Vec::<usize>::new(), [1]),
            Err(HypergraphError::EmptyEdge)
        );
        assert_eq!(
            h.add_directed_edge([1], Vec::<usize>::new()),
            Err(HypergraphError::EmptyEdge)
        );
        assert_eq!(h.directed_edge_count(), 0);
    }

    #[test]
    fn self_directed_edge_allowed() {
        let mut h = DirectedHypergraph::new();
        assert!(h.add_directed_edge([0], [0]).unwrap());
        assert_eq!(h.directed_edge_count(), 1);
        assert!(h.contains_edge(&Hyperedge::new([0]).unwrap()));
    }

    #[test]
    fn duplicate_directed_edge_collapses() {
        let mut h = DirectedHypergraph::new();
        h.add_directed_edge([0], [1]).unwrap();
        assert!(!h.add_directed_edge([0], [1]).unwrap());
        assert!(h.add_directed_edge([1], [0]).unwrap());
        assert_eq!(h.directed_edge_count(), 2);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn vertex_removal_cleans_directed_edges() {
        let mut h = DirectedHypergraph::new();
        h.add_directed_edge([0], [1]).unwrap();
        h.add_directed_edge([2], [3]).unwrap();
        h.remove_vertex(VertexId(1));
        assert_eq!(h.directed_edge_count(), 1);
        assert_eq!(h.edge_count(), 1);
    }
}
