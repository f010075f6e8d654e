use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError, VertexId};

/// A vertex addressed by its layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LayerVertex {
    pub layer: usize,
    pub vertex: VertexId,
}

impl LayerVertex {
    pub fn new(layer: usize, vertex: impl Into<VertexId>) -> Self {
        LayerVertex {
            layer,
            vertex: vertex.into(),
        }
    }
}

/// Inter-layer link between vertices of two different layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interlink {
    pub from: LayerVertex,
    pub to: LayerVertex,
}

/// Ordered list of hypergraph layers plus links between them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MultilayerHypergraph {
    layers: Vec<Hypergraph>,
    interlinks: Vec<Interlink>,
}

impl MultilayerHypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a layer and returns its index.
    pub fn add_layer(&mut self, layer: Hypergraph) -> usize {
        self.layers.push(layer);
        self.layers.len() - 1
    }

    pub fn add_interlink(&mut self, from: LayerVertex, to: LayerVertex) -> Result<(), HypergraphError> {
        self.check_endpoint(from)?;
        self.check_endpoint(to)?;
        if from.layer == to.layer {
            return Err(HypergraphError::SameLayer(from.layer));
        }
        self.interlinks.push(Interlink { from, to });
        Ok(())
    }

    fn check_endpoint(&self, end: LayerVertex) -> Result<(), HypergraphError> {
        let layer = self
            .layers
            .get(end.layer)
            .ok_or(HypergraphError::UnknownLayer(end.layer))?;
        if !layer.contains_vertex(end.vertex) {
            return Err(HypergraphError::UnknownVertex(end.vertex));
        }
        Ok(())
    }

    pub fn layer(&self, index: usize) -> Option<&Hypergraph> {
        self.layers.get(index)
    }

    pub fn layers(&self) -> &[Hypergraph] {
        &self.layers
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn interlinks(&self) -> &[Interlink] {
        &self.interlinks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layers_get_sequential_indices() {
        let mut m = MultilayerHypergraph::new();
        let h = Hypergraph::from_edges([vec![0, 1]]).unwrap();
        assert_eq!(m.add_layer(h.clone()), 0);
        assert_eq!(m.add_layer(h), 1);
        m.add_interlink(LayerVertex::new(0, 0), LayerVertex::new(1, 1)).unwrap();
        assert_eq!(m.interlinks().len(), 1);
    }

    #[test]
    fn interlink_validation() {
        let mut m = MultilayerHypergraph::new();
        m.add_layer(Hypergraph::with_vertices(2));
        m.add_layer(Hypergraph::with_vertices(1));
        assert_eq!(
            m.add_interlink(LayerVertex::new(0, 0), LayerVertex::new(0, 1)),
            Err(HypergraphError::SameLayer(0))
        );
        assert_eq!(
            m.add_interlink(LayerVertex::new(0, 0), LayerVertex::new(2, 0)),
            Err(HypergraphError::UnknownLayer(2))
        );
        assert_eq!(
            m.add_interlink(LayerVertex::new(0, 0), LayerVertex::new(1, 1)),
            Err(HypergraphError::UnknownVertex(VertexId(1)))
        );
        assert!(m.interlinks().is_empty());
    }
}
