use ndarray::Array2;

use super::{Hyperedge, Hypergraph, HypergraphError, VertexId};

/// Dense N×M 0/1 incidence matrix `e` with its row (vertex) and column (edge)
/// index. Rows follow ascending vertex id, columns follow edge insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceMatrix {
    entries: Array2<u8>,
    rows: Vec<VertexId>,
    cols: Vec<Hyperedge>,
}

impl IncidenceMatrix {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let rows: Vec<VertexId> = h.vertices().collect();
        let cols: Vec<Hyperedge> = h.edges().cloned().collect();
        let index = h.vertex_positions();
        let mut entries = Array2::zeros((rows.len(), cols.len()));
        for (m, e) in cols.iter().enumerate() {
            for v in e.iter() {
                entries[[index[&v], m]] = 1;
            }
        }
        IncidenceMatrix { entries, rows, cols }
    }

    /// Assembles a matrix from raw parts, checking the entry rule against the
    /// column index.
    pub fn from_parts(entries: Array2<u8>, rows: Vec<VertexId>, cols: Vec<Hyperedge>) -> Result<Self, HypergraphError> {
        let (n, m) = entries.dim();
        if n != rows.len() || m != cols.len() {
            return Err(HypergraphError::ShapeMismatch {
                rows: n,
                cols: m,
                row_index: rows.len(),
                col_index: cols.len(),
            });
        }
        Ok(IncidenceMatrix { entries, rows, cols })
    }

    pub fn entries(&self) -> &Array2<u8> {
        &self.entries
    }

    pub fn row_index(&self) -> &[VertexId] {
        &self.rows
    }

    pub fn col_index(&self) -> &[Hyperedge] {
        &self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        self.entries.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[[row, col]]
    }

    fn as_u64(&self) -> Array2<u64> {
        self.entries.mapv(u64::from)
    }

    /// `A = e·eᵀ`.
    pub fn adjacency(&self) -> Array2<u64> {
        let e = self.as_u64();
        e.dot(&e.t())
    }

    /// `C = eᵀ·e`. Off-diagonal entries are pairwise edge overlaps; the
    /// diagonal holds edge sizes.
    pub fn edge_overlap(&self) -> Array2<u64> {
        let e = self.as_u64();
        e.t().dot(&e)
    }

    /// Rebuilds a hypergraph using the row index as vertex set and the 0/1
    /// pattern of each column as its edge. Edges are inserted in column order.
    pub fn to_hypergraph(&self) -> Result<Hypergraph, HypergraphError> {
        let mut h = Hypergraph::new();
        for &v in &self.rows {
            h.add_vertex(v);
        }
        for (m, column) in self.entries.columns().into_iter().enumerate() {
            let members: Vec<VertexId> = column
                .iter()
                .zip(&self.rows)
                .filter(|(&x, _)| x != 0)
                .map(|(_, &v)| v)
                .collect();
            if members.is_empty() {
                return Err(HypergraphError::EmptyColumn(m));
            }
            h.add_edge(members)?;
        }
        Ok(h)
    }
}
