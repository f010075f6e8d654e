//! Random walks driven by hyperedge co-membership.
//!
//! With `e` the incidence matrix, `Ĉ` the diagonal matrix of edge sizes and
//! `A = e·eᵀ`, the walk moves from `i` to `j ≠ i` with probability
//!
//! ```text
//! T_ij = ((eĈeᵀ)_ij − A_ij) / (Σ_{ℓ≠i} (eĈeᵀ)_iℓ − k_i),   k_i = Σ_{ℓ≠i} A_iℓ
//! ```
//!
//! and never stays put. The lazy walk uses `(eĈeᵀ)_ij` as numerator for every
//! `j` including `i`, normalised so that each row sums to one.

use ndarray::{Array1, Array2};
use rand::Rng;

use super::DynamicsError;
use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    vertices: Vec<VertexId>,
    probs: Array2<f64>,
    lazy: bool,
}

impl TransitionMatrix {
    /// Row/column order, identical to the incidence-matrix rows.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn probabilities(&self) -> &Array2<f64> {
        &self.probs
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.probs[[i, j]]
    }

    pub fn is_lazy(&self) -> bool {
        self.lazy
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Stationary distribution by power iteration on `(T + I) / 2`, which has
    /// the same fixed point as `T` but is aperiodic.
    pub fn stationary_distribution(&self, tolerance: f64, max_iterations: usize) -> Array1<f64> {
        let n = self.len();
        if n == 0 {
            return Array1::zeros(0);
        }
        let mut pi = Array1::from_elem(n, 1.0 / n as f64);
        for _ in 0..max_iterations {
            let next = (&pi.dot(&self.probs) + &pi) * 0.5;
            let delta = (&next - &pi).mapv(f64::abs).sum();
            pi = next;
            if delta < tolerance {
                break;
            }
        }
        pi
    }
}

pub fn transition_matrix(h: &Hypergraph, lazy: bool) -> Result<TransitionMatrix, DynamicsError> {
    let incidence = h.incidence_matrix();
    let vertices = incidence.row_index().to_vec();
    for (v, d) in vertices.iter().zip(h.degrees()) {
        if d == 0 {
            return Err(DynamicsError::IsolatedVertex(*v));
        }
    }

    let e = incidence.entries().mapv(u64::from);
    let sizes = e.sum_axis(ndarray::Axis(0));
    // e·Ĉ scales column m by |e_m|.
    let weighted = (&e * &sizes.view().insert_axis(ndarray::Axis(0))).dot(&e.t());
    let adjacency = e.dot(&e.t());

    let n = vertices.len();
    let mut probs = Array2::zeros((n, n));
    for i in 0..n {
        if lazy {
            let total: u64 = weighted.row(i).sum();
            for j in 0..n {
                probs[[i, j]] = weighted[[i, j]] as f64 / total as f64;
            }
        } else {
            let off_diagonal: u64 = weighted.row(i).sum() - weighted[[i, i]];
            let hyperdegree: u64 = adjacency.row(i).sum() - adjacency[[i, i]];
            let denominator = off_diagonal - hyperdegree;
            if denominator == 0 {
                return Err(DynamicsError::DisconnectedDenominator(vertices[i]));
            }
            for j in (0..n).filter(|&j| j != i) {
                let numerator = weighted[[i, j]] - adjacency[[i, j]];
                probs[[i, j]] = numerator as f64 / denominator as f64;
            }
        }
    }
    Ok(TransitionMatrix { vertices, probs, lazy })
}

/// Walk of `steps` transitions from `start`; the result has `steps + 1`
/// entries and begins with `start`.
pub fn random_walk<R: Rng + ?Sized>(
    h: &Hypergraph,
    start: VertexId,
    steps: usize,
    lazy: bool,
    rng: &mut R,
) -> Result<Vec<VertexId>, DynamicsError> {
    let t = transition_matrix(h, lazy)?;
    let vertices = t.vertices();
    let mut current = vertices
        .binary_search(&start)
        .map_err(|_| DynamicsError::UnknownVertex(start))?;

    let cumulative: Vec<Vec<f64>> = t
        .probabilities()
        .rows()
        .into_iter()
        .map(|row| {
            row.iter()
                .scan(0.0, |acc, &p| {
                    *acc += p;
                    Some(*acc)
                })
                .collect()
        })
        .collect();

    let mut path = Vec::with_capacity(steps + 1);
    path.push(start);
    for _ in 0..steps {
        let row = &cumulative[current];
        let u = rng.random::<f64>() * row[row.len() - 1];
        // First index whose cumulative mass exceeds u; never a zero-probability entry.
        current = row.partition_point(|&c| c <= u).min(row.len() - 1);
        path.push(vertices[current]);
    }
    Ok(path)
}
