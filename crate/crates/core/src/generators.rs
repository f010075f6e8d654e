//! Seedable random hypergraph models.
//!
//! Every generator is a pure function of its parameters and an [`RngSeed`]:
//! it draws from `seed.rng(Stream::Generator)` in a fixed order, so equal
//! inputs give identical hypergraphs on every platform.
//!
//! Vertices are always `0..n`. The two matrix-style models can produce an
//! empty column or two identical columns; empty columns are dropped and
//! repeats collapse into one edge, because a hypergraph's edges form a set.
//! The enumerating models consider each candidate subset once, in order of
//! increasing size and lexicographically within a size, and keep it with
//! probability `p`.

use itertools::Itertools;
use ndarray::Array2;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};
use crate::rng::{RngSeed, SimRng, Stream};

/// Upper bound on `n` for the power-set model (2ⁿ − 1 candidates).
pub const MAX_POWERSET_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("edge size bound k must satisfy 1 <= k <= n (k = {k}, n = {n})")]
    InvalidBound { k: usize, n: usize },
    #[error("power-set enumeration limited to n <= {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::InvalidProbability(p))
    }
}

fn check_bound(n: usize, k: usize) -> Result<(), GeneratorError> {
    if k >= 1 && k <= n {
        Ok(())
    } else {
        Err(GeneratorError::InvalidBound { k, n })
    }
}

/// Raw n×m 0/1 matrix with i.i.d. Bernoulli(p) entries, drawn column by
/// column. This is the sample [`simple_matrix`] turns into a hypergraph.
pub fn simple_matrix_sample(n: usize, m: usize, p: f64, seed: RngSeed) -> Result<Array2<u8>, GeneratorError> {
    check_probability(p)?;
    let mut rng = seed.rng(Stream::Generator);
    let mut draws = Array2::zeros((n, m));
    for col in 0..m {
        for row in 0..n {
            draws[[row, col]] = u8::from(rng.random_bool(p));
        }
    }
    Ok(draws)
}

/// Each incidence entry is 1 with probability `p`; each non-empty column
/// becomes a hyperedge.
pub fn simple_matrix(n: usize, m: usize, p: f64, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
    let draws = simple_matrix_sample(n, m, p, seed)?;
    let mut h = Hypergraph::with_vertices(n);
    for column in draws.columns() {
        let members: Vec<usize> = column
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 1)
            .map(|(i, _)| i)
            .collect();
        if !members.is_empty() {
            h.add_edge(members).expect("non-empty");
        }
    }
    Ok(h)
}

/// Links of a random bipartite graph between vertices `0..n` and edge-nodes
/// `0..m`; every (vertex, edge-node) pair is linked with probability `p`.
/// Pairs are visited vertex-major.
pub fn simple_bipartite_sample(
    n: usize,
    m: usize,
    p: f64,
    seed: RngSeed,
) -> Result<Vec<(VertexId, usize)>, GeneratorError> {
    check_probability(p)?;
    let mut rng = seed.rng(Stream::Generator);
    let mut links = Vec::new();
    for v in 0..n {
        for node in 0..m {
            if rng.random_bool(p) {
                links.push((VertexId(v), node));
            }
        }
    }
    Ok(links)
}

/// Bipartite-lift view of the random incidence model: the neighbourhood of
/// every edge-node of a random bipartite graph becomes a hyperedge. Has the
/// same distribution as [`simple_matrix`] but consumes the generator in a
/// different order.
pub fn simple_bipartite(n: usize, m: usize, p: f64, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
    let links = simple_bipartite_sample(n, m, p, seed)?;
    let mut neighbourhoods = vec![Vec::new(); m];
    for (v, node) in links {
        neighbourhoods[node].push(v);
    }
    let mut h = Hypergraph::with_vertices(n);
    for members in neighbourhoods.into_iter().filter(|ms| !ms.is_empty()) {
        h.add_edge(members).expect("non-empty");
    }
    Ok(h)
}

/// Keeps every subset of `0..n` with size in `1..=k_max` independently with
/// probability `p`.
fn sized_subsets(n: usize, sizes: impl Iterator<Item = usize>, p: f64, rng: &mut SimRng) -> Hypergraph {
    let mut h = Hypergraph::with_vertices(n);
    for size in sizes {
        for subset in (0..n).combinations(size) {
            if rng.random_bool(p) {
                h.add_edge(subset).expect("non-empty");
            }
        }
    }
    h
}

/// Each non-empty subset of the `n` vertices is an edge with probability `p`.
pub fn simple_powersets(n: usize, p: f64, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
    check_probability(p)?;
    if n > MAX_POWERSET_VERTICES {
        return Err(GeneratorError::TooLarge {
            n,
            max: MAX_POWERSET_VERTICES,
        });
    }
    let mut rng = seed.rng(Stream::Generator);
    Ok(sized_subsets(n, 1..=n, p, &mut rng))
}

/// Like [`simple_powersets`] but only subsets of size at most `k` are
/// candidates. With `k = n` the two models coincide draw for draw.
pub fn simple_order(n: usize, k: usize, p: f64, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
    check_probability(p)?;
    check_bound(n, k)?;
    let mut rng = seed.rng(Stream::Generator);
    Ok(sized_subsets(n, 1..=k, p, &mut rng))
}

/// Each of the C(n, k) k-subsets is an edge with probability `p`.
pub fn k_uniform(n: usize, k: usize, p: f64, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
    check_probability(p)?;
    check_bound(n, k)?;
    let mut rng = seed.rng(Stream::Generator);
    Ok(sized_subsets(n, std::iter::once(k), p, &mut rng))
}

/// A fully parameterised model, for callers that pick the model at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum Model {
    SimpleMatrix { n: usize, m: usize, p: f64 },
    SimpleBipartite { n: usize, m: usize, p: f64 },
    SimplePowersets { n: usize, p: f64 },
    SimpleOrder { n: usize, k: usize, p: f64 },
    KUniform { n: usize, k: usize, p: f64 },
}

impl Model {
    pub fn generate(&self, seed: RngSeed) -> Result<Hypergraph, GeneratorError> {
        match *self {
            Model::SimpleMatrix { n, m, p } => simple_matrix(n, m, p, seed),
            Model::SimpleBipartite { n, m, p } => simple_bipartite(n, m, p, seed),
            Model::SimplePowersets { n, p } => simple_powersets(n, p, seed),
            Model::SimpleOrder { n, k, p } => simple_order(n, k, p, seed),
            Model::KUniform { n, k, p } => k_uniform(n, k, p, seed),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::SimpleMatrix { .. } => "simple-matrix",
            Model::SimpleBipartite { .. } => "simple-bipartite",
            Model::SimplePowersets { .. } => "simple-powersets",
            Model::SimpleOrder { .. } => "simple-order",
            Model::KUniform { .. } => "k-uniform",
        }
    }
}
