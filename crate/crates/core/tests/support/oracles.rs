//! Reference computations used to check the library. Each one takes a route
//! that does not go through the code it checks: plain loops over edge
//! membership, union-find instead of graph search, closed forms instead of
//! sampling.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperkit::{Hyperedge, Hypergraph, VertexId};
use rand::Rng;

/// Incidence matrix by direct membership tests.
pub fn incidence(h: &Hypergraph) -> Vec<Vec<u64>> {
    let edges: Vec<&Hyperedge> = h.edges().collect();
    h.vertices()
        .map(|v| edges.iter().map(|e| u64::from(e.members().contains(&v))).collect())
        .collect()
}

pub fn transpose(a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// Triple-loop product of an r×k and a k×c matrix.
pub fn matmul(a: &[Vec<u64>], b: &[Vec<u64>], k: usize, c: usize) -> Vec<Vec<u64>> {
    a.iter()
        .map(|row| (0..c).map(|j| (0..k).map(|t| row[t] * b[t][j]).sum()).collect())
        .collect()
}

/// Vertex partition by union-find over "shares an edge".
pub fn union_find_components(h: &Hypergraph) -> Vec<Vec<VertexId>> {
    let vertices: Vec<VertexId> = h.vertices().collect();
    let pos = |v: VertexId| vertices.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in h.edges() {
        let members = e.members();
        for w in &members[1..] {
            let a = find(&mut parent, pos(members[0]));
            let b = find(&mut parent, pos(*w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
    for (i, &v) in vertices.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(v);
    }
    let mut out: Vec<Vec<VertexId>> = groups.into_values().collect();
    out.sort();
    out
}

/// Random-walk transition rows by enumerating hyperedges.
///
/// Non-lazy: for j ≠ i the weight is Σ over edges holding both of (|e| − 1);
/// the row total is Σ over edges holding i of (|e| − 1)². Lazy: the weight is
/// Σ over edges holding both of |e| (j = i allowed), the total Σ |e|².
/// A row is `None` where the total vanishes.
pub fn transition_rows(h: &Hypergraph, lazy: bool) -> Vec<Option<Vec<f64>>> {
    let vertices: Vec<VertexId> = h.vertices().collect();
    let edges: Vec<Vec<VertexId>> = h.edges().map(|e| e.members().to_vec()).collect();
    vertices
        .iter()
        .map(|&vi| {
            let mine: Vec<&Vec<VertexId>> = edges.iter().filter(|e| e.contains(&vi)).collect();
            let total: u64 = mine
                .iter()
                .map(|e| {
                    let s = e.len() as u64;
                    if lazy {
                        s * s
                    } else {
                        (s - 1) * (s - 1)
                    }
                })
                .sum();
            if total == 0 {
                return None;
            }
            let row = vertices
                .iter()
                .map(|&vj| {
                    if vi == vj && !lazy {
                        return 0.0;
                    }
                    let weight: u64 = mine
                        .iter()
                        .filter(|e| e.contains(&vj))
                        .map(|e| if lazy { e.len() as u64 } else { e.len() as u64 - 1 })
                        .sum();
                    weight as f64 / total as f64
                })
                .collect();
            Some(row)
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Expected Σ|e| of the matrix/bipartite model after empty columns are
/// dropped and identical columns merged: every non-empty subset S of size s
/// appears with probability 1 − (1 − p^s q^{n−s})^m and contributes s.
pub fn collapsed_incidence_mean(n: u64, m: u64, p: f64) -> f64 {
    let q = 1.0 - p;
    (1..=n)
        .map(|s| {
            let pattern = p.powi(s as i32) * q.powi((n - s) as i32);
            s as f64 * binomial(n, s) * (1.0 - (1.0 - pattern).powi(m as i32))
        })
        .sum()
}

/// Edges of a random hypergraph on vertices 0..n; no edge is empty.
pub fn random_edges<R: Rng>(rng: &mut R, n: usize, edge_count: usize, max_size: usize) -> Vec<Vec<usize>> {
    (0..edge_count)
        .map(|_| {
            let size = rng.random_range(1..=max_size.min(n));
            let mut members = BTreeSet::new();
            while members.len() < size {
                members.insert(rng.random_range(0..n));
            }
            members.into_iter().collect()
        })
        .collect()
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, max_vertices: usize) -> Hypergraph {
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=2 * n);
    let mut h = Hypergraph::with_vertices(n);
    for e in random_edges(rng, n, m, n) {
        h.add_edge(e).unwrap();
    }
    h
}

/// Pearson χ² statistic of observed counts against expected counts.
pub fn chi_square(observed: &[f64], expected: &[f64]) -> f64 {
    observed.iter().zip(expected).map(|(o, e)| (o - e) * (o - e) / e).sum()
}
