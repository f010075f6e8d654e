#![allow(dead_code)]

pub mod oracles;

use hyperkit::Hypergraph;
use proptest::prelude::*;

/// Hypergraphs on 1..=max_vertices vertices with up to 2n random edges.
pub fn hypergraphs(max_vertices: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let edge = proptest::collection::btree_set(0..n, 1..=n);
        proptest::collection::vec(edge, 0..=2 * n).prop_map(move |edges| {
            let mut h = Hypergraph::with_vertices(n);
            for e in edges {
                h.add_edge(e).unwrap();
            }
            h
        })
    })
}
