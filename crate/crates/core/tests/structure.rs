mod support;

use hyperkit::{Hyperedge, Hypergraph, IncidenceMatrix, VertexId};
use proptest::prelude::*;
use support::{hypergraphs, oracles};

fn to_rows(a: &ndarray::Array2<u64>) -> Vec<Vec<u64>> {
    a.rows().into_iter().map(|r| r.to_vec()).collect()
}

proptest! {
    #[test]
    fn degree_sum_equals_size_sum(h in hypergraphs(10)) {
        let degrees: usize = h.degrees().iter().sum();
        let sizes: usize = h.edges().map(Hyperedge::len).sum();
        prop_assert_eq!(degrees, sizes);
        prop_assert_eq!(degrees, h.incidence_count());
    }

    #[test]
    fn incidence_matches_membership(h in hypergraphs(10)) {
        let e = h.incidence_matrix();
        let oracle = oracles::incidence(&h);
        let got: Vec<Vec<u64>> = e.entries().rows().into_iter()
            .map(|r| r.iter().map(|&x| u64::from(x)).collect())
            .collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn adjacency_and_overlap_match_dense_products(h in hypergraphs(10)) {
        let n = h.vertex_count();
        let m = h.edge_count();
        let e = oracles::incidence(&h);
        let et = oracles::transpose(&e, m);
        let inc = h.incidence_matrix();
        prop_assert_eq!(to_rows(&inc.adjacency()), oracles::matmul(&e, &et, m, n));
        prop_assert_eq!(to_rows(&h.adjacency_matrix()), oracles::matmul(&e, &et, m, n));
        let overlap = oracles::matmul(&et, &e, n, m);
        prop_assert_eq!(to_rows(&inc.edge_overlap()), overlap.clone());
        for (j, edge) in h.edges().enumerate() {
            prop_assert_eq!(overlap[j][j], edge.len() as u64);
        }
    }

    #[test]
    fn incidence_round_trip(h in hypergraphs(10)) {
        let back = h.incidence_matrix().to_hypergraph().unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn reinserting_edges_changes_nothing(h in hypergraphs(10)) {
        let mut again = h.clone();
        for e in h.edges() {
            prop_assert!(!again.add_edge(e.iter()).unwrap());
        }
        prop_assert_eq!(again.edge_count(), h.edge_count());
        prop_assert_eq!(again, h);
    }

    #[test]
    fn removing_a_vertex_drops_its_edges(h in hypergraphs(8), pick in 0usize..8) {
        let v = VertexId(pick);
        prop_assume!(h.contains_vertex(v));
        let mut g = h.clone();
        prop_assert!(g.remove_vertex(v));
        prop_assert!(!g.contains_vertex(v));
        let kept = h.edges().filter(|e| !e.contains(v)).count();
        prop_assert_eq!(g.edge_count(), kept);
        prop_assert!(g.edges().all(|e| !e.contains(v)));
    }
}

#[test]
fn incidence_matrix_rejects_empty_columns() {
    let entries = ndarray::arr2(&[[1u8, 0], [0, 0]]);
    let cols = vec![Hyperedge::new([0]).unwrap(), Hyperedge::new([1]).unwrap()];
    let inc = IncidenceMatrix::from_parts(entries, vec![VertexId(0), VertexId(1)], cols).unwrap();
    assert_eq!(inc.to_hypergraph(), Err(hyperkit::HypergraphError::EmptyColumn(1)));
}

#[test]
fn edge_order_is_insertion_order() {
    let h = Hypergraph::from_edges([vec![3, 4], vec![0, 1], vec![2]]).unwrap();
    let got: Vec<String> = h.edges().map(ToString::to_string).collect();
    assert_eq!(got, ["{3,4}", "{0,1}", "{2}"]);
    let vs: Vec<usize> = h.vertices().map(|v| v.0).collect();
    assert_eq!(vs, [0, 1, 2, 3, 4]);
}
