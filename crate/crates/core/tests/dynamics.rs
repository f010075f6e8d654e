mod support;

use hyperkit::dynamics::{
    mutual_information, random_walk, schelling_run, sir_run, sir_step, transition_matrix, Compartment, DynamicsError,
    SchellingState, SirConfig,
};
use hyperkit::rng::Stream;
use hyperkit::{Hypergraph, RngSeed, VertexId};
use proptest::prelude::*;
use support::{hypergraphs, oracles};

fn check_against_oracle(h: &Hypergraph, lazy: bool) -> Result<(), TestCaseError> {
    let h = h.without_isolated_vertices();
    prop_assume!(h.vertex_count() > 0);
    let rows = oracles::transition_rows(&h, lazy);
    match transition_matrix(&h, lazy) {
        Ok(t) => {
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_ref().expect("library produced a row the oracle cannot");
                let mut total = 0.0;
                for (j, &p) in row.iter().enumerate() {
                    prop_assert!((t.get(i, j) - p).abs() <= 1e-12, "T[{i},{j}] = {} vs {p}", t.get(i, j));
                    total += t.get(i, j);
                }
                prop_assert!((total - 1.0).abs() <= 1e-12);
            }
        }
        Err(DynamicsError::DisconnectedDenominator(v)) => {
            prop_assert!(!lazy);
            let i = h.vertices().position(|u| u == v).unwrap();
            prop_assert!(rows[i].is_none());
        }
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    }
    Ok(())
}

proptest! {
    #[test]
    fn transition_matches_enumeration(h in hypergraphs(10)) {
        check_against_oracle(&h, false)?;
    }

    #[test]
    fn lazy_transition_matches_enumeration(h in hypergraphs(10)) {
        check_against_oracle(&h, true)?;
    }

    #[test]
    fn walk_only_uses_positive_transitions(h in hypergraphs(8), seed: u64) {
        let h = h.without_isolated_vertices();
        prop_assume!(h.vertex_count() > 0);
        let Ok(t) = transition_matrix(&h, false) else { return Ok(()) };
        let start = h.vertices().next().unwrap();
        let mut rng = RngSeed(seed).rng(Stream::Walk);
        let path = random_walk(&h, start, 50, false, &mut rng).unwrap();
        prop_assert_eq!(path.len(), 51);
        let pos = h.vertex_positions();
        for w in path.windows(2) {
            prop_assert!(t.get(pos[&w[0]], pos[&w[1]]) > 0.0);
        }
    }

    #[test]
    fn mutual_information_is_symmetric(
        pairs in proptest::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 1..200),
        bins in 1usize..16,
    ) {
        let (x, y): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        let a = mutual_information(&x, &y, bins).unwrap();
        let b = mutual_information(&y, &x, bins).unwrap();
        prop_assert!((a - b).abs() <= 1e-12);
        prop_assert!(a >= -1e-12);
    }

    #[test]
    fn sir_conserves_population(h in hypergraphs(12), seed: u64, beta in 0.0f64..=1.0, gamma in 0.0f64..=1.0) {
        let n = h.vertex_count();
        let cfg = SirConfig {
            beta,
            gamma,
            initial_infected: [VertexId(0)].into(),
            steps: 15,
        };
        let mut rng = RngSeed(seed).rng(Stream::Sir);
        let run = sir_run(&h, &cfg, &mut rng).unwrap();
        prop_assert_eq!(run.trajectory.len(), 16);
        for w in run.trajectory.windows(2) {
            prop_assert_eq!(w[1].s + w[1].i + w[1].r, n);
            prop_assert!(w[1].s <= w[0].s);
            prop_assert!(w[1].r >= w[0].r);
        }
    }

    #[test]
    fn schelling_conserves_classes(h in hypergraphs(12), seed: u64, tau in 0.0f64..=1.0) {
        let n = h.vertex_count();
        prop_assume!(n >= 4);
        let sizes = [1, (n - 2) / 2];
        let mut state = SchellingState::random(&h, &sizes, tau, RngSeed(seed)).unwrap();
        let before = state.class_sizes();
        let run = schelling_run(&h, &mut state, 60).unwrap();
        prop_assert_eq!(state.class_sizes(), before);
        prop_assert_eq!(run.trajectory.len(), run.iterations + 1);
        prop_assert!(run.iterations <= 60);
        prop_assert!(state.labeled_count() < n);
    }
}

#[test]
fn sir_one_step_infection_frequency() {
    // Vertex 0 shares {0,1} with infected 1 and {0,2} with infected 2: k = 2.
    let h = Hypergraph::from_edges([vec![0, 1], vec![0, 2]]).unwrap();
    let cfg = SirConfig {
        beta: 0.4,
        gamma: 0.0,
        initial_infected: [VertexId(1), VertexId(2)].into(),
        steps: 1,
    };
    let start = cfg.initial_states(&h);
    let mut rng = RngSeed(11).rng(Stream::Sir);
    let trials = 20_000;
    let hits = (0..trials)
        .filter(|_| sir_step(&h, &start, &cfg, &mut rng).unwrap()[0] == Compartment::I)
        .count();
    let p = 1.0 - 0.6f64 * 0.6;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    let freq = hits as f64 / trials as f64;
    assert!((freq - p).abs() <= 3.0 * sigma, "{freq} vs {p}");
}

#[test]
fn unknown_start_is_rejected() {
    let h = Hypergraph::from_edges([vec![0, 1]]).unwrap();
    let mut rng = RngSeed(0).rng(Stream::Walk);
    assert_eq!(
        random_walk(&h, VertexId(7), 3, false, &mut rng),
        Err(DynamicsError::UnknownVertex(VertexId(7)))
    );
}
