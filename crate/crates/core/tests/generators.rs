mod support;

use std::collections::BTreeSet;

use hyperkit::generators::{
    k_uniform, simple_bipartite, simple_bipartite_sample, simple_matrix, simple_matrix_sample, simple_order,
    simple_powersets, Model,
};
use hyperkit::RngSeed;
use proptest::prelude::*;
use support::oracles;

const SEEDS: u64 = 2000;

fn mean_and_sigma(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// The mean of `SEEDS` draws lies within 3σ of a Binomial(trials, p) mean.
fn assert_binomial_mean(samples: impl Iterator<Item = usize>, trials: f64, p: f64) {
    let xs: Vec<f64> = samples.map(|x| x as f64).collect();
    let (mean, _) = mean_and_sigma(&xs);
    let expected = trials * p;
    let sigma = (trials * p * (1.0 - p) / xs.len() as f64).sqrt();
    assert!(
        (mean - expected).abs() <= 3.0 * sigma,
        "mean {mean} vs {expected} (σ {sigma})"
    );
}

#[test]
fn matrix_entries_follow_binomial() {
    let draws = (0..SEEDS).map(|s| {
        let raw = simple_matrix_sample(10, 20, 0.3, RngSeed(s)).unwrap();
        raw.iter().filter(|&&x| x == 1).count()
    });
    assert_binomial_mean(draws, 200.0, 0.3);
}

#[test]
fn matrix_output_matches_collapsed_oracle() {
    let xs: Vec<f64> = (0..SEEDS)
        .map(|s| simple_matrix(10, 20, 0.3, RngSeed(s)).unwrap().incidence_count() as f64)
        .collect();
    let (mean, sigma) = mean_and_sigma(&xs);
    let expected = oracles::collapsed_incidence_mean(10, 20, 0.3);
    assert!(
        (mean - expected).abs() <= 3.0 * sigma,
        "mean {mean} vs {expected} (σ {sigma})"
    );
}

#[test]
fn bipartite_links_follow_binomial() {
    let draws = (0..SEEDS).map(|s| simple_bipartite_sample(10, 20, 0.3, RngSeed(s)).unwrap().len());
    assert_binomial_mean(draws, 200.0, 0.3);
}

#[test]
fn bipartite_edge_sizes_chi_square() {
    let mut observed = [0.0f64; 9];
    for s in 0..SEEDS {
        for e in simple_bipartite(8, 8, 0.5, RngSeed(s)).unwrap().edges() {
            observed[e.len()] += 1.0;
        }
    }
    let total: f64 = observed.iter().sum();
    let expected: Vec<f64> = (1..=8).map(|k| total * oracles::binomial(8, k) / 255.0).collect();
    let chi2 = oracles::chi_square(&observed[1..], &expected);
    // 0.999 quantile of χ² with 7 degrees of freedom.
    assert!(chi2 < 24.322, "χ² = {chi2}");
}

#[test]
fn powerset_edge_count() {
    let draws = (0..SEEDS).map(|s| simple_powersets(4, 0.25, RngSeed(s)).unwrap().edge_count());
    assert_binomial_mean(draws, 15.0, 0.25);
}

#[test]
fn order_edge_count() {
    let draws = (0..SEEDS).map(|s| simple_order(15, 3, 0.02, RngSeed(s)).unwrap().edge_count());
    assert_binomial_mean(draws, 575.0, 0.02);
}

#[test]
fn uniform_edge_count() {
    let draws = (0..SEEDS).map(|s| k_uniform(10, 3, 0.1, RngSeed(s)).unwrap().edge_count());
    assert_binomial_mean(draws, 120.0, 0.1);
}

fn models() -> impl Strategy<Value = Model> {
    let p = 0.0f64..=1.0;
    prop_oneof![
        (0usize..8, 0usize..8, p.clone()).prop_map(|(n, m, p)| Model::SimpleMatrix { n, m, p }),
        (0usize..8, 0usize..8, p.clone()).prop_map(|(n, m, p)| Model::SimpleBipartite { n, m, p }),
        (0usize..7, p.clone()).prop_map(|(n, p)| Model::SimplePowersets { n, p }),
        (1usize..8, p.clone()).prop_flat_map(|(n, p)| (1..=n).prop_map(move |k| Model::SimpleOrder { n, k, p })),
        (1usize..8, p).prop_flat_map(|(n, p)| (1..=n).prop_map(move |k| Model::KUniform { n, k, p })),
    ]
}

proptest! {
    #[test]
    fn generation_is_deterministic_and_simple(model in models(), seed: u64) {
        let a = model.generate(RngSeed(seed)).unwrap();
        let b = model.generate(RngSeed(seed)).unwrap();
        prop_assert_eq!(&a, &b);
        let mut seen = BTreeSet::new();
        for e in a.edges() {
            prop_assert!(!e.is_empty());
            prop_assert!(seen.insert(e.clone()));
        }
        match model {
            Model::KUniform { k, .. } => prop_assert!(a.edges().all(|e| e.len() == k)),
            Model::SimpleOrder { k, .. } => prop_assert!(a.edges().all(|e| e.len() <= k)),
            _ => {}
        }
    }

    #[test]
    fn order_at_full_bound_is_powerset(n in 1usize..8, p in 0.0f64..=1.0, seed: u64) {
        prop_assert_eq!(
            simple_order(n, n, p, RngSeed(seed)).unwrap(),
            simple_powersets(n, p, RngSeed(seed)).unwrap()
        );
    }
}
