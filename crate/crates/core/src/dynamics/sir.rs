//! Discrete-time SIR epidemics with hyperedge contagion.
//!
//! Updates are synchronous. For a susceptible vertex `i`, let `k_i` be the
//! number of infected co-members summed over all hyperedges containing `i`
//! (an infected vertex sharing two edges with `i` counts twice). Then
//!
//! ```text
//! P(S → I) = 1 − (1 − β)^{k_i}        P(I → R) = γ
//! ```
//!
//! Aggregating `k_i` over edges gives the same distribution as one
//! independent trial per infected edge. Each infected vertex gets exactly one
//! recovery trial per step, and a vertex infected in step t cannot recover
//! before step t + 1.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{check_rate, DynamicsError};
use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Compartment {
    S,
    I,
    R,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SirConfig {
    pub beta: f64,
    pub gamma: f64,
    pub initial_infected: BTreeSet<VertexId>,
    pub steps: usize,
}

impl SirConfig {
    pub fn validate(&self, h: &Hypergraph) -> Result<(), DynamicsError> {
        check_rate("beta", self.beta)?;
        check_rate("gamma", self.gamma)?;
        if let Some(v) = self.initial_infected.iter().find(|v| !h.contains_vertex(**v)) {
            return Err(DynamicsError::UnknownVertex(*v));
        }
        Ok(())
    }

    /// States in canonical vertex order: initial infected as I, the rest S.
    pub fn initial_states(&self, h: &Hypergraph) -> Vec<Compartment> {
        h.vertices()
            .map(|v| {
                if self.initial_infected.contains(&v) {
                    Compartment::I
                } else {
                    Compartment::S
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SirRecord {
    pub step: usize,
    pub s: usize,
    pub i: usize,
    pub r: usize,
}

impl SirRecord {
    fn count(step: usize, states: &[Compartment]) -> Self {
        let mut rec = SirRecord { step, s: 0, i: 0, r: 0 };
        for c in states {
            match c {
                Compartment::S => rec.s += 1,
                Compartment::I => rec.i += 1,
                Compartment::R => rec.r += 1,
            }
        }
        rec
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SirRun {
    /// One row per step, starting with the initial state at step 0.
    pub trajectory: Vec<SirRecord>,
    pub final_states: Vec<Compartment>,
}

/// Uniformly samples `count` distinct vertices to seed the infection.
pub fn sample_initial_infected<R: Rng + ?Sized>(
    h: &Hypergraph,
    count: usize,
    rng: &mut R,
) -> Result<BTreeSet<VertexId>, DynamicsError> {
    let vertices: Vec<VertexId> = h.vertices().collect();
    if count > vertices.len() {
        return Err(DynamicsError::StateMismatch {
            expected: vertices.len(),
            got: count,
        });
    }
    Ok(vertices.choose_multiple(rng, count).copied().collect())
}

struct Contacts {
    incident: Vec<Vec<usize>>,
    members: Vec<Vec<usize>>,
}

impl Contacts {
    fn new(h: &Hypergraph) -> Self {
        let index = h.vertex_positions();
        Contacts {
            incident: h.incident_edges(),
            members: h.edges().map(|e| e.iter().map(|v| index[&v]).collect()).collect(),
        }
    }

    fn pressure(&self, states: &[Compartment]) -> Vec<usize> {
        let infected_per_edge: Vec<usize> = self
            .members
            .iter()
            .map(|ms| ms.iter().filter(|&&i| states[i] == Compartment::I).count())
            .collect();
        self.incident
            .iter()
            .enumerate()
            .map(|(i, edges)| {
                let own = usize::from(states[i] == Compartment::I);
                edges.iter().map(|&m| infected_per_edge[m] - own).sum()
            })
            .collect()
    }

    fn step<R: Rng + ?Sized>(&self, states: &[Compartment], beta: f64, gamma: f64, rng: &mut R) -> Vec<Compartment> {
        let pressure = self.pressure(states);
        states
            .iter()
            .zip(pressure)
            .map(|(&c, k)| match c {
                Compartment::S if k > 0 => {
                    let p = 1.0 - (1.0 - beta).powi(k as i32);
                    if rng.random_bool(p.clamp(0.0, 1.0)) {
                        Compartment::I
                    } else {
                        Compartment::S
                    }
                }
                Compartment::I => {
                    if rng.random_bool(gamma) {
                        Compartment::R
                    } else {
                        Compartment::I
                    }
                }
                other => other,
            })
            .collect()
    }
}

/// `k_i` for every vertex in canonical order: infected co-members summed over
/// incident edges (the vertex itself excluded).
pub fn infection_pressure(h: &Hypergraph, states: &[Compartment]) -> Result<Vec<usize>, DynamicsError> {
    check_len(h, states)?;
    Ok(Contacts::new(h).pressure(states))
}

fn check_len(h: &Hypergraph, states: &[Compartment]) -> Result<(), DynamicsError> {
    if states.len() != h.vertex_count() {
        return Err(DynamicsError::StateMismatch {
            expected: h.vertex_count(),
            got: states.len(),
        });
    }
    Ok(())
}

/// One synchronous update. `states` is indexed by canonical vertex position.
pub fn sir_step<R: Rng + ?Sized>(
    h: &Hypergraph,
    states: &[Compartment],
    cfg: &SirConfig,
    rng: &mut R,
) -> Result<Vec<Compartment>, DynamicsError> {
    cfg.validate(h)?;
    check_len(h, states)?;
    Ok(Contacts::new(h).step(states, cfg.beta, cfg.gamma, rng))
}

pub fn sir_run<R: Rng + ?Sized>(h: &Hypergraph, cfg: &SirConfig, rng: &mut R) -> Result<SirRun, DynamicsError> {
    cfg.validate(h)?;
    let contacts = Contacts::new(h);
    let mut states = cfg.initial_states(h);
    let mut trajectory = Vec::with_capacity(cfg.steps + 1);
    trajectory.push(SirRecord::count(0, &states));
    for step in 1..=cfg.steps {
        states = contacts.step(&states, cfg.beta, cfg.gamma, rng);
        trajectory.push(SirRecord::count(step, &states));
    }
    Ok(SirRun {
        trajectory,
        final_states: states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{RngSeed, Stream};
    use Compartment::*;

    fn config(beta: f64, gamma: f64, infected: &[usize], steps: usize) -> SirConfig {
        SirConfig {
            beta,
            gamma,
            initial_infected: infected.iter().copied().map(VertexId).collect(),
            steps,
        }
    }

    #[test]
    fn pressure_counts_multiplicity() {
        // 0 shares {0,1} and {0,1,2} with infected 1, and {0,2} with infected 2.
        let h = Hypergraph::from_edges([vec![0, 1], vec![0, 1, 2], vec![0, 2]]).unwrap();
        let k = infection_pressure(&h, &[S, I, I]).unwrap();
        assert_eq!(k[0], 4);
        assert_eq!(k[1], 1);
        assert_eq!(k[2], 1);
    }

    #[test]
    fn beta_zero_never_infects() {
        let h = Hypergraph::from_edges([vec![0, 1, 2], vec![2, 3]]).unwrap();
        let mut rng = RngSeed(1).rng(Stream::Sir);
        let run = sir_run(&h, &config(0.0, 0.0, &[0], 30), &mut rng).unwrap();
        assert!(run.trajectory.iter().all(|r| r.i == 1 && r.s == 3));
    }

    #[test]
    fn gamma_one_recovers_next_step() {
        let h = Hypergraph::from_edges([vec![0, 1], vec![2, 3]]).unwrap();
        let mut rng = RngSeed(2).rng(Stream::Sir);
        let next = sir_step(&h, &[I, S, I, R], &config(0.0, 1.0, &[], 1), &mut rng).unwrap();
        assert_eq!(next, vec![R, S, R, R]);
    }

    #[test]
    fn newly_infected_do_not_recover_same_step() {
        let h = Hypergraph::from_edges([vec![0, 1]]).unwrap();
        let mut rng = RngSeed(3).rng(Stream::Sir);
        let next = sir_step(&h, &[I, S], &config(1.0, 1.0, &[], 1), &mut rng).unwrap();
        assert_eq!(next, vec![R, I]);
    }

    #[test]
    fn no_initial_infection_is_absorbing() {
        let h = Hypergraph::from_edges([vec![0, 1, 2]]).unwrap();
        let mut rng = RngSeed(4).rng(Stream::Sir);
        let run = sir_run(&h, &config(0.9, 0.5, &[], 10), &mut rng).unwrap();
        assert_eq!(run.trajectory.len(), 11);
        assert!(run.trajectory.iter().all(|r| r.s == 3));
    }

    #[test]
    fn validation() {
        let h = Hypergraph::from_edges([vec![0, 1]]).unwrap();
        let mut rng = RngSeed(5).rng(Stream::Sir);
        assert!(matches!(
            sir_run(&h, &config(1.2, 0.1, &[0], 1), &mut rng),
            Err(DynamicsError::InvalidRate { name: "beta", .. })
        ));
        assert_eq!(
            sir_run(&h, &config(0.2, 0.1, &[9], 1), &mut rng),
            Err(DynamicsError::UnknownVertex(VertexId(9)))
        );
        assert!(matches!(
            sir_step(&h, &[S], &config(0.2, 0.1, &[], 1), &mut rng),
            Err(DynamicsError::StateMismatch { .. })
        ));
    }

    #[test]
    fn initial_sample_is_distinct() {
        let h = Hypergraph::with_vertices(20);
        let mut rng = RngSeed(6).rng(Stream::SirInit);
        let picked = sample_initial_infected(&h, 5, &mut rng).unwrap();
        assert_eq!(picked.len(), 5);
        assert!(sample_initial_infected(&h, 21, &mut rng).is_err());
    }
}
