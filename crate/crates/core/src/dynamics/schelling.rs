//! Generalized Schelling segregation on a hypergraph.
//!
//! Some vertices carry a label, the rest are unlabeled and act as vacancies.
//! The neighbourhood coefficient of a labeled vertex `v` is the mean, over the
//! hyperedges of size > 1 containing `v`, of the fraction of `v`'s
//! co-members sharing its label:
//!
//! ```text
//! G(v) = (1/K_v) Σ_{j : v ∈ e_j, |e_j| > 1} |N_j(v)| / (|e_j| − 1)
//! ```
//!
//! Single-vertex edges are ignored. A vertex with `K_v = 0` has no
//! constraint and never moves.
//!
//! One step picks a labeled vertex uniformly at random. If `G(v) < τ` it picks
//! an unlabeled vertex uniformly at random; when that vertex lies in at least
//! one edge of size > 1, the label moves there and `v` becomes unlabeled.
//! Otherwise nothing happens this step.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{check_rate, DynamicsError};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::rng::{RngSeed, SimRng, Stream};

pub type Label = u32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coefficient {
    Value(f64),
    /// The vertex lies in no hyperedge with more than one member.
    NoConstraint,
}

impl Coefficient {
    pub fn value(self) -> Option<f64> {
        match self {
            Coefficient::Value(g) => Some(g),
            Coefficient::NoConstraint => None,
        }
    }

    /// `G(v) ≥ τ`, with unconstrained vertices always satisfied.
    pub fn satisfies(self, tau: f64) -> bool {
        match self {
            Coefficient::Value(g) => g >= tau,
            Coefficient::NoConstraint => true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SchellingState {
    labels: BTreeMap<VertexId, Label>,
    tau: f64,
    rng: SimRng,
}

impl SchellingState {
    /// State with an explicit labelling. `labels` must name existing vertices
    /// and leave at least one vertex unlabeled.
    pub fn new(
        h: &Hypergraph,
        labels: BTreeMap<VertexId, Label>,
        tau: f64,
        seed: RngSeed,
    ) -> Result<Self, DynamicsError> {
        check_rate("tau", tau)?;
        if let Some(v) = labels.keys().find(|v| !h.contains_vertex(**v)) {
            return Err(DynamicsError::UnknownVertex(*v));
        }
        if labels.len() >= h.vertex_count() {
            return Err(DynamicsError::TooManyLabeled {
                requested: labels.len(),
                vertices: h.vertex_count(),
            });
        }
        Ok(SchellingState {
            labels,
            tau,
            rng: seed.rng(Stream::Schelling),
        })
    }

    /// Random initial labelling: `class_sizes[a]` vertices get label `a`,
    /// placed by a uniform shuffle of the vertex list.
    pub fn random(h: &Hypergraph, class_sizes: &[usize], tau: f64, seed: RngSeed) -> Result<Self, DynamicsError> {
        let requested: usize = class_sizes.iter().sum();
        if requested >= h.vertex_count() {
            return Err(DynamicsError::TooManyLabeled {
                requested,
                vertices: h.vertex_count(),
            });
        }
        let mut slots: Vec<Option<Label>> = class_sizes
            .iter()
            .enumerate()
            .flat_map(|(label, &count)| std::iter::repeat_n(Some(label as Label), count))
            .collect();
        slots.resize(h.vertex_count(), None);
        slots.shuffle(&mut seed.rng(Stream::SchellingInit));
        let labels = h
            .vertices()
            .zip(slots)
            .filter_map(|(v, slot)| slot.map(|l| (v, l)))
            .collect();
        Self::new(h, labels, tau, seed)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, Label> {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<Label> {
        self.labels.get(&v).copied()
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn labeled_count(&self) -> usize {
        self.labels.len()
    }

    /// |V_a| for every label in use.
    pub fn class_sizes(&self) -> BTreeMap<Label, usize> {
        let mut sizes = BTreeMap::new();
        for &l in self.labels.values() {
            *sizes.entry(l).or_insert(0) += 1;
        }
        sizes
    }
}

/// Vertex position → member lists of the incident edges of size > 1.
struct Neighbourhoods {
    vertices: Vec<VertexId>,
    incident: BTreeMap<VertexId, Vec<usize>>,
    edges: Vec<Vec<VertexId>>,
}

impl Neighbourhoods {
    fn new(h: &Hypergraph) -> Self {
        let edges: Vec<Vec<VertexId>> = h
            .edges()
            .filter(|e| e.len() > 1)
            .map(|e| e.members().to_vec())
            .collect();
        let mut incident: BTreeMap<VertexId, Vec<usize>> = h.vertices().map(|v| (v, Vec::new())).collect();
        for (j, e) in edges.iter().enumerate() {
            for v in e {
                incident.get_mut(v).expect("member is a vertex").push(j);
            }
        }
        Neighbourhoods {
            vertices: h.vertices().collect(),
            incident,
            edges,
        }
    }

    fn constrained(&self, v: VertexId) -> bool {
        self.incident.get(&v).is_some_and(|es| !es.is_empty())
    }

    fn coefficient(&self, labels: &BTreeMap<VertexId, Label>, v: VertexId) -> Result<Coefficient, DynamicsError> {
        let incident = self.incident.get(&v).ok_or(DynamicsError::UnknownVertex(v))?;
        let label = *labels.get(&v).ok_or(DynamicsError::UnlabeledVertex(v))?;
        if incident.is_empty() {
            return Ok(Coefficient::NoConstraint);
        }
        let total: f64 = incident
            .iter()
            .map(|&j| {
                let e = &self.edges[j];
                let same = e.iter().filter(|&&w| w != v && labels.get(&w) == Some(&label)).count();
                same as f64 / (e.len() - 1) as f64
            })
            .sum();
        Ok(Coefficient::Value(total / incident.len() as f64))
    }

    fn mean(&self, labels: &BTreeMap<VertexId, Label>) -> Option<f64> {
        let values: Vec<f64> = labels
            .keys()
            .filter_map(|&v| self.coefficient(labels, v).ok().and_then(Coefficient::value))
            .collect();
        if values.is_empty() {
            None
        } else {
            Some(values.iter().sum::<f64>() / values.len() as f64)
        }
    }

    fn all_satisfied(&self, labels: &BTreeMap<VertexId, Label>, tau: f64) -> bool {
        labels
            .keys()
            .all(|&v| self.coefficient(labels, v).map(|g| g.satisfies(tau)).unwrap_or(true))
    }

    fn step(&self, state: &mut SchellingState) -> Result<StepOutcome, DynamicsError> {
        let labeled: Vec<VertexId> = state.labels.keys().copied().collect();
        if labeled.is_empty() {
            return Err(DynamicsError::NoLabeledVertex);
        }
        let v = labeled[state.rng.random_range(0..labeled.len())];
        if self.coefficient(&state.labels, v)?.satisfies(state.tau) {
            return Ok(StepOutcome::Satisfied(v));
        }
        let vacant: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|u| !state.labels.contains_key(u))
            .collect();
        if vacant.is_empty() {
            return Err(DynamicsError::NoUnlabeledVertex);
        }
        let u = vacant[state.rng.random_range(0..vacant.len())];
        if !self.constrained(u) {
            return Ok(StepOutcome::Blocked { from: v, to: u });
        }
        let label = state.labels.remove(&v).expect("v is labeled");
        state.labels.insert(u, label);
        Ok(StepOutcome::Moved { from: v, to: u })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// The selected vertex had `G(v) ≥ τ` or no constraint.
    Satisfied(VertexId),
    /// The selected vertex wanted to move but the drawn vacancy lies in no
    /// edge of size > 1.
    Blocked {
        from: VertexId,
        to: VertexId,
    },
    Moved {
        from: VertexId,
        to: VertexId,
    },
}

impl StepOutcome {
    pub fn moved(&self) -> bool {
        matches!(self, StepOutcome::Moved { .. })
    }
}

/// `G(v)` for a labeled vertex.
pub fn neighborhood_coefficient(
    h: &Hypergraph,
    state: &SchellingState,
    v: VertexId,
) -> Result<Coefficient, DynamicsError> {
    Neighbourhoods::new(h).coefficient(&state.labels, v)
}

/// Mean `G(v)` over labeled vertices that have a constraint; `None` if there
/// are none.
pub fn mean_coefficient(h: &Hypergraph, state: &SchellingState) -> Option<f64> {
    Neighbourhoods::new(h).mean(&state.labels)
}

pub fn schelling_step(h: &Hypergraph, state: &mut SchellingState) -> Result<StepOutcome, DynamicsError> {
    Neighbourhoods::new(h).step(state)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchellingRecord {
    pub step: usize,
    pub mean_g: Option<f64>,
    /// Moves made in this step (0 or 1); always 0 for the initial row.
    pub moves: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchellingRun {
    pub iterations: usize,
    pub moves: usize,
    pub converged: bool,
    /// Initial row plus one row per iteration.
    pub trajectory: Vec<SchellingRecord>,
}

/// Steps until every labeled vertex is satisfied or `max_iters` steps have
/// been taken.
pub fn schelling_run(
    h: &Hypergraph,
    state: &mut SchellingState,
    max_iters: usize,
) -> Result<SchellingRun, DynamicsError> {
    let hoods = Neighbourhoods::new(h);
    let mut trajectory = vec![SchellingRecord {
        step: 0,
        mean_g: hoods.mean(&state.labels),
        moves: 0,
    }];
    let mut iterations = 0;
    let mut moves = 0;
    let mut converged = hoods.all_satisfied(&state.labels, state.tau);
    while !converged && iterations < max_iters {
        let outcome = hoods.step(state)?;
        iterations += 1;
        let moved = usize::from(outcome.moved());
        moves += moved;
        trajectory.push(SchellingRecord {
            step: iterations,
            mean_g: hoods.mean(&state.labels),
            moves: moved,
        });
        converged = hoods.all_satisfied(&state.labels, state.tau);
    }
    log::debug!("schelling run: {iterations} iterations, {moves} moves, converged={converged}");
    Ok(SchellingRun {
        iterations,
        moves,
        converged,
        trajectory,
    })
}
