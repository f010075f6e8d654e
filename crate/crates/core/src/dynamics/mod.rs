//! Dynamical processes on hypergraphs.

mod information;
mod schelling;
mod sir;
mod walk;

use thiserror::Error;

use crate::hypergraph::VertexId;

pub use information::mutual_information;
pub use schelling::{
    mean_coefficient, neighborhood_coefficient, schelling_run, schelling_step, Coefficient, Label, SchellingRecord,
    SchellingRun, SchellingState, StepOutcome,
};
pub use sir::{
    infection_pressure, sample_initial_infected, sir_run, sir_step, Compartment, SirConfig, SirRecord, SirRun,
};
pub use walk::{random_walk, transition_matrix, TransitionMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("vertex {0} belongs to no hyperedge; transition probabilities are undefined")]
    IsolatedVertex(VertexId),
    #[error("vertex {0} only belongs to single-vertex hyperedges; its transition row has a zero denominator")]
    DisconnectedDenominator(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} carries no label")]
    UnlabeledVertex(VertexId),
    #[error("a move is required but every vertex is labeled")]
    NoUnlabeledVertex,
    #[error("no labeled vertex to select")]
    NoLabeledVertex,
    #[error("{name} must lie in [0, 1], got {value}")]
    InvalidRate { name: &'static str, value: f64 },
    #[error("cannot place {requested} labeled vertices on {vertices} vertices with at least one left unlabeled")]
    TooManyLabeled { requested: usize, vertices: usize },
    #[error("state covers {got} vertices but the hypergraph has {expected}")]
    StateMismatch { expected: usize, got: usize },
    #[error("sequences differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("input sequences are empty")]
    EmptyInput,
    #[error("bin count must be positive")]
    ZeroBins,
}

/// Per-step record of a simulation, in a form ready for CSV export.
#[derive(Debug, Clone, PartialEq)]
pub enum Trajectory {
    Sir(Vec<SirRecord>),
    Schelling(Vec<SchellingRecord>),
}

impl Trajectory {
    pub fn len(&self) -> usize {
        match self {
            Trajectory::Sir(rows) => rows.len(),
            Trajectory::Schelling(rows) => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) fn check_rate(name: &'static str, value: f64) -> Result<(), DynamicsError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(DynamicsError::InvalidRate { name, value })
    }
}
