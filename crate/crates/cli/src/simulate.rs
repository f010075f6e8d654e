use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use hyperkit::dynamics::{
    mean_coefficient, mutual_information, random_walk, sample_initial_infected, schelling_run, sir_run,
    transition_matrix, Compartment, Label, SchellingRun, SchellingState, SirConfig, SirRun, Trajectory,
};
use hyperkit::io;
use hyperkit::rng::Stream;
use hyperkit::{Hypergraph, RngSeed, VertexId};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{SchellingArgs, Simulation, SirArgs, WalkArgs};
use crate::manifest::{write_json, Manifest};
use crate::Usage;

/// Bins per axis for the S/I mutual information in multi-run summaries.
const MI_BINS: usize = 10;

enum Outcome {
    Sir {
        initial: BTreeSet<VertexId>,
        run: SirRun,
    },
    Schelling {
        initial_g: Option<f64>,
        final_g: Option<f64>,
        state: Box<SchellingState>,
        run: SchellingRun,
    },
    Walk {
        path: Vec<VertexId>,
    },
}

fn run_sir(h: &Hypergraph, a: &SirArgs, seed: RngSeed) -> anyhow::Result<Outcome> {
    let initial = sample_initial_infected(h, a.initial_infected, &mut seed.rng(Stream::SirInit))?;
    let cfg = SirConfig {
        beta: a.beta,
        gamma: a.gamma,
        initial_infected: initial.clone(),
        steps: a.steps,
    };
    let run = sir_run(h, &cfg, &mut seed.rng(Stream::Sir))?;
    Ok(Outcome::Sir { initial, run })
}

fn run_schelling(h: &Hypergraph, a: &SchellingArgs, seed: RngSeed) -> anyhow::Result<Outcome> {
    let sizes = vec![a.per_label; a.labels];
    let mut state = SchellingState::random(h, &sizes, a.tau, seed)?;
    let initial_g = mean_coefficient(h, &state);
    let run = schelling_run(h, &mut state, a.iters)?;
    let final_g = mean_coefficient(h, &state);
    Ok(Outcome::Schelling {
        initial_g,
        final_g,
        state: Box::new(state),
        run,
    })
}

fn run_walk(h: &Hypergraph, a: &WalkArgs, seed: RngSeed) -> anyhow::Result<Outcome> {
    let path = random_walk(h, VertexId(a.start), a.steps, a.lazy, &mut seed.rng(Stream::Walk))?;
    Ok(Outcome::Walk { path })
}

fn run_once(sim: &Simulation, h: &Hypergraph, seed: RngSeed) -> anyhow::Result<Outcome> {
    match sim {
        Simulation::Sir(a) => run_sir(h, a, seed),
        Simulation::Schelling(a) => run_schelling(h, a, seed),
        Simulation::Walk(a) => run_walk(h, a, seed),
    }
}

#[derive(Serialize)]
struct SirFinal<'a> {
    model: &'static str,
    initial_infected: &'a BTreeSet<VertexId>,
    s: usize,
    i: usize,
    r: usize,
    states: BTreeMap<VertexId, Compartment>,
}

#[derive(Serialize)]
struct SchellingFinal<'a> {
    model: &'static str,
    iterations: usize,
    moves: usize,
    converged: bool,
    initial_mean_g: Option<f64>,
    final_mean_g: Option<f64>,
    class_sizes: BTreeMap<Label, usize>,
    labels: &'a BTreeMap<VertexId, Label>,
}

#[derive(Serialize)]
struct WalkFinal {
    model: &'static str,
    start: VertexId,
    steps: usize,
    final_vertex: VertexId,
    visits: BTreeMap<VertexId, usize>,
}

fn visits(path: &[VertexId]) -> BTreeMap<VertexId, usize> {
    let mut counts = BTreeMap::new();
    for &v in path {
        *counts.entry(v).or_insert(0) += 1;
    }
    counts
}

/// Writes `trajectory.csv` and `final_state.json` into `dir`.
fn write_outcome(dir: &Path, h: &Hypergraph, outcome: &Outcome, written: &mut Vec<PathBuf>) -> anyhow::Result<()> {
    let trajectory = dir.join("trajectory.csv");
    let final_state = dir.join("final_state.json");
    match outcome {
        Outcome::Sir { initial, run } => {
            io::export_trajectory_csv(&Trajectory::Sir(run.trajectory.clone()), &trajectory)?;
            let last = run.trajectory.last().expect("trajectory has a step-0 row");
            write_json(
                &final_state,
                &SirFinal {
                    model: "sir",
                    initial_infected: initial,
                    s: last.s,
                    i: last.i,
                    r: last.r,
                    states: h.vertices().zip(run.final_states.iter().copied()).collect(),
                },
            )?;
        }
        Outcome::Schelling {
            initial_g,
            final_g,
            state,
            run,
        } => {
            io::export_trajectory_csv(&Trajectory::Schelling(run.trajectory.clone()), &trajectory)?;
            write_json(
                &final_state,
                &SchellingFinal {
                    model: "schelling",
                    iterations: run.iterations,
                    moves: run.moves,
                    converged: run.converged,
                    initial_mean_g: *initial_g,
                    final_mean_g: *final_g,
                    class_sizes: state.class_sizes(),
                    labels: state.labels(),
                },
            )?;
        }
        Outcome::Walk { path } => {
            let file = fs::File::create(&trajectory).with_context(|| format!("writing {}", trajectory.display()))?;
            io::write_walk_csv(path, file)?;
            write_json(
                &final_state,
                &WalkFinal {
                    model: "walk",
                    start: path[0],
                    steps: path.len() - 1,
                    final_vertex: *path.last().expect("walk holds its start"),
                    visits: visits(path),
                },
            )?;
        }
    }
    written.push(trajectory);
    written.push(final_state);
    Ok(())
}

#[derive(Serialize)]
struct MeanRow {
    step: usize,
    s: f64,
    i: f64,
    r: f64,
}

#[derive(Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
enum Summary {
    Sir {
        runs: usize,
        mean_final_r: f64,
        /// Pooled over every (S, I) pair of every run.
        mutual_information_s_i: Option<f64>,
        mean_trajectory: Vec<MeanRow>,
    },
    Schelling {
        runs: usize,
        mean_initial_g: Option<f64>,
        mean_final_g: Option<f64>,
        improved_fraction: Option<f64>,
        converged_fraction: f64,
    },
    Walk {
        runs: usize,
        visit_frequency: BTreeMap<VertexId, f64>,
        stationary_distribution: BTreeMap<VertexId, f64>,
    },
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    (n > 0).then(|| sum / n as f64)
}

fn summarize(sim: &Simulation, h: &Hypergraph, outcomes: &[Outcome]) -> anyhow::Result<Summary> {
    let runs = outcomes.len();
    Ok(match sim {
        Simulation::Sir(_) => {
            let sir: Vec<&SirRun> = outcomes
                .iter()
                .filter_map(|o| match o {
                    Outcome::Sir { run, .. } => Some(run),
                    _ => None,
                })
                .collect();
            let len = sir[0].trajectory.len();
            let mean_trajectory = (0..len)
                .map(|t| {
                    let rows = || sir.iter().map(move |r| r.trajectory[t]);
                    MeanRow {
                        step: t,
                        s: mean(rows().map(|x| x.s as f64)).unwrap_or(0.0),
                        i: mean(rows().map(|x| x.i as f64)).unwrap_or(0.0),
                        r: mean(rows().map(|x| x.r as f64)).unwrap_or(0.0),
                    }
                })
                .collect::<Vec<_>>();
            let (s, i): (Vec<f64>, Vec<f64>) = sir
                .iter()
                .flat_map(|r| r.trajectory.iter().map(|x| (x.s as f64, x.i as f64)))
                .unzip();
            Summary::Sir {
                runs,
                mean_final_r: mean_trajectory.last().map_or(0.0, |row| row.r),
                mutual_information_s_i: mutual_information(&s, &i, MI_BINS).ok(),
                mean_trajectory,
            }
        }
        Simulation::Schelling(_) => {
            let pairs: Vec<(Option<f64>, Option<f64>, bool)> = outcomes
                .iter()
                .filter_map(|o| match o {
                    Outcome::Schelling {
                        initial_g,
                        final_g,
                        run,
                        ..
                    } => Some((*initial_g, *final_g, run.converged)),
                    _ => None,
                })
                .collect();
            let comparable: Vec<(f64, f64)> = pairs.iter().filter_map(|&(a, b, _)| Some((a?, b?))).collect();
            Summary::Schelling {
                runs,
                mean_initial_g: mean(pairs.iter().filter_map(|p| p.0)),
                mean_final_g: mean(pairs.iter().filter_map(|p| p.1)),
                improved_fraction: mean(comparable.iter().map(|&(a, b)| f64::from(u8::from(b >= a)))),
                converged_fraction: mean(pairs.iter().map(|p| f64::from(u8::from(p.2)))).unwrap_or(0.0),
            }
        }
        Simulation::Walk(a) => {
            let mut counts: BTreeMap<VertexId, usize> = h.vertices().map(|v| (v, 0)).collect();
            let mut total = 0usize;
            for o in outcomes {
                if let Outcome::Walk { path } = o {
                    for v in path {
                        *counts.get_mut(v).expect("walk stays on the vertex set") += 1;
                    }
                    total += path.len();
                }
            }
            let t = transition_matrix(h, a.lazy)?;
            let pi = t.stationary_distribution(1e-12, 100_000);
            Summary::Walk {
                runs,
                visit_frequency: counts.into_iter().map(|(v, c)| (v, c as f64 / total as f64)).collect(),
                stationary_distribution: t.vertices().iter().copied().zip(pi.iter().copied()).collect(),
            }
        }
    })
}

pub fn simulate(sim: &Simulation, mut manifest: Manifest) -> anyhow::Result<()> {
    let args = sim.run_args();
    if args.runs == 0 {
        return Err(Usage("--runs must be at least 1".into()).into());
    }
    let h = io::load_hypergraph(&args.input)?;
    let base = RngSeed(args.seed);
    let seeds: Vec<RngSeed> = if args.runs == 1 {
        vec![base]
    } else {
        (0..args.runs as u64).map(|i| base.child(i)).collect()
    };
    let outcomes = seeds
        .par_iter()
        .map(|&seed| run_once(sim, &h, seed))
        .collect::<anyhow::Result<Vec<_>>>()?;

    fs::create_dir_all(&args.output).with_context(|| format!("creating {}", args.output.display()))?;
    let mut written = Vec::new();
    if let [single] = outcomes.as_slice() {
        write_outcome(&args.output, &h, single, &mut written)?;
    } else {
        for (i, outcome) in outcomes.iter().enumerate() {
            let dir = args.output.join(format!("run-{i:04}"));
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            write_outcome(&dir, &h, outcome, &mut written)?;
        }
        let summary = args.output.join("summary.json");
        write_json(&summary, &summarize(sim, &h, &outcomes)?)?;
        written.push(summary);
    }
    log::info!("wrote {} files to {}", written.len(), args.output.display());
    manifest.outputs = written;
    manifest.write(&args.output.join("manifest.json"))
}
