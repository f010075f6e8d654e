use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperkit::algorithms::ExpansionMode;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "hyperkit", version, about = "Generate, analyse and simulate on hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Draw a random hypergraph
    Generate(GenerateArgs),
    /// Print size and shape metrics as JSON
    Metrics(MetricsArgs),
    /// Components, simple reduction or graph expansion
    Analyze(AnalyzeArgs),
    /// Write a hypergraph as a bipartite edge list or incidence CSV
    Export(ExportArgs),
    /// Run a dynamical process
    Simulate(SimulateArgs),
    /// Re-run the command recorded in a manifest
    #[serde(skip)]
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelName {
    SimpleMatrix,
    SimpleBipartite,
    SimplePowersets,
    SimpleOrder,
    KUniform,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub model: ModelName,
    /// Vertex count
    #[arg(long)]
    pub n: usize,
    /// Edge slots (simple-matrix, simple-bipartite)
    #[arg(long)]
    pub m: Option<usize>,
    /// Edge size bound (simple-order) or exact size (k-uniform)
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct MetricsArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Write the report here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Components,
    Reduce,
    Expand,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct AnalyzeArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub op: Op,
    /// Expansion mode for `--op expand`
    #[arg(long, default_value = "clique", value_parser = parse_mode)]
    pub mode: ExpansionMode,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<ExpansionMode, String> {
    s.parse()
        .map_err(|e: hyperkit::algorithms::AlgorithmError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExportFormat {
    Bipartite,
    IncidenceCsv,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ExportArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: ExportFormat,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SimulateArgs {
    #[command(subcommand)]
    pub kind: Simulation,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Simulation {
    /// SIR epidemic with hyperedge contagion
    Sir(SirArgs),
    /// Schelling segregation on hyperedge neighbourhoods
    Schelling(SchellingArgs),
    /// Random walk driven by the hypergraph transition matrix
    Walk(WalkArgs),
}

impl Simulation {
    pub fn run_args(&self) -> &RunArgs {
        match self {
            Simulation::Sir(a) => &a.run,
            Simulation::Schelling(a) => &a.run,
            Simulation::Walk(a) => &a.run,
        }
    }

    pub fn run_args_mut(&mut self) -> &mut RunArgs {
        match self {
            Simulation::Sir(a) => &mut a.run,
            Simulation::Schelling(a) => &mut a.run,
            Simulation::Walk(a) => &mut a.run,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct RunArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Output directory
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long)]
    pub seed: u64,
    /// Independent runs; more than one writes run-NNNN subdirectories and a summary
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SirArgs {
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub gamma: f64,
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    /// Number of initially infected vertices, drawn uniformly
    #[arg(long, default_value_t = 1)]
    pub initial_infected: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SchellingArgs {
    /// Number of distinct labels
    #[arg(long)]
    pub labels: usize,
    /// Vertices carrying each label
    #[arg(long)]
    pub per_label: usize,
    #[arg(long)]
    pub tau: f64,
    #[arg(long, default_value_t = 100)]
    pub iters: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct WalkArgs {
    #[arg(long)]
    pub start: usize,
    #[arg(long)]
    pub steps: usize,
    /// Lazy walk: keep the self-loop mass in each row
    #[arg(long)]
    pub lazy: bool,
    #[command(flatten)]
    #[serde(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Compare the regenerated files against the recorded ones byte for byte
    #[arg(long)]
    pub verify: bool,
}

fn absolute(p: &mut PathBuf) -> io::Result<()> {
    *p = std::path::absolute(Path::new(p))?;
    Ok(())
}

impl Command {
    /// Rewrites every path as an absolute one so a recorded command can be
    /// replayed from any working directory.
    pub fn absolutize(&mut self) -> io::Result<()> {
        match self {
            Command::Generate(a) => absolute(&mut a.output),
            Command::Metrics(a) => {
                absolute(&mut a.input)?;
                a.output.as_mut().map_or(Ok(()), absolute)
            }
            Command::Analyze(a) => {
                absolute(&mut a.input)?;
                a.output.as_mut().map_or(Ok(()), absolute)
            }
            Command::Export(a) => {
                absolute(&mut a.input)?;
                absolute(&mut a.output)
            }
            Command::Simulate(a) => {
                let run = a.kind.run_args_mut();
                absolute(&mut run.input)?;
                absolute(&mut run.output)
            }
            Command::Replay(a) => absolute(&mut a.manifest),
        }
    }
}
