use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};

use crate::args::Command;

/// Record written next to every output. `command` holds the complete parsed
/// invocation; replaying it regenerates the same bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    pub seed: Option<u64>,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
    /// Command line as typed.
    pub args: Vec<String>,
    pub command: Command,
}

impl Manifest {
    pub fn new(command: &Command, args: &[String]) -> Self {
        let (subcommand, seed, inputs) = match command {
            Command::Generate(a) => ("generate", Some(a.seed), vec![]),
            Command::Metrics(a) => ("metrics", None, vec![a.input.clone()]),
            Command::Analyze(a) => ("analyze", None, vec![a.input.clone()]),
            Command::Export(a) => ("export", None, vec![a.input.clone()]),
            Command::Simulate(a) => {
                let run = a.kind.run_args();
                ("simulate", Some(run.seed), vec![run.input.clone()])
            }
            Command::Replay(_) => ("replay", None, vec![]),
        };
        Manifest {
            tool: "hyperkit".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            subcommand: subcommand.into(),
            seed,
            inputs,
            outputs: Vec::new(),
            args: args.to_vec(),
            command: command.clone(),
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        write_json(path, self)
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| crate::Usage(format!("{}: not a manifest: {e}", path.display())).into())
    }
}

/// `out.csv` → `out.csv.manifest.json`.
pub fn sibling_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
