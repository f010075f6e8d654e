mod args;
mod commands;
mod manifest;
mod simulate;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hyperkit::algorithms::AlgorithmError;
use hyperkit::dynamics::DynamicsError;
use hyperkit::generators::GeneratorError;
use hyperkit::io::IoError;
use hyperkit::HypergraphError;

use args::{Cli, Command, ReplayArgs};
use manifest::Manifest;

/// Invalid flag combination or input that clap cannot catch on its own.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Replayed outputs differ from the recorded ones.
#[derive(Debug)]
struct Mismatch(Vec<PathBuf>);

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "replay changed {} file(s):", self.0.len())?;
        for p in &self.0 {
            write!(f, " {}", p.display())?;
        }
        Ok(())
    }
}

impl std::error::Error for Mismatch {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<DynamicsError>() {
            return match e {
                DynamicsError::InvalidRate { .. }
                | DynamicsError::TooManyLabeled { .. }
                | DynamicsError::UnknownVertex(_)
                | DynamicsError::StateMismatch { .. }
                | DynamicsError::LengthMismatch(..)
                | DynamicsError::EmptyInput
                | DynamicsError::ZeroBins => 2,
                _ => 3,
            };
        }
        if cause.is::<Usage>()
            || cause.is::<GeneratorError>()
            || cause.is::<IoError>()
            || cause.is::<AlgorithmError>()
            || cause.is::<HypergraphError>()
        {
            return 2;
        }
    }
    1
}

fn execute(command: &Command, args: &[String]) -> anyhow::Result<()> {
    let manifest = Manifest::new(command, args);
    match command {
        Command::Generate(a) => commands::generate(a, manifest),
        Command::Metrics(a) => commands::metrics(a, manifest),
        Command::Analyze(a) => commands::analyze(a, manifest),
        Command::Export(a) => commands::export(a, manifest),
        Command::Simulate(a) => simulate::simulate(&a.kind, manifest),
        Command::Replay(a) => replay(a),
    }
}

fn replay(a: &ReplayArgs) -> anyhow::Result<()> {
    let recorded = Manifest::read(&a.manifest)?;
    if let Command::Replay(_) = recorded.command {
        return Err(Usage("a manifest cannot record a replay".into()).into());
    }
    if recorded.version != env!("CARGO_PKG_VERSION") {
        log::warn!(
            "manifest written by version {}, replaying with {}",
            recorded.version,
            env!("CARGO_PKG_VERSION")
        );
    }
    let mut files = recorded.outputs.clone();
    files.push(a.manifest.clone());
    let before: Vec<Option<Vec<u8>>> = files.iter().map(|p| fs::read(p).ok()).collect();

    execute(&recorded.command, &recorded.args)?;

    if a.verify {
        let changed: Vec<PathBuf> = files
            .iter()
            .zip(&before)
            .filter(|(p, old)| fs::read(p).ok() != **old)
            .map(|(p, _)| p.clone())
            .collect();
        if !changed.is_empty() {
            return Err(Mismatch(changed).into());
        }
        println!("{} file(s) reproduced byte for byte", files.len());
    }
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("HYPERKIT_LOG", "warn")).init();
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut command = cli.command;
    if let Err(e) = command.absolutize() {
        eprintln!("hyperkit: {e}");
        return ExitCode::from(2);
    }
    match execute(&command, &args) {
        Ok(()) => ExitCode::SUCCESS,
        // A closed downstream pipe (`| head`) is not a failure.
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hyperkit: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
