use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use hyperkit::algorithms::{connected_components, graph_expansion, simple_reduction};
use hyperkit::generators::Model;
use hyperkit::io::{self, HypergraphDocument};
use hyperkit::metrics;
use hyperkit::RngSeed;

use crate::args::{AnalyzeArgs, ExportArgs, ExportFormat, GenerateArgs, MetricsArgs, ModelName, Op};
use crate::manifest::{sibling_path, write_json, Manifest};
use crate::Usage;

fn required(value: Option<usize>, flag: &str, model: ModelName) -> anyhow::Result<usize> {
    value.ok_or_else(|| Usage(format!("--{flag} is required for {}", model_label(model))).into())
}

fn model_label(model: ModelName) -> &'static str {
    match model {
        ModelName::SimpleMatrix => "simple-matrix",
        ModelName::SimpleBipartite => "simple-bipartite",
        ModelName::SimplePowersets => "simple-powersets",
        ModelName::SimpleOrder => "simple-order",
        ModelName::KUniform => "k-uniform",
    }
}

fn model_of(a: &GenerateArgs) -> anyhow::Result<Model> {
    let (n, p) = (a.n, a.p);
    Ok(match a.model {
        ModelName::SimpleMatrix => Model::SimpleMatrix {
            n,
            m: required(a.m, "m", a.model)?,
            p,
        },
        ModelName::SimpleBipartite => Model::SimpleBipartite {
            n,
            m: required(a.m, "m", a.model)?,
            p,
        },
        ModelName::SimplePowersets => Model::SimplePowersets { n, p },
        ModelName::SimpleOrder => Model::SimpleOrder {
            n,
            k: required(a.k, "k", a.model)?,
            p,
        },
        ModelName::KUniform => Model::KUniform {
            n,
            k: required(a.k, "k", a.model)?,
            p,
        },
    })
}

/// Writes `manifest` next to `output`, listing `output` as produced.
fn finish(mut manifest: Manifest, output: &Path) -> anyhow::Result<()> {
    manifest.outputs = vec![output.to_path_buf()];
    manifest.write(&sibling_path(output))
}

pub fn generate(a: &GenerateArgs, manifest: Manifest) -> anyhow::Result<()> {
    let model = model_of(a)?;
    let h = model.generate(RngSeed(a.seed))?;
    log::info!(
        "{}: {} vertices, {} edges",
        model.name(),
        h.vertex_count(),
        h.edge_count()
    );
    io::save_hypergraph(&h, &a.output)?;
    finish(manifest, &a.output)
}

pub fn metrics(a: &MetricsArgs, manifest: Manifest) -> anyhow::Result<()> {
    let h = io::load_hypergraph(&a.input)?;
    let report = metrics::report(&h);
    match &a.output {
        Some(out) => {
            write_json(out, &report)?;
            finish(manifest, out)
        }
        None => {
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit(output: Option<&PathBuf>, bytes: &[u8], manifest: Manifest) -> anyhow::Result<()> {
    match output {
        Some(out) => {
            fs::write(out, bytes).with_context(|| format!("writing {}", out.display()))?;
            finish(manifest, out)
        }
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

pub fn analyze(a: &AnalyzeArgs, manifest: Manifest) -> anyhow::Result<()> {
    let h = io::load_hypergraph(&a.input)?;
    let bytes = match a.op {
        Op::Components => {
            let parts = connected_components(&h);
            log::info!("{} components", parts.len());
            let mut text = serde_json::to_string_pretty(&parts)?;
            text.push('\n');
            text.into_bytes()
        }
        Op::Reduce => {
            let reduced = simple_reduction(&h);
            log::info!("reduced {} edges to {}", h.edge_count(), reduced.edge_count());
            HypergraphDocument::from_hypergraph(&reduced).to_json().into_bytes()
        }
        Op::Expand => {
            let g = graph_expansion(&h, a.mode);
            let mut buf = Vec::new();
            io::write_graph_edges(&g, &mut buf)?;
            buf
        }
    };
    emit(a.output.as_ref(), &bytes, manifest)
}

pub fn export(a: &ExportArgs, manifest: Manifest) -> anyhow::Result<()> {
    let h = io::load_hypergraph(&a.input)?;
    match a.format {
        ExportFormat::Bipartite => io::export_bipartite(&h, &a.output)?,
        ExportFormat::IncidenceCsv => io::export_incidence_csv(&h, &a.output)?,
    }
    finish(manifest, &a.output)
}
