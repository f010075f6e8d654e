//! Persistence and interchange formats.
//!
//! Hypergraphs are stored as versioned JSON documents:
//!
//! ```json
//! {
//!   "format_version": "1.0",
//!   "kind": "hypergraph",
//!   "vertices": [0, 1, 2],
//!   "edges": [[0, 1], [1, 2]]
//! }
//! ```
//!
//! `kind` is one of `hypergraph`, `directed` (adds `directed_edges`, a list of
//! `{"tail": [...], "head": [...]}`) or `multilayer` (adds `layers`, each with
//! its own `vertices`/`edges`, and `interlinks`). Optional `vertex_weights`
//! (vertex → weight), `edge_weights` (aligned with `edges`), `vertex_attrs`
//! and `edge_attrs` (keyed by edge position) may appear on any hypergraph
//! body. Unrecognised top-level fields are kept and written back unchanged.
//!
//! Writing is canonical: vertices ascending, edges in insertion order with
//! sorted members. Equal hypergraphs therefore serialise to equal bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algorithms::Graph;
use crate::dynamics::{SchellingRecord, SirRecord, Trajectory};
use crate::hypergraph::{
    Attrs, DirectedHyperedge, DirectedHypergraph, Hyperedge, Hypergraph, Interlink, MultilayerHypergraph, VertexId,
};

pub const FORMAT_VERSION: &str = "1.0";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Write(#[from] io::Error),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(cut) => message[..cut].to_string(),
            None => message,
        };
        IoError::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Hypergraph,
    Directed,
    Multilayer,
}

/// Vertex/edge payload shared by plain documents and multilayer layers.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct HypergraphBody {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub edges: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_weights: Option<BTreeMap<VertexId, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertex_attrs: BTreeMap<VertexId, Attrs>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_attrs: BTreeMap<usize, Attrs>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectedEdgeDoc {
    pub tail: Vec<VertexId>,
    pub head: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergraphDocument {
    pub format_version: String,
    pub kind: DocumentKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_weights: Option<BTreeMap<VertexId, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertex_attrs: BTreeMap<VertexId, Attrs>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_attrs: BTreeMap<usize, Attrs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directed_edges: Option<Vec<DirectedEdgeDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layers: Option<Vec<HypergraphBody>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interlinks: Option<Vec<Interlink>>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

/// Any of the three hypergraph variants.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyHypergraph {
    Undirected(Hypergraph),
    Directed(DirectedHypergraph),
    Multilayer(MultilayerHypergraph),
}

impl From<Hypergraph> for AnyHypergraph {
    fn from(h: Hypergraph) -> Self {
        AnyHypergraph::Undirected(h)
    }
}

impl From<DirectedHypergraph> for AnyHypergraph {
    fn from(h: DirectedHypergraph) -> Self {
        AnyHypergraph::Directed(h)
    }
}

impl From<MultilayerHypergraph> for AnyHypergraph {
    fn from(h: MultilayerHypergraph) -> Self {
        AnyHypergraph::Multilayer(h)
    }
}

impl AnyHypergraph {
    /// The single-layer undirected view, if there is one.
    pub fn as_hypergraph(&self) -> Option<&Hypergraph> {
        match self {
            AnyHypergraph::Undirected(h) => Some(h),
            AnyHypergraph::Directed(d) => Some(d.base()),
            AnyHypergraph::Multilayer(_) => None,
        }
    }
}

fn body_of(h: &Hypergraph) -> HypergraphBody {
    let vertices: Vec<VertexId> = h.vertices().collect();
    let edges: Vec<Vec<VertexId>> = h.edges().map(|e| e.members().to_vec()).collect();
    let vertex_weights = h.is_vertex_weighted().then(|| {
        vertices
            .iter()
            .map(|&v| (v, h.vertex_weight(v).unwrap_or(1.0)))
            .collect()
    });
    let edge_weights = h
        .is_edge_weighted()
        .then(|| h.edges().map(|e| h.edge_weight(e).unwrap_or(1.0)).collect());
    let vertex_attrs = vertices
        .iter()
        .filter_map(|&v| h.vertex_attrs(v).filter(|a| !a.is_empty()).map(|a| (v, a.clone())))
        .collect();
    let edge_attrs = h
        .edges()
        .enumerate()
        .filter_map(|(m, e)| h.edge_attrs(e).filter(|a| !a.is_empty()).map(|a| (m, a.clone())))
        .collect();
    HypergraphBody {
        vertices,
        edges,
        vertex_weights,
        edge_weights,
        vertex_attrs,
        edge_attrs,
    }
}

fn hypergraph_from_body(body: &HypergraphBody, context: &str) -> Result<Hypergraph, IoError> {
    let mut h = Hypergraph::new();
    for &v in &body.vertices {
        if h.contains_vertex(v) {
            return Err(schema(format!("{context}duplicate vertex {v}")));
        }
        h.add_vertex(v);
    }
    for (m, members) in body.edges.iter().enumerate() {
        if members.is_empty() {
            return Err(schema(format!("{context}edge {m} is empty")));
        }
        if let Some(v) = members.iter().find(|v| !h.contains_vertex(**v)) {
            return Err(schema(format!("{context}edge {m} references unknown vertex {v}")));
        }
        let edge = Hyperedge::new(members.iter().copied()).expect("non-empty");
        if edge.len() != members.len() {
            return Err(schema(format!("{context}edge {m} repeats a vertex")));
        }
        if !h.insert_edge(edge) {
            return Err(schema(format!("{context}edge {m} duplicates an earlier edge")));
        }
    }
    if let Some(weights) = &body.vertex_weights {
        let keys: BTreeSet<VertexId> = weights.keys().copied().collect();
        let vertices: BTreeSet<VertexId> = h.vertices().collect();
        if keys != vertices {
            return Err(schema(format!(
                "{context}vertex_weights must cover exactly the vertex set"
            )));
        }
        for (&v, &w) in weights {
            h.set_vertex_weight(v, w).expect("checked");
        }
    }
    if let Some(weights) = &body.edge_weights {
        if weights.len() != h.edge_count() {
            return Err(schema(format!(
                "{context}edge_weights has {} entries for {} edges",
                weights.len(),
                h.edge_count()
            )));
        }
        let edges: Vec<Hyperedge> = h.edges().cloned().collect();
        for (e, &w) in edges.iter().zip(weights) {
            h.set_edge_weight(e, w).expect("edge exists");
        }
    }
    for (&v, attrs) in &body.vertex_attrs {
        let slot = h
            .vertex_attrs_mut(v)
            .map_err(|_| schema(format!("{context}vertex_attrs names unknown vertex {v}")))?;
        *slot = attrs.clone();
    }
    for (&m, attrs) in &body.edge_attrs {
        let edge = h
            .edge(m)
            .cloned()
            .ok_or_else(|| schema(format!("{context}edge_attrs names unknown edge {m}")))?;
        *h.edge_attrs_mut(&edge).expect("edge exists") = attrs.clone();
    }
    Ok(h)
}

fn check_subset(h: &Hypergraph, side: &[VertexId], what: &str, i: usize) -> Result<Hyperedge, IoError> {
    if side.is_empty() {
        return Err(schema(format!("directed edge {i} has an empty {what}")));
    }
    if let Some(v) = side.iter().find(|v| !h.contains_vertex(**v)) {
        return Err(schema(format!(
            "directed edge {i} {what} references unknown vertex {v}"
        )));
    }
    Ok(Hyperedge::new(side.iter().copied()).expect("non-empty"))
}

impl HypergraphDocument {
    fn with_body(kind: DocumentKind, body: HypergraphBody) -> Self {
        HypergraphDocument {
            format_version: FORMAT_VERSION.to_string(),
            kind,
            vertices: body.vertices,
            edges: body.edges,
            vertex_weights: body.vertex_weights,
            edge_weights: body.edge_weights,
            vertex_attrs: body.vertex_attrs,
            edge_attrs: body.edge_attrs,
            directed_edges: None,
            layers: None,
            interlinks: None,
            extra: BTreeMap::new(),
        }
    }

    fn body(&self) -> HypergraphBody {
        HypergraphBody {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            vertex_weights: self.vertex_weights.clone(),
            edge_weights: self.edge_weights.clone(),
            vertex_attrs: self.vertex_attrs.clone(),
            edge_attrs: self.edge_attrs.clone(),
        }
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self::with_body(DocumentKind::Hypergraph, body_of(h))
    }

    pub fn from_directed(h: &DirectedHypergraph) -> Self {
        let mut doc = Self::with_body(DocumentKind::Directed, body_of(h.base()));
        doc.directed_edges = Some(
            h.directed_edges()
                .map(|d| DirectedEdgeDoc {
                    tail: d.tail.members().to_vec(),
                    head: d.head.members().to_vec(),
                })
                .collect(),
        );
        doc
    }

    pub fn from_multilayer(m: &MultilayerHypergraph) -> Self {
        let mut doc = Self::with_body(DocumentKind::Multilayer, HypergraphBody::default());
        doc.layers = Some(m.layers().iter().map(body_of).collect());
        doc.interlinks = Some(m.interlinks().to_vec());
        doc
    }

    pub fn from_any(h: &AnyHypergraph) -> Self {
        match h {
            AnyHypergraph::Undirected(h) => Self::from_hypergraph(h),
            AnyHypergraph::Directed(h) => Self::from_directed(h),
            AnyHypergraph::Multilayer(h) => Self::from_multilayer(h),
        }
    }

    /// Validates the document and builds the hypergraph it describes.
    pub fn to_any(&self) -> Result<AnyHypergraph, IoError> {
        let major = self.format_version.split('.').next().unwrap_or("");
        if major != "1" {
            return Err(schema(format!(
                "unsupported format_version '{}' (expected 1.x)",
                self.format_version
            )));
        }
        match self.kind {
            DocumentKind::Hypergraph => {
                self.reject_field(self.directed_edges.is_some(), "directed_edges")?;
                self.reject_multilayer_fields()?;
                Ok(AnyHypergraph::Undirected(hypergraph_from_body(&self.body(), "")?))
            }
            DocumentKind::Directed => {
                self.reject_multilayer_fields()?;
                let base = hypergraph_from_body(&self.body(), "")?;
                let mut d = DirectedHypergraph::from_base(base);
                for (i, edge) in self.directed_edges.iter().flatten().enumerate() {
                    let tail = check_subset(&d, &edge.tail, "tail", i)?;
                    let head = check_subset(&d, &edge.head, "head", i)?;
                    d.insert_directed_edge(DirectedHyperedge { tail, head });
                }
                Ok(AnyHypergraph::Directed(d))
            }
            DocumentKind::Multilayer => {
                self.reject_field(self.directed_edges.is_some(), "directed_edges")?;
                self.reject_field(
                    !self.vertices.is_empty() || !self.edges.is_empty(),
                    "top-level vertices/edges",
                )?;
                let mut m = MultilayerHypergraph::new();
                for (i, layer) in self.layers.iter().flatten().enumerate() {
                    m.add_layer(hypergraph_from_body(layer, &format!("layer {i}: "))?);
                }
                for (i, link) in self.interlinks.iter().flatten().enumerate() {
                    m.add_interlink(link.from, link.to)
                        .map_err(|e| schema(format!("interlink {i}: {e}")))?;
                }
                Ok(AnyHypergraph::Multilayer(m))
            }
        }
    }

    fn reject_field(&self, present: bool, name: &str) -> Result<(), IoError> {
        if present {
            Err(schema(
                format!("field {name} is not allowed in a {:?} document", self.kind).to_lowercase(),
            ))
        } else {
            Ok(())
        }
    }

    fn reject_multilayer_fields(&self) -> Result<(), IoError> {
        self.reject_field(self.layers.is_some(), "layers")?;
        self.reject_field(self.interlinks.is_some(), "interlinks")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialises");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Self, IoError> {
        let text = fs::read_to_string(path).map_err(|source| IoError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), IoError> {
        write_file(path, self.to_json().as_bytes())
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), IoError> {
    fs::write(path, bytes).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn create(path: &Path) -> Result<fs::File, IoError> {
    fs::File::create(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn save(h: &AnyHypergraph, path: &Path) -> Result<(), IoError> {
    HypergraphDocument::from_any(h).write(path)
}

pub fn load(path: &Path) -> Result<AnyHypergraph, IoError> {
    HypergraphDocument::read(path)?.to_any()
}

pub fn save_hypergraph(h: &Hypergraph, path: &Path) -> Result<(), IoError> {
    HypergraphDocument::from_hypergraph(h).write(path)
}

/// Loads a plain or directed document as an undirected hypergraph.
pub fn load_hypergraph(path: &Path) -> Result<Hypergraph, IoError> {
    match load(path)? {
        AnyHypergraph::Undirected(h) => Ok(h),
        AnyHypergraph::Directed(d) => Ok(d.into_base()),
        AnyHypergraph::Multilayer(_) => Err(schema(
            "expected a single-layer hypergraph, found a multilayer document",
        )),
    }
}

/// One `vertex<TAB>e<m>` line per incidence, edge by edge.
pub fn write_bipartite<W: Write>(h: &Hypergraph, mut out: W) -> Result<(), IoError> {
    for (m, e) in h.edges().enumerate() {
        for v in e.iter() {
            writeln!(out, "{v}\te{m}")?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn export_bipartite(h: &Hypergraph, path: &Path) -> Result<(), IoError> {
    write_bipartite(h, io::BufWriter::new(create(path)?))
}

/// Incidence matrix as CSV: header `vertex,e0,e1,…`, then one row per vertex.
pub fn write_incidence_csv<W: Write>(h: &Hypergraph, out: W) -> Result<(), IoError> {
    let e = h.incidence_matrix();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["vertex".to_string()];
    header.extend((0..h.edge_count()).map(|m| format!("e{m}")));
    w.write_record(&header)?;
    for (i, v) in e.row_index().iter().enumerate() {
        let mut row = vec![v.to_string()];
        row.extend(e.entries().row(i).iter().map(|x| x.to_string()));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn export_incidence_csv(h: &Hypergraph, path: &Path) -> Result<(), IoError> {
    write_incidence_csv(h, create(path)?)
}

/// `step,S,I,R` or `step,mean_G,moves`; an undefined mean is an empty field.
pub fn write_trajectory_csv<W: Write>(t: &Trajectory, out: W) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    match t {
        Trajectory::Sir(rows) => {
            w.write_record(["step", "S", "I", "R"])?;
            for SirRecord { step, s, i, r } in rows {
                w.write_record([step, s, i, r].map(|x| x.to_string()))?;
            }
        }
        Trajectory::Schelling(rows) => {
            w.write_record(["step", "mean_G", "moves"])?;
            for SchellingRecord { step, mean_g, moves } in rows {
                let g = mean_g.map(|g| g.to_string()).unwrap_or_default();
                w.write_record([step.to_string(), g, moves.to_string()])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn export_trajectory_csv(t: &Trajectory, path: &Path) -> Result<(), IoError> {
    write_trajectory_csv(t, create(path)?)
}

/// Walk as CSV: header `step,vertex`.
pub fn write_walk_csv<W: Write>(walk: &[VertexId], out: W) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["step", "vertex"])?;
    for (step, v) in walk.iter().enumerate() {
        w.write_record([step.to_string(), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Ordinary graph as a TAB-separated edge list; vertex nodes print as their
/// id, star nodes as `e<m>`.
pub fn write_graph_edges<W: Write>(g: &Graph, mut out: W) -> Result<(), IoError> {
    let nodes = g.nodes();
    for (a, b) in g.edges() {
        writeln!(out, "{}\t{}", nodes[a], nodes[b])?;
    }
    out.flush()?;
    Ok(())
}
