//! Structural algorithms: connected components, simple reduction and
//! expansion to ordinary graphs.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error("unknown expansion mode '{0}' (expected 'clique' or 'star')")]
    UnknownMode(String),
}

/// Node of an expanded graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphNode {
    Vertex(VertexId),
    /// Star node standing for the hyperedge with this index.
    Hyperedge(usize),
}

impl fmt::Display for GraphNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphNode::Vertex(v) => write!(f, "{v}"),
            GraphNode::Hyperedge(m) => write!(f, "e{m}"),
        }
    }
}

/// Simple undirected graph on nodes `0..node_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    nodes: Vec<GraphNode>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(nodes: Vec<GraphNode>) -> Self {
        Graph {
            nodes,
            edges: BTreeSet::new(),
        }
    }

    /// Adds the undirected edge {a, b}; self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        assert!(a < self.nodes.len() && b < self.nodes.len(), "node out of range");
        if a == b {
            return false;
        }
        self.edges.insert((a.min(b), a.max(b)))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    /// Edges as (smaller, larger) node index pairs, sorted.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Connected components by breadth-first search, each sorted, ordered by
    /// their smallest node.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes.len()];
        let mut out = Vec::new();
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            out.push(component);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpansionMode {
    Clique,
    Star,
}

impl FromStr for ExpansionMode {
    type Err = AlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clique" => Ok(ExpansionMode::Clique),
            "star" => Ok(ExpansionMode::Star),
            other => Err(AlgorithmError::UnknownMode(other.to_string())),
        }
    }
}

impl fmt::Display for ExpansionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpansionMode::Clique => "clique",
            ExpansionMode::Star => "star",
        })
    }
}

/// Partition of the vertex set into hyperedge-connected classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentPartition(pub Vec<Vec<VertexId>>);

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[VertexId]> {
        self.0.iter().map(Vec::as_slice)
    }
}

/// Connected components through the bipartite lift: vertices and edges become
/// nodes of an ordinary graph, each vertex joined to the edges containing it.
/// Components of that graph, restricted to vertex nodes, are the answer.
/// Isolated vertices come out as singletons.
pub fn connected_components(h: &Hypergraph) -> ComponentPartition {
    let lifted = star_expansion(h);
    let n = h.vertex_count();
    let components = lifted
        .connected_components()
        .into_iter()
        .map(|nodes| {
            nodes
                .into_iter()
                .filter(|&i| i < n)
                .map(|i| match lifted.nodes[i] {
                    GraphNode::Vertex(v) => v,
                    GraphNode::Hyperedge(_) => unreachable!("index below vertex count"),
                })
                .collect::<Vec<_>>()
        })
        .filter(|c| !c.is_empty())
        .collect();
    ComponentPartition(components)
}

/// Drops every edge contained in a different edge. Maximal edges survive
/// unchanged and keep their relative order.
pub fn simple_reduction(h: &Hypergraph) -> Hypergraph {
    let edges: Vec<&Hyperedge> = h.edges().collect();
    let mut reduced = h.clone();
    for (j, small) in edges.iter().enumerate() {
        let covered = edges.iter().enumerate().any(|(i, big)| i != j && small.is_subset(big));
        if covered {
            reduced.remove_edge(small.iter());
        }
    }
    reduced
}

/// Expands a hypergraph into an ordinary graph.
///
/// Node `i < |V|` is the i-th vertex in ascending order. In star mode node
/// `|V| + m` stands for edge `m`.
pub fn graph_expansion(h: &Hypergraph, mode: ExpansionMode) -> Graph {
    match mode {
        ExpansionMode::Clique => clique_expansion(h),
        ExpansionMode::Star => star_expansion(h),
    }
}

fn vertex_nodes(h: &Hypergraph) -> Vec<GraphNode> {
    h.vertices().map(GraphNode::Vertex).collect()
}

pub fn clique_expansion(h: &Hypergraph) -> Graph {
    let index = h.vertex_positions();
    let mut g = Graph::new(vertex_nodes(h));
    for e in h.edges() {
        let members = e.members();
        for (a, u) in members.iter().enumerate() {
            for w in &members[a + 1..] {
                g.add_edge(index[u], index[w]);
            }
        }
    }
    g
}

pub fn star_expansion(h: &Hypergraph) -> Graph {
    let index = h.vertex_positions();
    let n = h.vertex_count();
    let mut nodes = vertex_nodes(h);
    nodes.extend((0..h.edge_count()).map(GraphNode::Hyperedge));
    let mut g = Graph::new(nodes);
    for (m, e) in h.edges().enumerate() {
        for v in e.iter() {
            g.add_edge(n + m, index[&v]);
        }
    }
    g
}
