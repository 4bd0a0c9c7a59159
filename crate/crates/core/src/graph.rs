//! Simple undirected graphs, and the inclusion and intersection graphs of a
//! subgroup lattice.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::lattice::SubgroupLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Inclusion,
    Intersection,
    Synthetic,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) out of range for {2} vertices")]
    OutOfRange(usize, usize, usize),
    #[error("{got} labels for {n} vertices")]
    LabelCount { got: usize, n: usize },
}

/// Undirected simple graph with sorted edge list and adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<ElementSet>,
    labels: Vec<String>,
    provenance: Provenance,
}

impl SimpleGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<String>>,
        provenance: Provenance,
    ) -> Result<SimpleGraph, GraphError> {
        let mut adj: Vec<ElementSet> = (0..n).map(|_| ElementSet::empty(n)).collect();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        let labels = match labels {
            Some(l) if l.len() != n => return Err(GraphError::LabelCount { got: l.len(), n }),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(SimpleGraph {
            n,
            edges: list,
            adj,
            labels,
            provenance,
        })
    }

    /// Unlabeled synthetic graph; panics on malformed edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
        SimpleGraph::new(n, edges, None, Provenance::Synthetic).expect("well-formed edge list")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &ElementSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> SimpleGraph {
        let mut labels = vec![String::new(); self.n];
        for v in 0..self.n {
            labels[perm[v]] = self.labels[v].clone();
        }
        SimpleGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
            Some(labels),
            self.provenance,
        )
        .expect("permutation keeps edges valid")
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        SimpleGraph::new(vertices.len(), edges, Some(labels), self.provenance).expect("induced subgraph")
    }

    /// Same vertices with only the given edges kept.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
        SimpleGraph::new(self.n, edges, Some(self.labels.clone()), self.provenance).expect("subset of edges")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "edges": self.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "labels": self.labels,
            "provenance": self.provenance,
        })
    }

    /// Graphviz text with vertices and edges in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_quote(name));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label={}];", dot_quote(label));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn vertex_labels(lat: &SubgroupLattice) -> Vec<String> {
    lat.proper_nontrivial()
        .map(|i| format!("{} ({})", lat.name(i), lat.subgroup(i).order()))
        .collect()
}

/// Lattice index of inclusion/intersection graph vertex `v`.
pub fn vertex_subgroup(v: usize) -> usize {
    v + 1
}

/// Vertices are the proper nontrivial subgroups in lattice order; `H ~ K`
/// when one strictly contains the other.
pub fn inclusion_graph(lat: &SubgroupLattice) -> SimpleGraph {
    let range = lat.proper_nontrivial();
    let mut edges = Vec::new();
    for i in range.clone() {
        for j in lat.above(i).iter().filter(|&j| j != i && range.contains(&j)) {
            edges.push((i - 1, j - 1));
        }
    }
    SimpleGraph::new(range.len(), edges, Some(vertex_labels(lat)), Provenance::Inclusion)
        .expect("lattice indices are in range")
}

/// Same vertices as [`inclusion_graph`]; `H ~ K` when `|H ∩ K| > 1`.
pub fn intersection_graph(lat: &SubgroupLattice) -> SimpleGraph {
    let range = lat.proper_nontrivial();
    let mut edges = Vec::new();
    for i in range.clone() {
        for j in (i + 1)..range.end {
            if lat.subgroup(i).members().intersection_len(lat.subgroup(j).members()) > 1 {
                edges.push((i - 1, j - 1));
            }
        }
    }
    SimpleGraph::new(range.len(), edges, Some(vertex_labels(lat)), Provenance::Intersection)
        .expect("lattice indices are in range")
}

/// Small named graphs.
pub mod named {
    use super::SimpleGraph;

    pub fn empty(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, [])
    }

    pub fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Path with `len` edges.
    pub fn path(len: usize) -> SimpleGraph {
        SimpleGraph::from_edges(len + 1, (0..len).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn star(leaves: usize) -> SimpleGraph {
        SimpleGraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        SimpleGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn disjoint_union(parts: &[SimpleGraph]) -> SimpleGraph {
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n_vertices();
        }
        SimpleGraph::from_edges(offset, edges)
    }
}
