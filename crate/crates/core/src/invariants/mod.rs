//! Exact graph invariants collected into a [`PropertyReport`].

pub mod claw;
pub mod clique;
pub mod metrics;
pub mod planarity;
pub mod shape;

use serde_json::{json, Map, Value};
use thiserror::Error;

pub use planarity::{Embedding, Kuratowski, KuratowskiKind, PlanarityWitness, DEFAULT_VERTEX_LIMIT};
pub use shape::Shape;

use crate::graph::SimpleGraph;

/// Largest graph whose chromatic number is found by search.
pub const EXACT_COLORING_LIMIT: usize = 64;
/// Largest graph on which the claw test is cross-checked by brute force.
pub const BRUTE_CLAW_LIMIT: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph has {n} vertices, limit is {limit}")]
    VertexLimitExceeded { n: usize, limit: usize },
    #[error("coloring hint is not a proper coloring with {omega} colors on {n} vertices")]
    ColoringHintRejected { n: usize, omega: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Every computed invariant of one graph. `None` distances mean infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub connected: bool,
    pub n_components: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub max_degree: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub shape: Shape,
    pub claw_free: bool,
    pub planar: bool,
    pub planarity_witness: PlanarityWitness,
}

impl PropertyReport {
    pub fn is_tree(&self) -> bool {
        self.shape.is_tree()
    }

    /// Equality of every isomorphism invariant, ignoring the labeled
    /// planarity witness.
    pub fn same_invariants(&self, other: &PropertyReport) -> bool {
        PropertyReport {
            planarity_witness: other.planarity_witness.clone(),
            ..self.clone()
        } == *other
    }

    pub fn is_star(&self) -> bool {
        self.shape.is_star()
    }

    pub fn is_complete(&self) -> bool {
        self.shape.is_complete()
    }

    /// No edges on at least one vertex.
    pub fn totally_disconnected(&self) -> bool {
        self.shape.is_edgeless()
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("n_vertices".into(), json!(self.n_vertices));
        m.insert("n_edges".into(), json!(self.n_edges));
        m.insert("connected".into(), json!(self.connected));
        m.insert("n_components".into(), json!(self.n_components));
        for (name, value) in [("diameter", self.diameter), ("girth", self.girth)] {
            m.insert(name.into(), json!(value));
            m.insert(format!("{name}_finite"), json!(value.is_some()));
        }
        m.insert("bipartite".into(), json!(self.bipartite));
        m.insert("max_degree".into(), json!(self.max_degree));
        m.insert("clique_number".into(), json!(self.clique_number));
        m.insert("chromatic_number".into(), json!(self.chromatic_number));
        m.insert("shape".into(), json!(self.shape));
        m.insert("claw_free".into(), json!(self.claw_free));
        m.insert("planar".into(), json!(self.planar));
        m.insert("planarity_witness".into(), json!(self.planarity_witness));
        Value::Object(m)
    }
}

/// Computes the full report. `coloring_hint` (e.g. lattice levels) is
/// checked whenever given and is what certifies the chromatic number above
/// [`EXACT_COLORING_LIMIT`] vertices.
pub fn analyze(g: &SimpleGraph, coloring_hint: Option<&[usize]>) -> Result<PropertyReport, InvariantError> {
    analyze_with_limit(g, coloring_hint, DEFAULT_VERTEX_LIMIT)
}

pub fn analyze_with_limit(
    g: &SimpleGraph,
    coloring_hint: Option<&[usize]>,
    vertex_limit: usize,
) -> Result<PropertyReport, InvariantError> {
    let n = g.n_vertices();
    if n > vertex_limit {
        return Err(InvariantError::VertexLimitExceeded { n, limit: vertex_limit });
    }
    let comps = metrics::components(g);
    let diameter = metrics::diameter(g);
    let girth = metrics::girth(g);
    let two_coloring = metrics::two_coloring(g);
    let bipartite = two_coloring.is_some();
    if bipartite != girth.is_none_or(|len| len % 2 == 0) {
        return Err(InvariantError::Inconsistent(format!(
            "2-coloring says bipartite={bipartite} but girth is {girth:?}"
        )));
    }

    let omega = clique::max_clique(g).len();
    let chromatic_number = chromatic(g, omega, coloring_hint)?;

    let claw = claw::find_claw(g);
    if n <= BRUTE_CLAW_LIMIT && claw.is_some() != claw::find_claw_by_subsets(g).is_some() {
        return Err(InvariantError::Inconsistent("claw search disagrees with max degree".into()));
    }

    let witness = planarity::planarity(g);
    witness
        .verify(g)
        .map_err(|e| InvariantError::Inconsistent(format!("planarity certificate: {e}")))?;

    Ok(PropertyReport {
        n_vertices: n,
        n_edges: g.n_edges(),
        connected: comps.len() == 1,
        n_components: comps.len(),
        diameter,
        girth,
        bipartite,
        max_degree: g.max_degree(),
        clique_number: omega,
        chromatic_number,
        shape: shape::classify(g),
        claw_free: claw.is_none(),
        planar: witness.is_planar(),
        planarity_witness: witness,
    })
}

fn chromatic(g: &SimpleGraph, omega: usize, hint: Option<&[usize]>) -> Result<usize, InvariantError> {
    let n = g.n_vertices();
    let hint_colors = match hint {
        Some(colors) if clique::is_proper_coloring(g, colors) => Some(clique::color_count(colors)),
        Some(_) => return Err(InvariantError::ColoringHintRejected { n, omega }),
        None => None,
    };
    if hint_colors == Some(omega) {
        return Ok(omega);
    }
    if n <= EXACT_COLORING_LIMIT {
        return Ok(clique::chromatic_number(g, omega));
    }
    let greedy = clique::color_count(&clique::dsatur(g));
    if greedy == omega {
        return Ok(omega);
    }
    Err(InvariantError::ColoringHintRejected { n, omega })
}
