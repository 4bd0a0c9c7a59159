use std::fmt;

use serde::{Serialize, Serializer};

use super::metrics::components;
use crate::graph::SimpleGraph;

/// Recognized graph shape. Lengths count edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// No vertices.
    Empty,
    /// `n >= 1` vertices and no edges.
    Edgeless(usize),
    /// `K_n` with `n >= 3`.
    Complete(usize),
    /// `P_len`; `K_2` is `Path(1)`.
    Path(usize),
    /// `C_len` with `len >= 4` (`C_3` is `Complete(3)`).
    Cycle(usize),
    /// `K_{1,leaves}` with `leaves >= 3`.
    Star(usize),
    /// Any other tree, by vertex count.
    Tree(usize),
    /// Components in sorted order; isolated vertices merged into one
    /// `Edgeless` part.
    DisjointUnion(Vec<Shape>),
    Other,
}

impl Shape {
    /// Trees with at least one edge.
    pub fn is_tree(&self) -> bool {
        matches!(self, Shape::Path(_) | Shape::Star(_) | Shape::Tree(_))
    }

    pub fn is_star(&self) -> bool {
        // K_{1,1} and K_{1,2} are stars too
        matches!(self, Shape::Star(_) | Shape::Path(1) | Shape::Path(2))
    }

    pub fn is_path(&self) -> bool {
        matches!(self, Shape::Path(_))
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Shape::Cycle(_) | Shape::Complete(3))
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, Shape::Complete(_) | Shape::Path(1) | Shape::Edgeless(1))
    }

    pub fn is_edgeless(&self) -> bool {
        matches!(self, Shape::Edgeless(_))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Empty => f.write_str("empty"),
            Shape::Edgeless(n) => write!(f, "edgeless({n})"),
            Shape::Complete(n) => write!(f, "K{n}"),
            Shape::Path(len) => write!(f, "P{len}"),
            Shape::Cycle(len) => write!(f, "C{len}"),
            Shape::Star(k) => write!(f, "K1,{k}"),
            Shape::Tree(n) => write!(f, "tree({n})"),
            Shape::DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Shape::Other => f.write_str("other"),
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn classify(g: &SimpleGraph) -> Shape {
    let n = g.n_vertices();
    if n == 0 {
        return Shape::Empty;
    }
    if g.n_edges() == 0 {
        return Shape::Edgeless(n);
    }
    let comps = components(g);
    if comps.len() > 1 {
        let mut isolated = 0;
        let mut parts = Vec::new();
        for comp in &comps {
            if comp.len() == 1 {
                isolated += 1;
            } else {
                parts.push(classify_connected(&g.induced(comp)));
            }
        }
        if isolated > 0 {
            parts.push(Shape::Edgeless(isolated));
        }
        parts.sort();
        return Shape::DisjointUnion(parts);
    }
    classify_connected(g)
}

fn classify_connected(g: &SimpleGraph) -> Shape {
    let n = g.n_vertices();
    let m = g.n_edges();
    let max_deg = g.max_degree();
    if n >= 3 && m == n * (n - 1) / 2 {
        return Shape::Complete(n);
    }
    if m + 1 == n {
        if max_deg <= 2 {
            return Shape::Path(m);
        }
        if max_deg == n - 1 {
            return Shape::Star(n - 1);
        }
        return Shape::Tree(n);
    }
    if m == n && max_deg == 2 {
        return Shape::Cycle(n);
    }
    Shape::Other
}
