use std::fmt;

use serde_json::{json, Value};

use super::classify::{classify, GroupClass};
use super::VerifyError;
use crate::group::numtheory::{exponent_pattern, is_prime};
use crate::group::GroupSpec;
use crate::invariants::{PropertyReport, Shape};

/// A predicted property of an inclusion graph. `None` distances mean
/// infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    Shape(Shape),
    Complete(bool),
    Edgeless(bool),
    Bipartite(bool),
    Tree(bool),
    Star(bool),
    /// `Some(len)` for `P_len`, `None` for "not a path".
    Path(Option<usize>),
    /// `Some(len)` for `C_len`, `None` for "not a cycle".
    Cycle(Option<usize>),
    Connected(bool),
    Planar(bool),
    ClawFree(bool),
    Diameter(Option<usize>),
    DiameterIn(Vec<Option<usize>>),
    Girth(Option<usize>),
    GirthIn(Vec<Option<usize>>),
}

fn observed_path(r: &PropertyReport) -> Option<usize> {
    match r.shape {
        Shape::Path(len) => Some(len),
        _ => None,
    }
}

fn observed_cycle(r: &PropertyReport) -> Option<usize> {
    match r.shape {
        Shape::Cycle(len) => Some(len),
        Shape::Complete(3) => Some(3),
        _ => None,
    }
}

impl Fact {
    pub fn holds(&self, r: &PropertyReport) -> bool {
        match self {
            Fact::Shape(s) => r.shape == *s,
            Fact::Complete(b) => r.shape.is_complete() == *b,
            Fact::Edgeless(b) => r.shape.is_edgeless() == *b,
            Fact::Bipartite(b) => r.bipartite == *b,
            Fact::Tree(b) => r.shape.is_tree() == *b,
            Fact::Star(b) => r.shape.is_star() == *b,
            Fact::Path(len) => observed_path(r) == *len,
            Fact::Cycle(len) => observed_cycle(r) == *len,
            Fact::Connected(b) => r.connected == *b,
            Fact::Planar(b) => r.planar == *b,
            Fact::ClawFree(b) => r.claw_free == *b,
            Fact::Diameter(d) => r.diameter == *d,
            Fact::DiameterIn(set) => set.contains(&r.diameter),
            Fact::Girth(g) => r.girth == *g,
            Fact::GirthIn(set) => set.contains(&r.girth),
        }
    }

    /// The observed value of the same field, rendered.
    pub fn observed(&self, r: &PropertyReport) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
        match self {
            Fact::Shape(_) => r.shape.to_string(),
            Fact::Complete(_) => yes_no(r.shape.is_complete()),
            Fact::Edgeless(_) => yes_no(r.shape.is_edgeless()),
            Fact::Bipartite(_) => yes_no(r.bipartite),
            Fact::Tree(_) => yes_no(r.shape.is_tree()),
            Fact::Star(_) => yes_no(r.shape.is_star()),
            Fact::Path(_) | Fact::Cycle(_) => r.shape.to_string(),
            Fact::Connected(_) => yes_no(r.connected),
            Fact::Planar(_) => yes_no(r.planar),
            Fact::ClawFree(_) => yes_no(r.claw_free),
            Fact::Diameter(_) | Fact::DiameterIn(_) => distance(r.diameter),
            Fact::Girth(_) | Fact::GirthIn(_) => distance(r.girth),
        }
    }
}

fn distance(d: Option<usize>) -> String {
    d.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

fn distance_set(set: &[Option<usize>]) -> String {
    let items: Vec<String> = set.iter().map(|&d| distance(d)).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |f: &mut fmt::Formatter<'_>, b: bool, what: &str| {
            if b {
                write!(f, "{what}")
            } else {
                write!(f, "not {what}")
            }
        };
        match self {
            Fact::Shape(s) => write!(f, "shape {s}"),
            Fact::Complete(b) => flag(f, *b, "complete"),
            Fact::Edgeless(b) => flag(f, *b, "edgeless"),
            Fact::Bipartite(b) => flag(f, *b, "bipartite"),
            Fact::Tree(b) => flag(f, *b, "a tree"),
            Fact::Star(b) => flag(f, *b, "a star"),
            Fact::Path(Some(len)) => write!(f, "P{len}"),
            Fact::Path(None) => write!(f, "not a path"),
            Fact::Cycle(Some(len)) => write!(f, "C{len}"),
            Fact::Cycle(None) => write!(f, "not a cycle"),
            Fact::Connected(b) => flag(f, *b, "connected"),
            Fact::Planar(b) => flag(f, *b, "planar"),
            Fact::ClawFree(b) => flag(f, *b, "claw-free"),
            Fact::Diameter(d) => write!(f, "diameter {}", distance(*d)),
            Fact::DiameterIn(set) => write!(f, "diameter in {}", distance_set(set)),
            Fact::Girth(g) => write!(f, "girth {}", distance(*g)),
            Fact::GirthIn(set) => write!(f, "girth in {}", distance_set(set)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub theorem: &'static str,
    pub fact: Fact,
}

/// Predictions for one spec, each tagged with the theorem id it follows from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedProfile {
    pub spec: GroupSpec,
    pub class: GroupClass,
    pub predictions: Vec<Prediction>,
    /// Why some theorem makes no prediction here (degenerate inputs).
    pub notes: Vec<String>,
}

/// A prediction that does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub theorem: &'static str,
    pub expected: String,
    pub observed: String,
}

const FIELDS: [&str; 14] = [
    "shape",
    "complete",
    "edgeless",
    "bipartite",
    "tree",
    "star",
    "path",
    "cycle",
    "connected",
    "planar",
    "claw_free",
    "diameter",
    "girth",
    "clique_number",
];

fn field_of(fact: &Fact) -> &'static str {
    match fact {
        Fact::Shape(_) => "shape",
        Fact::Complete(_) => "complete",
        Fact::Edgeless(_) => "edgeless",
        Fact::Bipartite(_) => "bipartite",
        Fact::Tree(_) => "tree",
        Fact::Star(_) => "star",
        Fact::Path(_) => "path",
        Fact::Cycle(_) => "cycle",
        Fact::Connected(_) => "connected",
        Fact::Planar(_) => "planar",
        Fact::ClawFree(_) => "claw_free",
        Fact::Diameter(_) | Fact::DiameterIn(_) => "diameter",
        Fact::Girth(_) | Fact::GirthIn(_) => "girth",
    }
}

impl ExpectedProfile {
    pub fn for_theorem<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Prediction> + 'a {
        self.predictions.iter().filter(move |p| p.theorem == id)
    }

    pub fn mismatches(&self, r: &PropertyReport) -> Vec<Mismatch> {
        self.predictions
            .iter()
            .filter(|p| !p.fact.holds(r))
            .map(|p| Mismatch {
                theorem: p.theorem,
                expected: p.fact.to_string(),
                observed: p.fact.observed(r),
            })
            .collect()
    }

    /// Report fields no prediction speaks about.
    pub fn unconstrained(&self) -> Vec<&'static str> {
        FIELDS
            .iter()
            .copied()
            .filter(|f| !self.predictions.iter().any(|p| field_of(&p.fact) == *f))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let predictions: Vec<Value> = self
            .predictions
            .iter()
            .map(|p| json!({"theorem": p.theorem, "prediction": p.fact.to_string()}))
            .collect();
        json!({
            "class": format!("{:?}", self.class),
            "predictions": predictions,
            "unconstrained": self.unconstrained(),
            "notes": self.notes,
        })
    }
}

const INF: Option<usize> = None;

fn complete_graph_shape(vertices: usize) -> Shape {
    match vertices {
        0 => Shape::Empty,
        1 => Shape::Edgeless(1),
        2 => Shape::Path(1),
        n => Shape::Complete(n),
    }
}

/// Predictions the classification results make for `spec`.
///
/// Prime-order groups have no proper nontrivial subgroups; every list in the
/// classification leaves them out, so they get notes instead of predictions.
pub fn expected_profile(spec: &GroupSpec) -> Result<ExpectedProfile, VerifyError> {
    spec.validate().map_err(|e| VerifyError::Spec(e.to_string()))?;
    let class = classify(spec);
    let order = spec.order().ok_or_else(|| VerifyError::Spec("order overflows".into()))?;
    if class == GroupClass::Other {
        return Err(VerifyError::UnclassifiedSpec(spec.to_string()));
    }
    let mut profile = ExpectedProfile {
        spec: spec.clone(),
        class: class.clone(),
        predictions: Vec::new(),
        notes: Vec::new(),
    };
    if class.is_degenerate() {
        profile
            .notes
            .push(format!("{spec}: prime or trivial order, empty graph; outside every classification list"));
        return Ok(profile);
    }
    let mut add = |theorem: &'static str, fact: Fact| profile.predictions.push(Prediction { theorem, fact });

    let cyc = class.cyclic_pattern();
    let cyc = cyc.as_deref();
    let pattern = exponent_pattern(order);
    let n_primes = pattern.len();
    let prime_power = n_primes == 1;
    let zq_by_zp = matches!(class, GroupClass::MetacyclicQP { alpha: 1, t: 1, .. });
    let elementary_pp = matches!(&class, GroupClass::Abelian(f) if f.len() == 2 && f[0] == f[1] && pattern == [2]);
    let p2_by_p = matches!(&class, GroupClass::Abelian(f) if f.len() == 2 && pattern == [3]);

    // complete graphs
    let prime_power_cyclic = prime_power && cyc.is_some();
    add("complete", Fact::Complete(prime_power_cyclic));
    if prime_power_cyclic {
        add("complete", Fact::Shape(complete_graph_shape(pattern[0] as usize - 1)));
    }

    // edgeless graphs
    let edgeless = cyc == Some(&[2]) || cyc == Some(&[1, 1]) || elementary_pp || zq_by_zp;
    add("edgeless_groups", Fact::Edgeless(edgeless));
    match &class {
        GroupClass::Cyclic(_) if cyc == Some(&[1, 1]) => add("edgeless_groups", Fact::Shape(Shape::Edgeless(2))),
        GroupClass::Abelian(f) if elementary_pp => {
            add("edgeless_groups", Fact::Shape(Shape::Edgeless(f[0] as usize + 1)))
        }
        GroupClass::MetacyclicQP { q, .. } if zq_by_zp => {
            add("edgeless_groups", Fact::Shape(Shape::Edgeless(*q as usize + 1)))
        }
        _ => {}
    }

    // bipartite graphs, by order
    let bipartite_orders: [&[u32]; 5] = [&[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];
    add("bipartite_orders", Fact::Bipartite(bipartite_orders.contains(&pattern.as_slice())));

    // cycles, trees, stars, paths
    let cycle = match cyc {
        Some([4]) => Some(3),
        Some([1, 1, 1]) => Some(6),
        _ => None,
    };
    add("cycle", Fact::Cycle(cycle));
    if cycle == Some(6) {
        add("cycle", Fact::Shape(Shape::Cycle(6)));
    }
    let tree = matches!(cyc, Some([3]) | Some([2, 1]))
        || p2_by_p
        || matches!(
            class,
            GroupClass::Quaternion8
                | GroupClass::Dihedral8
                | GroupClass::MetacyclicQP { alpha: 2, t: 1 | 2, .. }
                | GroupClass::MetacyclicP2Q { .. }
                | GroupClass::ModularP3(_)
        );
    add("tree", Fact::Tree(tree));
    match &class {
        GroupClass::Dihedral8 => add("tree", Fact::Shape(Shape::Tree(8))),
        GroupClass::Abelian(f) if p2_by_p => add("tree", Fact::Shape(Shape::Tree(2 * f[1] as usize + 2))),
        GroupClass::ModularP3(p) => add("tree", Fact::Shape(Shape::Tree(2 * *p as usize + 2))),
        _ => {}
    }
    let star = cyc == Some(&[3]) || class == GroupClass::Quaternion8;
    add("star", Fact::Star(star));
    if class == GroupClass::Quaternion8 {
        add("star", Fact::Shape(Shape::Star(3)));
    }
    let path = match cyc {
        Some([3]) => Some(1),
        Some([2, 1]) => Some(3),
        _ => None,
    };
    add("path", Fact::Path(path));
    if path == Some(3) {
        add("path", Fact::Shape(Shape::Path(3)));
    }

    // connectivity
    let irreducible = matches!(class, GroupClass::IrreducibleAction { .. });
    add(
        "disconnected_groups",
        Fact::Connected(!(cyc == Some(&[1, 1]) || elementary_pp || zq_by_zp || irreducible)),
    );
    if let GroupClass::IrreducibleAction { p, .. } = class {
        let p = p as usize;
        add(
            "disconnected_groups",
            Fact::Shape(Shape::DisjointUnion(vec![Shape::Edgeless(p * p), Shape::Star(p + 1)])),
        );
    }

    // abelian groups: planarity and diameter
    if class.is_abelian() {
        let planar = match (&class, cyc) {
            (_, Some(c)) => matches!(
                c,
                [2..=5] | [1..=4, 1] | [2, 2] | [1, 1, 1] | [2, 1, 1] | [1, 1, 1, 1]
            ),
            (GroupClass::Abelian(f), None) => {
                elementary_pp || p2_by_p || (f.len() == 2 && pattern == [2, 1] && is_prime(f[1]))
            }
            _ => false,
        };
        add("abelian_planar", Fact::Planar(planar));

        add("abelian_diameter", Fact::DiameterIn(vec![Some(1), Some(2), Some(3), Some(4), INF]));
        if cyc == Some(&[2]) {
            profile.notes.push(format!("{spec}: single-vertex graph, whose diameter is 0"));
        } else {
            let witness = match (&class, cyc) {
                (_, Some([2, 2])) => Some(2),
                (_, _) if p2_by_p => Some(3),
                (GroupClass::Abelian(f), _)
                    if f.len() == 2 && f[0] == f[1] && pattern == [2, 2] =>
                {
                    Some(4)
                }
                _ => None,
            };
            if let Some(d) = witness {
                add("abelian_diameter", Fact::Diameter(Some(d)));
            }
        }
    }

    // girth and claws
    add("girth_values", Fact::GirthIn(vec![Some(3), Some(6), INF]));
    let claw_free = matches!(cyc, Some([2..=4]) | Some([1, 1]) | Some([2, 1]) | Some([1, 1, 1]))
        || elementary_pp
        || zq_by_zp;
    add("claw_free", Fact::ClawFree(claw_free));

    if prime_power {
        add("prime_power_groups", Fact::GirthIn(vec![Some(3), Some(6), INF]));
        add("prime_power_groups", Fact::ClawFree(matches!(cyc, Some([2..=4])) || elementary_pp));
        let elementary_cube = matches!(&class, GroupClass::Abelian(f) if f.len() == 3 && pattern == [3]);
        if elementary_cube || matches!(class, GroupClass::Heisenberg(_)) {
            add("prime_power_groups", Fact::Girth(Some(6)));
        }
    } else if n_primes == 2 {
        add("two_prime_groups", Fact::GirthIn(vec![Some(3), Some(6), INF]));
        add("two_prime_groups", Fact::ClawFree(matches!(cyc, Some([1, 1]) | Some([2, 1])) || zq_by_zp));
        let pq_by_p = matches!(&class, GroupClass::Abelian(f) if f.len() == 2 && pattern == [2, 1]);
        if pq_by_p || matches!(class, GroupClass::DiagonalAction { .. }) {
            add("two_prime_groups", Fact::Girth(Some(6)));
        }
    } else if class.is_solvable() {
        add("three_prime_groups", Fact::GirthIn(vec![Some(3), Some(6)]));
        add("three_prime_groups", Fact::ClawFree(cyc == Some(&[1, 1, 1])));
    }
    if !class.is_solvable() {
        add("non_solvable", Fact::ClawFree(false));
        add("non_solvable", Fact::Girth(Some(3)));
    }
    if let GroupClass::Dihedral(n) = class {
        if n % 4 == 0 && n >= 12 {
            add("dihedral_claw", Fact::ClawFree(false));
        }
    }
    Ok(profile)
}
