use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::catalog::{MAX_EXPONENT, MAX_PRIME};
use super::classify::{frobenius_prime_complement, is_product_of_two_primes, GroupClass};
use super::embedding::embedding_checks_in;
use super::instance::{build_catalog, Instance};
use super::poset::{lattice_isomorphism, LatticeIso, DEFAULT_SEARCH_BUDGET};
use super::VerifyError;
use crate::group::numtheory::is_prime;
use crate::group::order_cap_from_env;
use crate::invariants::clique::{color_count, is_proper_coloring};
use crate::iso::{canonical_form, is_isomorphism, DEFAULT_ISO_LIMIT};
use crate::lattice::SubgroupLattice;

/// Every checkable statement: id and a one-line summary.
pub const THEOREMS: &[(&str, &str)] = &[
    ("isomorphism_invariance", "isomorphic groups have isomorphic inclusion graphs"),
    ("lattice_isomorphism", "groups with isomorphic subgroup lattices have isomorphic inclusion graphs"),
    ("subgroup_embedding", "I(N) embeds in I(G) for N <= G, and I(G/N) embeds in I(G) for normal N"),
    ("complete", "I(G) is complete iff G = Z_{p^a} with a > 1, and then I(G) = K_{a-1}"),
    ("omega_equals_chi", "clique number = chromatic number = height of L(G) - 1, realized by the level coloring"),
    ("edgeless_equivalence", "I(G) edgeless iff every proper subgroup has prime order iff L(G) has height 2"),
    ("bipartite_equivalence", "I(G) bipartite iff L(G) has height 2 or 3 iff I(G) is the cover graph of L(G) without G and e"),
    ("edgeless_groups", "I(G) edgeless iff G is Z_{p^2}, Z_p x Z_p, Z_pq or Z_q x| Z_p"),
    ("bipartite_orders", "I(G) bipartite iff |G| is p^2, pq, p^3, p^2 q or pqr"),
    ("cycle", "I(G) is a cycle iff G is Z_{p^4} (C3) or Z_pqr (C6)"),
    (
        "tree",
        "I(G) is a tree iff G is Z_{p^3}, Z_{p^2 q}, Z_{p^2} x Z_p, Q8, M8, Z_q x| Z_{p^2}, Z_q x|_2 Z_{p^2} or Z_{p^2} x| Z_q; M_{p^3} (p odd) as well",
    ),
    ("star", "I(G) is a star iff G is Z_{p^3} or Q8"),
    ("path", "I(G) is a path iff G is Z_{p^3} (P1) or Z_{p^2 q} (P3)"),
    ("determined_by_graph", "Q8, M8 and Z9 x| Z2 are the only groups with their inclusion graphs"),
    ("connectivity_equiv", "I(G) is connected iff the intersection graph of subgroups is connected"),
    (
        "disconnected_groups",
        "I(G) is disconnected iff G is Z_p x Z_q or Frobenius with prime order complement and minimal normal kernel",
    ),
    (
        "abelian_planar",
        "abelian G: I(G) planar iff G is Z_{p^a} (a=2..5), Z_{p^a q} (a=1..4), Z_{p^2 q^2}, Z_pqr, Z_{p^2 qr}, Z_pqrs, Z_p x Z_p, Z_{p^2} x Z_p or Z_pq x Z_p",
    ),
    (
        "abelian_diameter",
        "abelian G: diameter in {1,2,3,4,inf}, with Z_{p^2 q^2} -> 2, Z_{p^2} x Z_p -> 3, Z_pq x Z_pq -> 4",
    ),
    ("girth_values", "girth of I(G) is 3, 6 or infinite"),
    (
        "claw_free",
        "I(G) is claw-free iff G is Z_{p^a} (a=2,3,4), Z_{p^a q} (a=1,2), Z_pqr, Z_p x Z_p or Z_q x| Z_p",
    ),
    (
        "prime_power_groups",
        "|G| = p^a, a >= 2: girth 3, 6 or inf; claw-free iff Z_{p^a} (a=2,3,4) or Z_p x Z_p; Z_p^3 and Heis(p) have girth 6",
    ),
    (
        "two_prime_groups",
        "|G| = p^a q^b: girth 3, 6 or inf; claw-free iff Z_pq, Z_{p^2 q} or Z_q x| Z_p; Z_pq x Z_p and G5 have girth 6",
    ),
    ("three_prime_groups", "solvable with at least three prime divisors: girth 3 or 6; claw-free iff Z_pqr"),
    ("non_solvable", "non-solvable G: I(G) contains a claw and has girth 3"),
    ("dihedral_claw", "I(D_{4n}) contains a claw for n >= 3"),
];

pub fn theorem_statement(id: &str) -> Option<&'static str> {
    THEOREMS.iter().find(|(t, _)| *t == id).map(|(_, s)| *s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failing instance, with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub spec: String,
    pub expected: String,
    pub observed: String,
    pub group: Value,
    pub graph: Value,
    pub report: Value,
}

impl Counterexample {
    fn new(inst: &Instance, expected: impl Into<String>, observed: impl Into<String>) -> Self {
        Counterexample {
            spec: inst.spec.to_string(),
            expected: expected.into(),
            observed: observed.into(),
            group: inst.group.to_json(),
            graph: inst.graph.to_json(),
            report: inst.report.to_json(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremResult {
    pub theorem_id: String,
    pub statement: String,
    pub ranges: String,
    pub instances_tested: usize,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl TheoremResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn ranges_text(max_order: u64) -> String {
    format!(
        "catalog groups of order <= {max_order}, primes <= {MAX_PRIME}, exponents <= {MAX_EXPONENT}; \
         iff statements are checked with the catalog as the universe, not all finite groups"
    )
}

struct Tally {
    tested: usize,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            tested: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn expect(&mut self, inst: &Instance, ok: bool, expected: impl Into<String>, observed: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.counterexamples.push(Counterexample::new(inst, expected, observed()));
        }
    }
}

/// Builds the catalog up to `max_order` and runs one theorem over it.
pub fn check_theorem(id: &str, max_order: u64) -> Result<TheoremResult, VerifyError> {
    theorem_statement(id).ok_or_else(|| VerifyError::UnknownTheorem(id.to_string()))?;
    let (instances, errors) = build_catalog(max_order, order_cap_from_env());
    let mut result = check_theorem_on(id, &instances, max_order)?;
    if !errors.is_empty() {
        result.notes.push(format!("{} catalog groups could not be built", errors.len()));
    }
    Ok(result)
}

/// Runs one theorem over already-built instances.
pub fn check_theorem_on(id: &str, instances: &[Instance], max_order: u64) -> Result<TheoremResult, VerifyError> {
    let statement = theorem_statement(id).ok_or_else(|| VerifyError::UnknownTheorem(id.to_string()))?;
    let mut tally = Tally::new();

    // predictions from the classification lists
    let mut predicted = 0;
    let mut unpredicted = Vec::new();
    for inst in instances {
        match &inst.profile {
            Ok(profile) => {
                let mut any = false;
                for p in profile.for_theorem(id) {
                    any = true;
                    if !p.fact.holds(&inst.report) {
                        tally
                            .counterexamples
                            .push(Counterexample::new(inst, p.fact.to_string(), p.fact.observed(&inst.report)));
                    }
                }
                predicted += usize::from(any);
            }
            Err(_) => unpredicted.push(inst.spec.to_string()),
        }
    }
    tally.tested += predicted;
    if !unpredicted.is_empty() && predicted > 0 {
        tally.notes.push(format!("outside the classification: {}", unpredicted.join(", ")));
    }

    match id {
        "isomorphism_invariance" => isomorphism_invariance(instances, &mut tally),
        "lattice_isomorphism" => lattice_isomorphism_check(instances, &mut tally),
        "subgroup_embedding" => subgroup_embedding(instances, &mut tally),
        "omega_equals_chi" => omega_equals_chi(instances, &mut tally),
        "edgeless_equivalence" => edgeless_equivalence(instances, &mut tally),
        "bipartite_equivalence" => bipartite_equivalence(instances, &mut tally),
        "connectivity_equiv" => connectivity(instances, &mut tally),
        "disconnected_groups" => disconnected_structure(instances, &mut tally),
        "determined_by_graph" => determined_by_graph(instances, &mut tally),
        "abelian_diameter" => diameter_values(instances, &mut tally),
        "abelian_planar" => nonabelian_planarity(instances, &mut tally),
        _ => {}
    }

    let degenerate: Vec<String> = instances
        .iter()
        .filter(|i| i.class.is_degenerate())
        .map(|i| i.spec.to_string())
        .collect();
    if !degenerate.is_empty() {
        tally.notes.push(format!(
            "prime order, empty graph, excluded from classification lists: {}",
            degenerate.len()
        ));
    }
    if id == "abelian_diameter" {
        for inst in instances {
            if let Ok(p) = &inst.profile {
                if !inst.class.is_degenerate() {
                    tally.notes.extend(p.notes.iter().cloned());
                }
            }
        }
    }

    let verdict = if tally.counterexamples.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(TheoremResult {
        theorem_id: id.to_string(),
        statement: statement.to_string(),
        ranges: ranges_text(max_order),
        instances_tested: tally.tested,
        verdict,
        counterexamples: tally.counterexamples,
        notes: tally.notes,
    })
}

fn omega_equals_chi(instances: &[Instance], tally: &mut Tally) {
    for inst in instances {
        let lat = &inst.lattice;
        let target = lat.height().saturating_sub(1);
        let r = &inst.report;
        let coloring = lat.level_coloring();
        let levels_ok = is_proper_coloring(&inst.graph, &coloring) && color_count(&coloring) == target;
        tally.expect(
            inst,
            r.clique_number == target && r.chromatic_number == target && levels_ok,
            format!("omega = chi = {target} with a proper {target}-class level coloring"),
            || {
                format!(
                    "omega {}, chi {}, level coloring proper with {} classes: {}",
                    r.clique_number,
                    r.chromatic_number,
                    color_count(&coloring),
                    levels_ok
                )
            },
        );
    }
}

fn all_proper_prime(lat: &SubgroupLattice) -> bool {
    lat.proper_nontrivial().all(|i| is_prime(lat.subgroup(i).order() as u64))
}

fn edgeless_equivalence(instances: &[Instance], tally: &mut Tally) {
    for inst in instances.iter().filter(|i| !i.class.is_degenerate()) {
        let a = inst.report.shape.is_edgeless();
        let b = all_proper_prime(&inst.lattice);
        let c = inst.lattice.height() == 2;
        tally.expect(inst, a == b && b == c, "three predicates agree", || {
            format!("edgeless {a}, all proper subgroups prime {b}, height 2 {c}")
        });
    }
}

fn cover_graph_equals_inclusion(inst: &Instance) -> bool {
    let inner = inst.lattice.proper_nontrivial();
    let covers = inst
        .lattice
        .hasse_edges()
        .iter()
        .filter(|(a, b)| inner.contains(a) && inner.contains(b))
        .count();
    // covers among proper subgroups are inclusion edges, so equal counts
    // mean equal edge sets
    covers == inst.graph.n_edges()
}

fn bipartite_equivalence(instances: &[Instance], tally: &mut Tally) {
    for inst in instances.iter().filter(|i| !i.class.is_degenerate()) {
        let a = inst.report.bipartite;
        let b = matches!(inst.lattice.height(), 2 | 3);
        let c = cover_graph_equals_inclusion(inst);
        tally.expect(inst, a == b && b == c, "three predicates agree", || {
            format!("bipartite {a}, height 2 or 3 {b}, cover graph equals I(G) {c}")
        });
    }
}

fn connectivity(instances: &[Instance], tally: &mut Tally) {
    let mut empty = 0;
    for inst in instances {
        if inst.report.n_vertices == 0 {
            empty += 1;
            continue;
        }
        tally.expect(
            inst,
            inst.report.connected == inst.intersection_connected,
            "inclusion and intersection graphs agree on connectivity",
            || format!("inclusion connected {}, intersection connected {}", inst.report.connected, inst.intersection_connected),
        );
    }
    if empty > 0 {
        tally.notes.push(format!("{empty} instances with an empty graph skipped"));
    }
}

fn disconnected_structure(instances: &[Instance], tally: &mut Tally) {
    let mut frobenius = Vec::new();
    for inst in instances.iter().filter(|i| i.report.n_vertices > 0) {
        let two_primes = is_product_of_two_primes(&inst.group);
        let frob = frobenius_prime_complement(&inst.group, &inst.lattice);
        if frob.is_some() {
            frobenius.push(inst.spec.to_string());
        }
        let predicted = two_primes || frob.is_some();
        tally.expect(
            inst,
            predicted != inst.report.connected,
            format!("disconnected = {predicted} (Z_p x Z_q: {two_primes}, Frobenius: {})", frob.is_some()),
            || format!("connected = {}", inst.report.connected),
        );
    }
    tally.notes.push(format!("structural Frobenius instances: {}", frobenius.join(", ")));
}

/// Order, abelianness and sorted element orders.
fn group_fingerprint(inst: &Instance) -> (usize, bool, Vec<usize>) {
    let g = &inst.group;
    (g.order(), g.is_abelian(), g.element_order_profile())
}

fn certificate(inst: &Instance) -> Option<String> {
    canonical_form(&inst.graph).ok().map(|c| c.certificate)
}

fn determined_by_graph(instances: &[Instance], tally: &mut Tally) {
    let targets = [
        GroupClass::Quaternion8,
        GroupClass::Dihedral8,
        GroupClass::MetacyclicP2Q { p: 3, q: 2 },
    ];
    for target in targets {
        let Some(t) = instances.iter().find(|i| i.class == target) else {
            continue;
        };
        let cert = certificate(t).expect("small graph");
        let fingerprint = group_fingerprint(t);
        let mut matches = Vec::new();
        for inst in instances.iter().filter(|i| i.report.n_vertices == t.report.n_vertices) {
            if certificate(inst).as_ref() != Some(&cert) {
                tally.tested += 1;
                continue;
            }
            matches.push(inst.spec.to_string());
            let same = inst.class == target && group_fingerprint(inst) == fingerprint;
            tally.expect(inst, same, format!("isomorphic to {}", t.spec), || format!("class {:?}", inst.class));
        }
        tally.notes.push(format!("graph of {} shared by: {}", t.spec, matches.join(", ")));
    }
}

fn isomorphism_invariance(instances: &[Instance], tally: &mut Tally) {
    let mut by_class: BTreeMap<&GroupClass, Vec<&Instance>> = BTreeMap::new();
    for inst in instances.iter().filter(|i| i.class != GroupClass::Other) {
        by_class.entry(&inst.class).or_default().push(inst);
    }
    let mut skipped = 0;
    for group in by_class.values().filter(|g| g.len() > 1) {
        let first = group[0];
        let cert = certificate(first);
        for inst in &group[1..] {
            let fp_ok = group_fingerprint(inst) == group_fingerprint(first);
            if first.report.n_vertices > DEFAULT_ISO_LIMIT {
                skipped += 1;
                tally.expect(inst, fp_ok && inst.report.same_invariants(&first.report), format!("same invariants as {}", first.spec), || {
                    "invariants differ".into()
                });
                continue;
            }
            tally.expect(inst, fp_ok && certificate(inst) == cert, format!("graph isomorphic to I({})", first.spec), || {
                "different certificate or group fingerprint".into()
            });
        }
    }
    if skipped > 0 {
        tally
            .notes
            .push(format!("{skipped} pairs above {DEFAULT_ISO_LIMIT} vertices compared by full report only"));
    }
}

fn lattice_isomorphism_check(instances: &[Instance], tally: &mut Tally) {
    // representatives of lattice isomorphism types, bucketed by size
    let mut reps: BTreeMap<(usize, usize, usize), Vec<&Instance>> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut undecided = 0;
    for inst in instances {
        let lat = &inst.lattice;
        let bucket = reps.entry((lat.len(), lat.height(), lat.hasse_edges().len())).or_default();
        let mut found = None;
        for rep in bucket.iter().copied() {
            match lattice_isomorphism(&rep.lattice, lat, DEFAULT_SEARCH_BUDGET) {
                LatticeIso::Isomorphic(map) => {
                    found = Some((rep, map));
                    break;
                }
                LatticeIso::NotIsomorphic => {}
                LatticeIso::Undecided => undecided += 1,
            }
        }
        let Some((rep, map)) = found else {
            bucket.push(inst);
            continue;
        };
        if rep.class != inst.class {
            pairs.push((rep, inst));
        }
        // an order isomorphism fixes top and bottom, so it restricts to the
        // proper nontrivial subgroups
        let vertex_map: Vec<usize> = rep.lattice.proper_nontrivial().map(|i| map[i] - 1).collect();
        let induced = is_isomorphism(&rep.graph, &inst.graph, &vertex_map);
        let certified = match (certificate(rep), certificate(inst)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        };
        tally.expect(
            inst,
            induced && certified,
            format!("graph isomorphic to I({}) (isomorphic lattices)", rep.spec),
            || format!("induced map is an isomorphism {induced}, certificates agree {certified}"),
        );
    }
    let modular: Vec<String> = pairs
        .iter()
        .filter(|(a, b)| matches!(a.class, GroupClass::ModularP3(_)) || matches!(b.class, GroupClass::ModularP3(_)))
        .map(|(a, b)| format!("{} ~ {}", a.spec, b.spec))
        .collect();
    tally.notes.push(format!(
        "{} lattice-isomorphic pairs of non-isomorphic groups; involving M_p^3: {}",
        pairs.len(),
        modular.join(", ")
    ));
    if undecided > 0 {
        tally
            .notes
            .push(format!("{undecided} lattice comparisons exceeded the search budget and were not decided"));
    }
}

/// Subgroups per group whose embedding is checked.
const EMBEDDING_SAMPLES: usize = 4;

fn subgroup_embedding(instances: &[Instance], tally: &mut Tally) {
    let mut normal = 0;
    for inst in instances {
        let seed: [u8; 32] = Sha256::digest(inst.spec.to_string().as_bytes()).into();
        let mut rng = ChaCha8Rng::from_seed(seed);
        let mut candidates: Vec<usize> = (0..inst.lattice.len()).collect();
        candidates.shuffle(&mut rng);
        candidates.truncate(EMBEDDING_SAMPLES);
        for n in candidates {
            let sub = inst.lattice.subgroup(n);
            match embedding_checks_in(&inst.group, &inst.lattice, sub) {
                Ok(report) => {
                    normal += usize::from(report.quotient.is_ok());
                    tally.expect(inst, report.holds(), format!("embeddings for N = {}", inst.lattice.name(n)), || {
                        format!(
                            "subgroup map ok {}, quotient map ok {:?}",
                            report.subgroup.is_embedding(),
                            report.quotient.as_ref().map(|q| q.is_embedding())
                        )
                    });
                }
                Err(e) => tally.expect(inst, false, format!("embeddings for N = {}", inst.lattice.name(n)), || e.to_string()),
            }
        }
    }
    tally.notes.push(format!("{normal} of the sampled subgroups were normal"));
}

fn diameter_values(instances: &[Instance], tally: &mut Tally) {
    let mut seen = std::collections::BTreeSet::new();
    for inst in instances.iter().filter(|i| i.class.is_abelian() && !i.class.is_degenerate()) {
        seen.insert(inst.report.diameter.map_or("inf".to_string(), |d| d.to_string()));
    }
    let seen: Vec<String> = seen.into_iter().collect();
    tally.notes.push(format!("diameters attained by abelian catalog groups: {}", seen.join(", ")));
}

fn nonabelian_planarity(instances: &[Instance], tally: &mut Tally) {
    let planar = instances
        .iter()
        .filter(|i| !i.class.is_abelian() && i.report.planar && i.report.n_vertices > 0)
        .count();
    let total = instances.iter().filter(|i| !i.class.is_abelian()).count();
    tally.notes.push(format!(
        "informational: {planar} of {total} non-abelian catalog groups have a planar inclusion graph"
    ));
}
