//! Acceptance criteria, one line each. Runs as a plain binary so the lines
//! are always shown.
//!
//! Every check is computed against oracles written here: closure-based
//! subgroup enumeration, permutation search for graph and group isomorphism,
//! Floyd-Warshall distances and BFS girth.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use incgraph::graph::SimpleGraph;
use incgraph::group::numtheory::{is_prime, primes_up_to};
use incgraph::group::GroupTable;
use incgraph::invariants::PlanarityWitness;
use incgraph::iso::canonical_form;
use incgraph::parse::parse_spec;
use incgraph::verify::{build_catalog, embedding_checks_in, GroupClass, Instance};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Failures that reflect statements which do not hold for the groups named.
const DOCUMENTED: &[(usize, &str)] = &[
    (8, "Z4"),
    (8, "Z9"),
    (8, "Z25"),
    (8, "Z49"),
    (8, "Z121"),
    (8, "Z169"),
    (8, "Z36"),
    (8, "Z6xZ6"),
    (9, "Heis(3)"),
];

const ORDER_CAP: usize = 400;

fn catalog200() -> &'static [Instance] {
    static CATALOG: OnceLock<Vec<Instance>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let (instances, errors) = build_catalog(200, ORDER_CAP);
        assert!(errors.is_empty(), "{errors:?}");
        instances
    })
}

fn build(spec: &str) -> Instance {
    Instance::build(&parse_spec(spec).unwrap(), ORDER_CAP).unwrap()
}

struct Criterion {
    number: usize,
    title: &'static str,
    checks: usize,
    failures: Vec<(String, String)>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Criterion {
            number,
            title,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, key: impl Into<String>, message: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push((key.into(), message()));
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

// graph oracles

type Adj = Vec<Vec<bool>>;

fn adj_of(g: &SimpleGraph) -> Adj {
    adj_from(g.n_vertices(), g.edges())
}

fn adj_from(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn path_adj(vertices: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (1..vertices).map(|i| (i - 1, i)).collect();
    adj_from(vertices, &edges)
}

fn cycle_adj(vertices: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (0..vertices).map(|i| (i, (i + 1) % vertices)).collect();
    adj_from(vertices, &edges)
}

fn complete_adj(vertices: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (0..vertices).flat_map(|i| (i + 1..vertices).map(move |j| (i, j))).collect();
    adj_from(vertices, &edges)
}

fn edge_count(a: &Adj) -> usize {
    a.iter().map(|r| r.iter().filter(|&&x| x).count()).sum::<usize>() / 2
}

fn degrees(a: &Adj) -> Vec<usize> {
    let mut d: Vec<usize> = a.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    d.sort_unstable_by(|x, y| y.cmp(x));
    d
}

/// Bijection from `a` to `b` found by backtracking over permutations.
fn perm_iso(a: &Adj, b: &Adj) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || degrees(a) != degrees(b) {
        return None;
    }
    let deg = |m: &Adj, v: usize| m[v].iter().filter(|&&x| x).count();
    fn go(i: usize, a: &Adj, b: &Adj, da: &[usize], db: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..a.len() {
            if used[j] || da[i] != db[j] || (0..i).any(|k| a[i][k] != b[j][map[k]]) {
                continue;
            }
            map.push(j);
            used[j] = true;
            if go(i + 1, a, b, da, db, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    let da: Vec<usize> = (0..n).map(|v| deg(a, v)).collect();
    let db: Vec<usize> = (0..n).map(|v| deg(b, v)).collect();
    let mut map = Vec::new();
    let mut used = vec![false; n];
    go(0, a, b, &da, &db, &mut map, &mut used).then_some(map)
}

const INF: usize = usize::MAX / 4;

/// `None` when disconnected or empty.
fn floyd_diameter(a: &Adj) -> Option<usize> {
    let n = a.len();
    if n == 0 {
        return None;
    }
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if a[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap();
    (m < INF).then_some(m)
}

/// Shortest cycle through each edge, by BFS with that edge removed.
fn bfs_girth(a: &Adj) -> Option<usize> {
    let n = a.len();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if !a[u][v] {
                continue;
            }
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(x) = q.pop_front() {
                for y in 0..n {
                    if a[x][y] && dist[y] == usize::MAX && !(x == u && y == v) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let len = dist[v] + 1;
                best = Some(best.map_or(len, |b: usize| b.min(len)));
            }
        }
    }
    best
}

fn component_count(a: &Adj) -> usize {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if a[x][y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

fn is_tree(a: &Adj) -> bool {
    !a.is_empty() && component_count(a) == 1 && edge_count(a) == a.len() - 1
}

/// Largest clique by extending cliques in increasing vertex order.
fn max_clique_brute(a: &Adj) -> usize {
    fn grow(a: &Adj, clique: &mut Vec<usize>, from: usize) -> usize {
        let mut best = clique.len();
        for v in from..a.len() {
            if clique.iter().all(|&u| a[u][v]) {
                clique.push(v);
                best = best.max(grow(a, clique, v + 1));
                clique.pop();
            }
        }
        best
    }
    grow(a, &mut Vec::new(), 0)
}

// group oracles

fn closure(g: &GroupTable, seed: &[usize]) -> Vec<usize> {
    let mut present = vec![false; g.order()];
    let mut elems = vec![g.identity()];
    present[g.identity()] = true;
    let mut queue: VecDeque<usize> = seed.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        if present[x] {
            continue;
        }
        present[x] = true;
        elems.push(x);
        for &e in &elems {
            for y in [g.op(x, e), g.op(e, x)] {
                if !present[y] {
                    queue.push_back(y);
                }
            }
        }
    }
    elems.sort_unstable();
    elems
}

/// All subgroups of the subgroup `within`, grown one generator at a time.
fn oracle_subgroups(g: &GroupTable, within: &[usize]) -> BTreeSet<Vec<usize>> {
    let trivial = vec![g.identity()];
    let mut found = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for &x in within {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(x);
            let k = closure(g, &seed);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    found
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Longest chain length in the poset of the given subgroups.
fn oracle_height(subgroups: &[Vec<usize>]) -> usize {
    let mut sorted: Vec<&Vec<usize>> = subgroups.iter().collect();
    sorted.sort_by_key(|s| s.len());
    let mut chain = vec![0usize; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j].len() < sorted[i].len() && is_subset(sorted[j], sorted[i]) {
                chain[i] = chain[i].max(chain[j] + 1);
            }
        }
    }
    chain.into_iter().max().unwrap_or(0)
}

fn lattice_sets(inst: &Instance) -> Vec<Vec<usize>> {
    inst.lattice.subgroups().iter().map(|s| s.members().to_vec()).collect()
}

fn element_order(g: &GroupTable, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != g.identity() {
        y = g.op(y, x);
        k += 1;
    }
    k
}

fn is_commutative(g: &GroupTable) -> bool {
    (0..g.order()).all(|x| (0..g.order()).all(|y| g.op(x, y) == g.op(y, x)))
}

fn is_normal(g: &GroupTable, n: &[usize]) -> bool {
    (0..g.order()).all(|x| n.iter().all(|&y| n.binary_search(&g.op(g.op(x, y), g.inverse(x))).is_ok()))
}

/// Group isomorphism by searching images of a generating set.
fn groups_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let mut gens = Vec::new();
    let mut span = closure(g, &[]);
    for x in 0..g.order() {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = closure(g, &gens);
        }
    }
    let ho: Vec<usize> = (0..h.order()).map(|y| element_order(h, y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..h.order()).filter(|&y| ho[y] == element_order(g, s)).collect())
        .collect();
    let mut images = Vec::new();
    fn search(g: &GroupTable, h: &GroupTable, gens: &[usize], cands: &[Vec<usize>], images: &mut Vec<usize>) -> bool {
        if images.len() == gens.len() {
            return extends(g, h, gens, images);
        }
        for &y in &cands[images.len()] {
            images.push(y);
            if search(g, h, gens, cands, images) {
                return true;
            }
            images.pop();
        }
        false
    }
    fn extends(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
        let mut map = vec![usize::MAX; g.order()];
        map[g.identity()] = h.identity();
        let mut q = VecDeque::from([g.identity()]);
        while let Some(x) = q.pop_front() {
            for (s, &t) in gens.iter().zip(images) {
                let y = g.op(x, *s);
                let img = h.op(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = img;
                    q.push_back(y);
                } else if map[y] != img {
                    return false;
                }
            }
        }
        let mut hit = vec![false; h.order()];
        for &m in &map {
            if m == usize::MAX || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..g.order()).all(|x| (0..g.order()).all(|y| map[g.op(x, y)] == h.op(map[x], map[y])))
    }
    search(g, h, &gens, &candidates, &mut images)
}

// independent witness validation

fn validate_kuratowski(a: &Adj, w: &PlanarityWitness) -> Result<(), String> {
    let PlanarityWitness::Kuratowski(k) = w else {
        return Err("expected a Kuratowski witness".into());
    };
    let branch = &k.branch;
    let pairs: Vec<(usize, usize)> = match branch.len() {
        5 => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
        6 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        n => return Err(format!("{n} branch vertices")),
    };
    if k.paths.len() != pairs.len() {
        return Err("wrong number of paths".into());
    }
    let mut interior = BTreeSet::new();
    for (path, &(i, j)) in k.paths.iter().zip(&pairs) {
        let ends = (path[0], *path.last().unwrap());
        if ends != (branch[i], branch[j]) && ends != (branch[j], branch[i]) {
            return Err(format!("path {path:?} does not join branch pair {i},{j}"));
        }
        if path.windows(2).any(|w| !a[w[0]][w[1]]) {
            return Err(format!("path {path:?} uses a non-edge"));
        }
        for &v in &path[1..path.len() - 1] {
            if branch.contains(&v) || !interior.insert(v) {
                return Err(format!("paths are not internally disjoint at {v}"));
            }
        }
    }
    Ok(())
}

fn validate_embedding(a: &Adj, w: &PlanarityWitness) -> Result<(), String> {
    let PlanarityWitness::Embedding(e) = w else {
        return Err("expected an embedding".into());
    };
    let n = a.len();
    for v in 0..n {
        let mut rot = e.rotation(v).to_vec();
        rot.sort_unstable();
        let nbrs: Vec<usize> = (0..n).filter(|&u| a[v][u]).collect();
        if rot != nbrs {
            return Err(format!("rotation at {v} is not its neighborhood"));
        }
    }
    // trace faces: after arriving at v from u, leave along the successor of u
    let mut used = BTreeSet::new();
    let mut faces = 0;
    for u in 0..n {
        for &v in e.rotation(u) {
            if used.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut x, mut y) = (u, v);
            while used.insert((x, y)) {
                let rot = e.rotation(y);
                let pos = rot.iter().position(|&z| z == x).unwrap();
                let next = rot[(pos + 1) % rot.len()];
                (x, y) = (y, next);
            }
        }
    }
    let isolated = (0..n).filter(|&v| e.rotation(v).is_empty()).count();
    // each component embedded alone has its own outer face
    let faces = faces + isolated;
    let (vv, ee, cc) = (n as i64, edge_count(a) as i64, component_count(a) as i64);
    if vv - ee + faces as i64 != 2 * cc {
        return Err(format!("Euler characteristic fails: V={vv} E={ee} F={faces} C={cc}"));
    }
    Ok(())
}

fn validate_witness(a: &Adj, w: &PlanarityWitness) -> Result<(), String> {
    if w.is_planar() {
        validate_embedding(a, w)
    } else {
        validate_kuratowski(a, w)
    }
}

// criteria

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "I(Z_{p^a}) is K_{a-1}, and complete graphs come only from these");
    for p in primes_up_to(13) {
        for a in 2..=5u32 {
            let n = p.pow(a);
            if n > 400 {
                continue;
            }
            let inst = build(&format!("Z{n}"));
            let ok = perm_iso(&adj_of(&inst.graph), &complete_adj(a as usize - 1)).is_some();
            c.check(ok, format!("Z{n}"), || format!("not isomorphic to K{}", a - 1));
        }
    }
    for inst in catalog200() {
        let a = adj_of(&inst.graph);
        let complete = !a.is_empty() && edge_count(&a) == a.len() * (a.len() - 1) / 2;
        let expected = matches!(&inst.class, GroupClass::Cyclic(f) if f.len() == 1 && f[0].1 >= 2);
        c.check(complete == expected, inst.spec.to_string(), || format!("complete {complete}, expected {expected}"));
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "I(Q8) = K1,3, I(A4) = K1,3 + 4K1, I(Z_{p^2 q}) = P3, I(Z30) = C6");
    let star = adj_from(4, &[(0, 1), (0, 2), (0, 3)]);
    let star_plus = adj_from(8, &[(0, 1), (0, 2), (0, 3)]);
    let cases = [
        ("Q8", star),
        ("A4", star_plus),
        ("Z12", path_adj(4)),
        ("Z18", path_adj(4)),
        ("Z50", path_adj(4)),
        ("Z30", cycle_adj(6)),
    ];
    for (spec, target) in cases {
        let ok = perm_iso(&adj_of(&build(spec).graph), &target).is_some();
        c.check(ok, spec, || "not isomorphic to the named graph".into());
    }
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "I(M8) and I(Z4xZ2) are trees with the stated degree sequences");
    for (spec, degs) in [("M8", vec![3, 3, 3, 1, 1, 1, 1, 1]), ("Z4xZ2", vec![3, 3, 1, 1, 1, 1])] {
        let a = adj_of(&build(spec).graph);
        c.check(is_tree(&a) && degrees(&a) == degs, spec, || {
            format!("tree {}, degrees {:?}", is_tree(&a), degrees(&a))
        });
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "clique number = chromatic number = height - 1 over the catalog");
    for inst in catalog200() {
        let h = oracle_height(&lattice_sets(inst));
        let target = h.saturating_sub(1);
        let a = adj_of(&inst.graph);
        let coloring = inst.lattice.level_coloring();
        let proper = inst.graph.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
        let classes = coloring.iter().collect::<BTreeSet<_>>().len();
        let omega_ok = max_clique_brute(&a) == target;
        let r = &inst.report;
        let ok = r.clique_number == target && r.chromatic_number == target && proper && classes == target && omega_ok;
        c.check(ok, inst.spec.to_string(), || {
            format!("height {h}, omega {}, chi {}, level classes {classes}, proper {proper}", r.clique_number, r.chromatic_number)
        });
    }
    c
}

fn is_edgeless_family(class: &GroupClass) -> bool {
    match class {
        GroupClass::Cyclic(_) => class.is_cyclic_with(&[2]) || class.is_cyclic_with(&[1, 1]),
        GroupClass::Abelian(f) => f.len() == 2 && f[0] == f[1] && is_prime(f[0]),
        GroupClass::MetacyclicQP { alpha: 1, .. } => true,
        _ => false,
    }
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "edgeless iff height 2 iff all proper subgroups have prime order; edgeless set");
    let mut skipped = 0;
    for inst in catalog200() {
        let a = adj_of(&inst.graph);
        if a.is_empty() {
            skipped += 1;
            continue;
        }
        let sets = lattice_sets(inst);
        let edgeless = edge_count(&a) == 0;
        let height2 = oracle_height(&sets) == 2;
        let order = inst.group.order();
        let prime = sets
            .iter()
            .filter(|s| s.len() > 1 && s.len() < order)
            .all(|s| is_prime(s.len() as u64));
        c.check(edgeless == height2 && height2 == prime, inst.spec.to_string(), || {
            format!("edgeless {edgeless}, height 2 {height2}, prime subgroups {prime}")
        });
        let family = is_edgeless_family(&inst.class);
        c.check(edgeless == family, inst.spec.to_string(), || format!("edgeless {edgeless}, listed {family}"));
    }
    assert!(skipped > 0);
    c
}

fn intersection_adj(inst: &Instance) -> Adj {
    let sets = lattice_sets(inst);
    let inner: Vec<&Vec<usize>> = sets
        .iter()
        .filter(|s| s.len() > 1 && s.len() < inst.group.order())
        .collect();
    let n = inner.len();
    let mut a = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let meet = inner[i].iter().filter(|x| inner[j].binary_search(x).is_ok()).count();
            a[i][j] = meet > 1;
            a[j][i] = meet > 1;
        }
    }
    a
}

fn is_disconnected_family(class: &GroupClass) -> bool {
    match class {
        GroupClass::Cyclic(_) => class.is_cyclic_with(&[1, 1]),
        GroupClass::Abelian(f) => f.len() == 2 && f[0] == f[1] && is_prime(f[0]),
        GroupClass::MetacyclicQP { alpha: 1, .. } | GroupClass::IrreducibleAction { .. } => true,
        _ => false,
    }
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "I(G) connected iff the intersection graph is; disconnected set");
    for inst in catalog200() {
        let a = adj_of(&inst.graph);
        if a.is_empty() {
            continue;
        }
        let incl = component_count(&a) == 1;
        let inter = component_count(&intersection_adj(inst)) == 1;
        c.check(incl == inter, inst.spec.to_string(), || format!("inclusion connected {incl}, intersection {inter}"));
        let listed = is_disconnected_family(&inst.class);
        c.check(!incl == listed, inst.spec.to_string(), || format!("disconnected {}, listed {listed}", !incl));
    }
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "planarity of cyclic groups and named abelian groups, with checked witnesses");
    let mut cases: BTreeMap<String, bool> = BTreeMap::new();
    for p in primes_up_to(13) {
        for a in 2..=8u32 {
            let n = p.pow(a);
            if n <= 400 {
                cases.insert(format!("Z{n}"), a <= 5);
            }
        }
        for q in primes_up_to(13).into_iter().filter(|&q| q != p) {
            for a in 1..=5u32 {
                let n = p.pow(a) * q;
                if n <= 400 {
                    cases.insert(format!("Z{n}"), a <= 4);
                }
            }
        }
    }
    for spec in ["Z4xZ4", "Z2xZ2xZ2", "Z12xZ2"] {
        cases.insert(spec.to_string(), false);
    }
    cases.insert("Z210".to_string(), true);
    for (spec, planar) in cases {
        let inst = build(&spec);
        let a = adj_of(&inst.graph);
        let w = &inst.report.planarity_witness;
        let valid = validate_witness(&a, w);
        c.check(inst.report.planar == planar && w.is_planar() == planar && valid.is_ok(), spec, || {
            format!("planar {} (expected {planar}), witness {:?}", inst.report.planar, valid)
        });
    }
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "diameters of Z36, Z4xZ2, Z6xZ6, and diameters of abelian groups");
    let show = |d: Option<usize>| d.map_or("inf".to_string(), |d| d.to_string());
    for (spec, expected) in [("Z36", 2), ("Z4xZ2", 3), ("Z6xZ6", 4)] {
        let d = floyd_diameter(&adj_of(&build(spec).graph));
        c.check(d == Some(expected), spec, || format!("diameter {expected} expected, {} observed", show(d)));
    }
    for inst in catalog200().iter().filter(|i| is_commutative(&i.group)) {
        let a = adj_of(&inst.graph);
        if a.is_empty() {
            continue;
        }
        let d = floyd_diameter(&a);
        let report_ok = inst.report.diameter == d;
        let allowed = matches!(d, None | Some(1..=4));
        c.check(allowed && report_ok, inst.spec.to_string(), || {
            format!("diameter {} on {} vertices, report agrees {report_ok}", show(d), a.len())
        });
    }
    c
}

fn is_claw_free_family(class: &GroupClass) -> bool {
    match class {
        GroupClass::Cyclic(_) => [&[2][..], &[3], &[4], &[1, 1], &[2, 1], &[1, 1, 1]]
            .iter()
            .any(|p| class.is_cyclic_with(p)),
        _ => is_edgeless_family(class) && !matches!(class, GroupClass::Cyclic(_)),
    }
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "girth in {3,6,inf}, girth 6 for Z3^3 and Heis(3), claw-free set");
    let show = |d: Option<usize>| d.map_or("inf".to_string(), |d| d.to_string());
    for inst in catalog200() {
        let a = adj_of(&inst.graph);
        let girth = bfs_girth(&a);
        c.check(matches!(girth, None | Some(3) | Some(6)) && inst.report.girth == girth, inst.spec.to_string(), || {
            format!("girth {}, report {}", show(girth), show(inst.report.girth))
        });
        if a.is_empty() {
            continue;
        }
        let claw_free = degrees(&a)[0] <= 2;
        let listed = is_claw_free_family(&inst.class);
        c.check(claw_free == listed && inst.report.claw_free == claw_free, inst.spec.to_string(), || {
            format!("claw-free {claw_free}, listed {listed}")
        });
    }
    for spec in ["Z3xZ3xZ3", "Heis(3)"] {
        let girth = bfs_girth(&adj_of(&build(spec).graph));
        c.check(girth == Some(6), spec, || format!("girth 6 expected, {} observed", show(girth)));
    }
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "Q8, M8 and Z9 x| Z2 are the only catalog groups with their graphs");
    let catalog = catalog200();
    for target in ["Q8", "M8", "SDP2Q(3,2)"] {
        let t = build(target);
        let cert = canonical_form(&t.graph).unwrap().certificate;
        let ta = adj_of(&t.graph);
        for inst in catalog.iter().filter(|i| i.graph.n_vertices() == t.graph.n_vertices()) {
            let same_cert = canonical_form(&inst.graph).unwrap().certificate == cert;
            let a = adj_of(&inst.graph);
            if a.len() <= 12 {
                let oracle = perm_iso(&ta, &a).is_some();
                c.check(oracle == same_cert, inst.spec.to_string(), || {
                    format!("certificate match {same_cert}, permutation search {oracle}")
                });
            }
            if same_cert {
                let iso = groups_isomorphic(&t.group, &inst.group);
                c.check(iso, inst.spec.to_string(), || format!("shares the graph of {target} but is not isomorphic to it"));
            }
        }
    }
    c
}

fn criterion_11() -> Criterion {
    let mut c = Criterion::new(11, "I(N) and I(G/N) embed in I(G); I(M27) = I(Z9xZ3)");
    let small: Vec<&Instance> = catalog200().iter().filter(|i| i.group.order() <= 64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1c1u64);
    for _ in 0..50 {
        let inst = *small.choose(&mut rng).unwrap();
        let g = &inst.group;
        let sets = lattice_sets(inst);
        let idx = *(0..sets.len()).collect::<Vec<_>>().choose(&mut rng).unwrap();
        let sub = inst.lattice.subgroup(idx);
        let n = sets[idx].clone();
        let key = format!("{} N={n:?}", inst.spec);
        // I(N) from scratch, mapped by member sets into I(G)
        let n_subs: Vec<Vec<usize>> = oracle_subgroups(g, &n)
            .into_iter()
            .filter(|s| s.len() > 1 && s.len() < n.len())
            .collect();
        let vertex_of: BTreeMap<Vec<usize>, usize> = sets
            .iter()
            .filter(|s| s.len() > 1 && s.len() < g.order())
            .enumerate()
            .map(|(v, s)| (s.clone(), v))
            .collect();
        let big = adj_of(&inst.graph);
        let image: Vec<Option<usize>> = n_subs.iter().map(|s| vertex_of.get(s).copied()).collect();
        let mapped = image.iter().all(Option::is_some);
        let edges_kept = (0..n_subs.len()).all(|i| {
            (0..n_subs.len()).all(|j| {
                i == j
                    || !(n_subs[i].len() < n_subs[j].len() && is_subset(&n_subs[i], &n_subs[j]))
                    || matches!((image[i], image[j]), (Some(a), Some(b)) if big[a][b])
            })
        });
        let library = embedding_checks_in(g, &inst.lattice, sub).unwrap();
        c.check(
            mapped && edges_kept && library.subgroup.is_embedding() && library.subgroup.map.len() == n_subs.len(),
            key.clone(),
            || format!("oracle mapped {mapped}, edges kept {edges_kept}, library {}", library.subgroup.is_embedding()),
        );

        // every normal subgroup of this G: quotient vertices are the
        // subgroups strictly between N and G
        for (mi, m) in sets.iter().enumerate().filter(|(_, m)| is_normal(g, m)) {
            let report = embedding_checks_in(g, &inst.lattice, inst.lattice.subgroup(mi)).unwrap();
            let Ok(q) = &report.quotient else {
                c.check(false, format!("{} N={m:?}", inst.spec), || "quotient refused for a normal subgroup".into());
                continue;
            };
            let between: BTreeSet<usize> = sets
                .iter()
                .filter(|s| s.len() > m.len() && s.len() < g.order() && is_subset(m, s))
                .map(|s| vertex_of[s])
                .collect();
            let got: BTreeSet<usize> = q.map.iter().flatten().copied().collect();
            c.check(q.is_embedding() && got == between && q.map.len() == between.len(), format!("{} N={m:?}", inst.spec), || {
                format!("quotient map image {got:?}, expected {between:?}")
            });
        }
    }
    let ok = perm_iso(&adj_of(&build("M3^3").graph), &adj_of(&build("Z9xZ3").graph)).is_some();
    c.check(ok, "M3^3", || "I(M27) and I(Z9xZ3) are not isomorphic".into());
    c
}

fn criterion_12() -> Criterion {
    let mut c = Criterion::new(12, "subgroup enumeration and canonical labeling agree with brute-force oracles");
    let catalog = catalog200();
    for inst in catalog.iter().filter(|i| i.group.order() <= 24) {
        let all: Vec<usize> = (0..inst.group.order()).collect();
        let oracle = oracle_subgroups(&inst.group, &all);
        let library: BTreeSet<Vec<usize>> = lattice_sets(inst).into_iter().collect();
        c.check(oracle == library && library.len() == inst.lattice.len(), inst.spec.to_string(), || {
            format!("{} subgroups by closure, {} in the lattice", oracle.len(), library.len())
        });
    }
    let small: Vec<(&Instance, Adj, String)> = catalog
        .iter()
        .filter(|i| i.graph.n_vertices() <= 12)
        .map(|i| (i, adj_of(&i.graph), canonical_form(&i.graph).unwrap().certificate))
        .collect();
    for (x, (ix, ax, cx)) in small.iter().enumerate() {
        for (iy, ay, cy) in &small[x + 1..] {
            if ax.len() != ay.len() {
                continue;
            }
            let oracle = perm_iso(ax, ay);
            let ok = oracle.is_some() == (cx == cy);
            c.check(ok, format!("{} ~ {}", ix.spec, iy.spec), || {
                format!("certificates equal {}, permutation search {}", cx == cy, oracle.is_some())
            });
        }
    }
    c
}

fn main() {
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
    ];
    let mut failing = BTreeSet::new();
    for c in &criteria {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:2} {verdict}  {} ({} checks)", c.number, c.title, c.checks);
        for (key, message) in &c.failures {
            println!("    {key}: {message}");
            failing.insert((c.number, key.clone()));
        }
    }
    let documented: BTreeSet<(usize, String)> = DOCUMENTED.iter().map(|&(n, k)| (n, k.to_string())).collect();
    let passed = criteria.iter().filter(|c| c.passed()).count();
    println!("{passed} of {} criteria pass", criteria.len());
    if failing != documented {
        let new: Vec<_> = failing.difference(&documented).collect();
        let gone: Vec<_> = documented.difference(&failing).collect();
        println!("undocumented failures: {new:?}");
        println!("documented failures that no longer occur: {gone:?}");
        std::process::exit(1);
    }
    println!("every failure above is a documented discrepancy");
}
