//! Canonical labeling and isomorphism for graphs up to 64 vertices.
//!
//! Vertices start in cells ordered by (degree, neighbor degrees, distance
//! profile); cells are refined until equitable, then the first largest
//! non-singleton cell is individualized vertex by vertex. The canonical
//! labeling is the leaf whose relabeled adjacency matrix is smallest.
//! Leaves that produce the same matrix reveal automorphisms, which prune
//! equivalent branches.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::SimpleGraph;

pub const DEFAULT_ISO_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("graph has {n} vertices, canonical labeling supports at most {limit}")]
    VertexLimitExceeded { n: usize, limit: usize },
    #[error("certificates match but the induced bijection is not an isomorphism")]
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Edges under the canonical labeling, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Hex encoding of the vertex count and canonical adjacency matrix.
    pub certificate: String,
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm, IsoError> {
    let n = g.n_vertices();
    if n > DEFAULT_ISO_LIMIT {
        return Err(IsoError::VertexLimitExceeded {
            n,
            limit: DEFAULT_ISO_LIMIT,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut search = Search {
        n,
        adj: &adj,
        best: None,
        seen: HashMap::new(),
        automorphisms: Vec::new(),
    };
    let root = refine(&adj, initial_cells(&adj));
    search.descend(root, &mut Vec::new());
    let (bits, label) = search.best.expect("at least one leaf");
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
        .collect();
    edges.sort_unstable();
    let mut certificate = format!("{n:x}:");
    for w in &bits {
        let _ = write!(certificate, "{w:016x}");
    }
    Ok(CanonicalForm {
        label,
        edges,
        certificate,
    })
}

/// `Some(bijection)` mapping vertices of `g1` to vertices of `g2` when the
/// graphs are isomorphic.
pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>, IsoError> {
    if g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return Ok(None);
    }
    let (c1, c2) = (canonical_form(g1)?, canonical_form(g2)?);
    if c1.certificate != c2.certificate {
        return Ok(None);
    }
    let mut inverse2 = vec![0; g2.n_vertices()];
    for (v, &l) in c2.label.iter().enumerate() {
        inverse2[l] = v;
    }
    let map: Vec<usize> = c1.label.iter().map(|&l| inverse2[l]).collect();
    if !is_isomorphism(g1, g2, &map) {
        return Err(IsoError::Inconsistent);
    }
    Ok(Some(map))
}

/// Checks that `map` is a bijection sending edges to edges and non-edges to
/// non-edges.
pub fn is_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, map: &[usize]) -> bool {
    let n = g1.n_vertices();
    if n != g2.n_vertices() || map.len() != n || g1.n_edges() != g2.n_edges() {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in map {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]))
}

/// Ordered partition as a list of vertex masks.
type Cells = Vec<u64>;

fn initial_cells(adj: &[u64]) -> Cells {
    let n = adj.len();
    let degree = |v: usize| adj[v].count_ones() as usize;
    let mut keyed: Vec<(Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nbr: Vec<usize> = bits(adj[v]).map(degree).collect();
            nbr.sort_unstable();
            let mut key = vec![degree(v)];
            key.extend(nbr);
            key.push(usize::MAX);
            key.extend(distance_profile(adj, v));
            (key, v)
        })
        .collect();
    keyed.sort();
    let mut cells: Cells = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i == 0 || keyed[i - 1].0 != *key {
            cells.push(0);
        }
        *cells.last_mut().unwrap() |= 1 << v;
    }
    cells
}

/// Number of vertices at each distance from `v`, then the unreachable count.
fn distance_profile(adj: &[u64], v: usize) -> Vec<usize> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    let mut profile = Vec::new();
    while frontier != 0 {
        let next = bits(frontier).fold(0u64, |m, u| m | adj[u]) & !seen;
        if next != 0 {
            profile.push(next.count_ones() as usize);
        }
        seen |= next;
        frontier = next;
    }
    profile.push((all & !seen).count_ones() as usize);
    profile
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Splits cells by neighbor counts into every cell until nothing changes.
fn refine(adj: &[u64], mut cells: Cells) -> Cells {
    loop {
        let mut next: Cells = Vec::with_capacity(cells.len());
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = bits(cell)
                .map(|v| (cells.iter().map(|&c| (adj[v] & c).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i == 0 || keyed[i - 1].0 != *key {
                    next.push(0);
                }
                *next.last_mut().unwrap() |= 1 << v;
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Leaf matrix -> (labeling, individualized path).
    seen: HashMap<Vec<u64>, (Vec<usize>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree; returns the depth to unwind to when an
    /// automorphism shows the rest of the subtree is equivalent.
    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let target = *cells
            .iter()
            .rev()
            .max_by_key(|c| c.count_ones())
            .expect("non-discrete partition");
        let depth = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(target) {
            if self.equivalent_to_tried(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            for &c in &cells {
                if c == target {
                    child.push(1 << v);
                    child.push(c & !(1 << v));
                } else {
                    child.push(c);
                }
            }
            path.push(v);
            let jump = self.descend(refine(self.adj, child), path);
            path.pop();
            if let Some(to) = jump {
                if to < depth {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let mut label = vec![0; self.n];
        for (i, &c) in cells.iter().enumerate() {
            label[c.trailing_zeros() as usize] = i;
        }
        let matrix = self.matrix(&label);
        if let Some((other_label, other_path)) = self.seen.get(&matrix) {
            // vertex labeled x here corresponds to vertex labeled x there
            let mut by_label = vec![0; self.n];
            for (v, &l) in other_label.iter().enumerate() {
                by_label[l] = v;
            }
            let gamma: Vec<usize> = label.iter().map(|&l| by_label[l]).collect();
            let common = path.iter().zip(other_path).take_while(|(a, b)| a == b).count();
            self.automorphisms.push(gamma);
            return Some(common);
        }
        if self.best.as_ref().is_none_or(|(b, _)| matrix < *b) {
            self.best = Some((matrix.clone(), label.clone()));
        }
        self.seen.insert(matrix, (label, path.to_vec()));
        None
    }

    fn matrix(&self, label: &[usize]) -> Vec<u64> {
        let n = self.n;
        let mut relabeled = vec![0u64; n];
        for v in 0..n {
            for u in bits(self.adj[v]) {
                relabeled[label[v]] |= 1 << label[u];
            }
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut out = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for (i, row) in relabeled.iter().enumerate() {
            for j in i + 1..n {
                if row >> j & 1 == 1 {
                    out[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        out
    }

    /// Whether `v` shares an orbit with a tried vertex under the known
    /// automorphisms that fix `path` pointwise.
    fn equivalent_to_tried(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Backtracking search for an isomorphism, independent of refinement.
    fn brute_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
        fn extend(g1: &SimpleGraph, g2: &SimpleGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let v = map.len();
            if v == g1.n_vertices() {
                return true;
            }
            for w in 0..g2.n_vertices() {
                if used[w] || g1.degree(v) != g2.degree(w) {
                    continue;
                }
                if (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], w)) {
                    used[w] = true;
                    map.push(w);
                    if extend(g1, g2, map, used) {
                        return true;
                    }
                    map.pop();
                    used[w] = false;
                }
            }
            false
        }
        g1.n_vertices() == g2.n_vertices()
            && g1.n_edges() == g2.n_edges()
            && extend(g1, g2, &mut Vec::new(), &mut vec![false; g2.n_vertices()])
    }

    fn shuffled(g: &SimpleGraph, seed: u64) -> SimpleGraph {
        let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        g.relabeled(&perm)
    }

    #[test]
    fn named_graph_certificates() {
        let p3 = canonical_form(&named::path(3)).unwrap();
        let claw = canonical_form(&named::star(3)).unwrap();
        assert_ne!(p3.certificate, claw.certificate);
        for g in [named::empty(64), named::complete(20), named::cycle(30), named::complete_bipartite(8, 9)] {
            let c = canonical_form(&g).unwrap();
            for seed in 0..3 {
                let h = shuffled(&g, seed);
                assert_eq!(canonical_form(&h).unwrap().certificate, c.certificate);
                let map = is_isomorphic(&g, &h).unwrap().unwrap();
                assert!(is_isomorphism(&g, &h, &map));
            }
        }
        assert!(canonical_form(&named::empty(65)).is_err());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 versus two triangles: same degrees, same refinement
        let c6 = named::cycle(6);
        let two_k3 = named::disjoint_union(&[named::complete(3), named::complete(3)]);
        assert!(is_isomorphic(&c6, &two_k3).unwrap().is_none());
        // triangular prism versus K3,3: both 3-regular on 6 vertices
        let prism = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
        assert!(is_isomorphic(&prism, &named::complete_bipartite(3, 3)).unwrap().is_none());
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_backtracking(n in 0usize..8, a in proptest::collection::vec(proptest::bool::ANY, 28), b in proptest::collection::vec(proptest::bool::ANY, 28), seed in 0u64..1000) {
            let build = |bits: &[bool]| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[idx] { edges.push((u, v)); }
                        idx += 1;
                    }
                }
                SimpleGraph::from_edges(n, edges)
            };
            let (g1, g2) = (build(&a), build(&b));
            let same = canonical_form(&g1).unwrap().certificate == canonical_form(&g2).unwrap().certificate;
            proptest::prop_assert_eq!(same, brute_isomorphic(&g1, &g2));
            let h = shuffled(&g1, seed);
            proptest::prop_assert_eq!(canonical_form(&h).unwrap(), CanonicalForm { label: canonical_form(&h).unwrap().label, ..canonical_form(&g1).unwrap() });
        }
    }
}
