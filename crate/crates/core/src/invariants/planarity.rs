//! Planarity testing with checkable certificates.
//!
//! Each biconnected block is embedded by path addition (Demoucron, Malgrange
//! and Pertuiset): start from a cycle, repeatedly take a fragment with the
//! fewest admissible faces and draw one of its paths through such a face.
//! The block rotations are merged at cut vertices into a rotation system,
//! which is then checked against Euler's formula. Non-planar graphs get a
//! Kuratowski subdivision found by shrinking the edge set to an
//! edge-minimal non-planar subgraph.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::metrics::components;
use crate::bitset::ElementSet;
use crate::graph::SimpleGraph;

pub const DEFAULT_VERTEX_LIMIT: usize = 512;

/// Rotation system: the cyclic order of neighbors around each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Subdivision of `K5` or `K3,3`. For `K33`, `branch[..3]` and `branch[3..]`
/// are the two sides. `paths` join branch pairs in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PlanarityWitness {
    Embedding(Embedding),
    Kuratowski(Kuratowski),
}

impl PlanarityWitness {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityWitness::Embedding(_))
    }

    pub fn verify(&self, g: &SimpleGraph) -> Result<(), String> {
        match self {
            PlanarityWitness::Embedding(e) => e.verify(g),
            PlanarityWitness::Kuratowski(k) => k.verify(g),
        }
    }
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Faces traced by `(u, v) -> (v, w)` with `w` following `u` in the
    /// rotation at `v`. Each face is its vertex sequence.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                pos.insert((v, u), i);
            }
        }
        let mut used: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                if used.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b), true).is_none() {
                    face.push(a);
                    let rb = &self.rotation[b];
                    let i = pos[&(b, a)];
                    let c = rb[(i + 1) % rb.len()];
                    (a, b) = (b, c);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotations list exactly the neighbors and that every
    /// component satisfies `V - E + F = 2`.
    pub fn verify(&self, g: &SimpleGraph) -> Result<(), String> {
        let n = g.n_vertices();
        if self.rotation.len() != n {
            return Err(format!("rotation covers {} of {n} vertices", self.rotation.len()));
        }
        for v in 0..n {
            let mut rot = self.rotation[v].clone();
            rot.sort_unstable();
            if rot != g.neighbors(v).collect::<Vec<_>>() {
                return Err(format!("rotation at {v} does not list its neighbors"));
            }
        }
        let faces = self.faces();
        let mut comp_of = vec![0; n];
        let comps = components(g);
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = c;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in &faces {
            face_count[comp_of[f[0]]] += 1;
        }
        let mut edge_count = vec![0usize; comps.len()];
        for &(u, _) in g.edges() {
            edge_count[comp_of[u]] += 1;
        }
        for (c, comp) in comps.iter().enumerate() {
            let faces = if edge_count[c] == 0 { 1 } else { face_count[c] };
            let euler = comp.len() as i64 - edge_count[c] as i64 + faces as i64;
            if euler != 2 {
                return Err(format!("component {c}: V - E + F = {euler}"));
            }
        }
        Ok(())
    }
}

impl Kuratowski {
    /// Branch pairs that must be joined, as indices into `branch`.
    fn required_pairs(&self) -> Vec<(usize, usize)> {
        match self.kind {
            KuratowskiKind::K5 => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
            KuratowskiKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }

    /// Checks branch count, path adjacency, endpoints and disjoint
    /// interiors against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> Result<(), String> {
        let expected = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        if self.branch.len() != expected {
            return Err(format!("{} branch vertices, expected {expected}", self.branch.len()));
        }
        let n = g.n_vertices();
        let mut used = vec![false; n];
        for &b in &self.branch {
            if b >= n || used[b] {
                return Err(format!("branch vertex {b} repeated or out of range"));
            }
            used[b] = true;
        }
        let pairs = self.required_pairs();
        if self.paths.len() != pairs.len() {
            return Err(format!("{} paths, expected {}", self.paths.len(), pairs.len()));
        }
        for (path, &(i, j)) in self.paths.iter().zip(&pairs) {
            if path.len() < 2 || path[0] != self.branch[i] || path[path.len() - 1] != self.branch[j] {
                return Err(format!("path {path:?} does not join branch {i} and {j}"));
            }
            for w in path.windows(2) {
                if w[0] >= n || w[1] >= n || !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {path:?} uses missing edge ({}, {})", w[0], w[1]));
                }
            }
            for &x in &path[1..path.len() - 1] {
                if used[x] {
                    return Err(format!("interior vertex {x} reused"));
                }
                used[x] = true;
            }
        }
        Ok(())
    }
}

/// Exact planarity with a certificate either way.
pub fn planarity(g: &SimpleGraph) -> PlanarityWitness {
    match embed_edges(g.n_vertices(), g.edges()) {
        Some(rotation) => PlanarityWitness::Embedding(Embedding { rotation }),
        None => PlanarityWitness::Kuratowski(kuratowski_subgraph(g)),
    }
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    embed_edges(g.n_vertices(), g.edges()).is_some()
}

/// Non-isolated vertex count.
fn touched(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut seen = ElementSet::empty(n);
    for &(u, v) in edges {
        seen.insert(u);
        seen.insert(v);
    }
    seen.len()
}

/// Rotation system for the graph on `n` vertices with these edges, or
/// `None` when it is not planar.
fn embed_edges(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let v = touched(n, edges);
    if v >= 3 && edges.len() > 3 * v - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(&adj) {
        let block_rot = embed_block(&block)?;
        for (x, rot) in block_rot {
            rotation[x].extend(rot);
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected blocks.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let v = s.adj[u][i];
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 && !adj[u].is_empty() {
            dfs(&mut s, u, usize::MAX);
        }
    }
    s.blocks
}

struct Fragment {
    attachments: Vec<usize>,
    /// Component id of the interior, or `None` for a single chord.
    interior: Option<usize>,
}

/// Embeds one biconnected block; returns the rotation of each of its
/// vertices in global numbering.
fn embed_block(block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut global: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    global.sort_unstable();
    global.dedup();
    if block.len() == 1 {
        let (a, b) = block[0];
        return Some(vec![(a, vec![b]), (b, vec![a])]);
    }
    let nv = global.len();
    if block.len() > 3 * nv - 6 {
        return None;
    }
    let local = |x: usize| global.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); nv];
    for &(a, b) in block {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; nv];
    let mut h_adj: Vec<ElementSet> = (0..nv).map(|_| ElementSet::empty(nv)).collect();
    for (i, &x) in cycle.iter().enumerate() {
        let y = cycle[(i + 1) % cycle.len()];
        in_h[x] = true;
        h_adj[x].insert(y);
        h_adj[y].insert(x);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        // fragments relative to the embedded part H
        let mut comp = vec![usize::MAX; nv];
        let mut fragments = Vec::new();
        for s in 0..nv {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = fragments.len();
            comp[s] = id;
            let mut attachments = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] {
                        attachments.push(y);
                    } else if comp[y] == usize::MAX {
                        comp[y] = id;
                        queue.push_back(y);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            fragments.push(Fragment {
                attachments,
                interior: Some(id),
            });
        }
        for x in 0..nv {
            if !in_h[x] {
                continue;
            }
            for &y in &adj[x] {
                if x < y && in_h[y] && !h_adj[x].contains(y) {
                    fragments.push(Fragment {
                        attachments: vec![x, y],
                        interior: None,
                    });
                }
            }
        }
        if fragments.is_empty() {
            break;
        }

        let mut faces_at: Vec<Vec<usize>> = vec![Vec::new(); nv];
        let mut face_sets = Vec::with_capacity(faces.len());
        for (fi, f) in faces.iter().enumerate() {
            for &x in f {
                faces_at[x].push(fi);
            }
            face_sets.push(ElementSet::from_indices(nv, f.iter().copied()));
        }
        let mut chosen: Option<(usize, usize)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces_at[frag.attachments[0]]
                .iter()
                .copied()
                .filter(|&fi| frag.attachments.iter().all(|&a| face_sets[fi].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((k, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((k, admissible[0]));
                    }
                }
            }
        }
        let (k, fi) = chosen.unwrap();
        let frag = &fragments[k];
        let path = match frag.interior {
            None => frag.attachments.clone(),
            Some(id) => fragment_path(&adj, &in_h, &comp, id, frag.attachments[0]),
        };

        let face = faces.swap_remove(fi);
        let (a, b) = (path[0], path[path.len() - 1]);
        let ia = face.iter().position(|&x| x == a).expect("attachment on face");
        let ib = face.iter().position(|&x| x == b).expect("attachment on face");
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % face.len();
                out.push(face[i]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut first = walk(ia, ib);
        first.extend(inner.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);
        for w in path.windows(2) {
            h_adj[w[0]].insert(w[1]);
            h_adj[w[1]].insert(w[0]);
        }
        for &x in &path {
            in_h[x] = true;
        }
    }

    // rotation from oriented faces: consecutive u, v, w puts w right after u at v
    let mut next: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
            next.insert((v, u), w);
        }
    }
    let mut out = Vec::with_capacity(nv);
    for v in 0..nv {
        let start = adj[v][0];
        let mut rot = vec![global[start]];
        let mut u = next[&(v, start)];
        while u != start {
            rot.push(global[u]);
            u = next[&(v, u)];
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((global[v], rot));
    }
    Some(out)
}

/// Any cycle of a biconnected block with at least three vertices.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let nv = adj.len();
    let mut parent = vec![usize::MAX; nv];
    let mut depth = vec![usize::MAX; nv];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i == adj[u].len() {
            stack.pop();
            continue;
        }
        let v = adj[u][*i];
        *i += 1;
        if depth[v] == usize::MAX {
            depth[v] = depth[u] + 1;
            parent[v] = u;
            stack.push((v, 0));
        } else if v != parent[u] && depth[v] < depth[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != v {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("biconnected block has a cycle")
}

/// Path from attachment `a` through fragment interior `id` to another
/// attachment.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], comp: &[usize], id: usize, a: usize) -> Vec<usize> {
    let nv = adj.len();
    let mut prev = vec![usize::MAX; nv];
    let mut queue = VecDeque::new();
    for &x in &adj[a] {
        if !in_h[x] && comp[x] == id && prev[x] == usize::MAX {
            prev[x] = a;
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = adj[x].iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, x];
            let mut y = x;
            while prev[y] != a {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !in_h[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Shrinks the edge set of a non-planar graph to an edge-minimal
/// non-planar subgraph and reads off its Kuratowski subdivision.
fn kuratowski_subgraph(g: &SimpleGraph) -> Kuratowski {
    let n = g.n_vertices();
    let nonplanar = |edges: &[(usize, usize)]| embed_edges(n, edges).is_none();
    let all = g.edges();
    // shortest non-planar prefix
    let (mut lo, mut hi) = (0, all.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if nonplanar(&all[..mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut edges = all[..lo].to_vec();
    let mut chunk = edges.len().div_ceil(2);
    while chunk >= 1 {
        let mut i = 0;
        while i < edges.len() {
            let end = (i + chunk).min(edges.len());
            let trial: Vec<(usize, usize)> = edges[..i].iter().chain(&edges[end..]).copied().collect();
            if nonplanar(&trial) {
                edges = trial;
            } else {
                i = end;
            }
        }
        if chunk == 1 {
            break;
        }
        chunk = chunk.div_ceil(2);
    }
    let minimal = SimpleGraph::from_edges(n, edges);
    read_subdivision(&minimal)
}

fn read_subdivision(m: &SimpleGraph) -> Kuratowski {
    let mut branch: Vec<usize> = (0..m.n_vertices()).filter(|&v| m.degree(v) >= 3).collect();
    let kind = match (branch.len(), m.max_degree()) {
        (5, 4) => KuratowskiKind::K5,
        (6, 3) => KuratowskiKind::K33,
        other => unreachable!("edge-minimal non-planar graph with branch profile {other:?}"),
    };
    let is_branch = |v: usize| m.degree(v) >= 3;
    let mut paths = Vec::new();
    for &b in &branch {
        for first in m.neighbors(b) {
            let mut path = vec![b, first];
            while !is_branch(*path.last().unwrap()) {
                let last = path[path.len() - 1];
                let before = path[path.len() - 2];
                let step = m.neighbors(last).find(|&x| x != before).unwrap();
                path.push(step);
            }
            if b < *path.last().unwrap() {
                paths.push(path);
            }
        }
    }
    if kind == KuratowskiKind::K33 {
        let a = branch[0];
        let side_b: Vec<usize> = paths
            .iter()
            .filter_map(|p| {
                let (s, e) = (p[0], p[p.len() - 1]);
                if s == a {
                    Some(e)
                } else if e == a {
                    Some(s)
                } else {
                    None
                }
            })
            .collect();
        let mut side_b = side_b;
        side_b.sort_unstable();
        let mut side_a: Vec<usize> = branch.iter().copied().filter(|x| !side_b.contains(x)).collect();
        side_a.sort_unstable();
        branch = side_a.into_iter().chain(side_b).collect();
    }
    let index = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    for p in &mut paths {
        if index(p[0]) > index(p[p.len() - 1]) {
            p.reverse();
        }
    }
    paths.sort_by_key(|p| (index(p[0]), index(p[p.len() - 1])));
    Kuratowski { kind, branch, paths }
}
