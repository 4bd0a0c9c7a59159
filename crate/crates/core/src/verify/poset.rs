use std::collections::BTreeMap;

use crate::lattice::SubgroupLattice;

/// Search nodes allowed before an order-isomorphism search gives up.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIso {
    /// `map[i]` is the image of subgroup `i`.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
    /// Budget exhausted.
    Undecided,
}

fn covers(l: &SubgroupLattice) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut up = vec![Vec::new(); l.len()];
    let mut down = vec![Vec::new(); l.len()];
    for &(x, y) in l.hasse_edges() {
        let (lo, hi) = if l.contains(x, y) { (x, y) } else { (y, x) };
        up[lo].push(hi);
        down[hi].push(lo);
    }
    (up, down)
}

/// Joint color refinement of both cover diagrams, with colors comparable
/// across the two lattices.
fn refine(a: &SubgroupLattice, b: &SubgroupLattice) -> Option<(Vec<usize>, Vec<usize>)> {
    let diagrams = [covers(a), covers(b)];
    let mut colors: [Vec<usize>; 2] = [vec![0; a.len()], vec![0; b.len()]];
    let mut classes = 1;
    loop {
        let mut intern: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let mut sigs = [Vec::new(), Vec::new()];
        for side in 0..2 {
            let (up, down) = &diagrams[side];
            let c = &colors[side];
            for x in 0..c.len() {
                let mut u: Vec<usize> = up[x].iter().map(|&y| c[y]).collect();
                let mut d: Vec<usize> = down[x].iter().map(|&y| c[y]).collect();
                u.sort_unstable();
                d.sort_unstable();
                let key = (c[x], u, d);
                intern.entry(key.clone()).or_insert(0);
                sigs[side].push(key);
            }
        }
        for (i, v) in intern.values_mut().enumerate() {
            *v = i;
        }
        let next: [Vec<usize>; 2] = [
            sigs[0].iter().map(|k| intern[k]).collect(),
            sigs[1].iter().map(|k| intern[k]).collect(),
        ];
        let histogram = |c: &[usize]| {
            let mut h = vec![0; intern.len()];
            for &x in c {
                h[x] += 1;
            }
            h
        };
        if histogram(&next[0]) != histogram(&next[1]) {
            return None;
        }
        let stable = intern.len() == classes;
        classes = intern.len();
        colors = next;
        if stable {
            let [ca, cb] = colors;
            return Some((ca, cb));
        }
    }
}

/// Decides whether two subgroup lattices are isomorphic as posets.
pub fn lattice_isomorphism(a: &SubgroupLattice, b: &SubgroupLattice, budget: usize) -> LatticeIso {
    let n = a.len();
    if n != b.len() || a.height() != b.height() || a.hasse_edges().len() != b.hasse_edges().len() {
        return LatticeIso::NotIsomorphic;
    }
    let Some((ca, cb)) = refine(a, b) else {
        return LatticeIso::NotIsomorphic;
    };
    let mut search = Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    match search.extend(0) {
        Some(true) => LatticeIso::Isomorphic(search.map),
        Some(false) => LatticeIso::NotIsomorphic,
        None => LatticeIso::Undecided,
    }
}

struct Search<'a> {
    a: &'a SubgroupLattice,
    b: &'a SubgroupLattice,
    ca: &'a [usize],
    cb: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
    budget: usize,
}

impl Search<'_> {
    // lattice order is a linear extension, so each step extends a down-closed
    // prefix
    fn extend(&mut self, i: usize) -> Option<bool> {
        if i == self.map.len() {
            return Some(true);
        }
        for j in 0..self.map.len() {
            if self.used[j] || self.ca[i] != self.cb[j] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let consistent = (0..i).all(|k| {
                self.a.contains(k, i) == self.b.contains(self.map[k], j)
                    && self.a.contains(i, k) == self.b.contains(j, self.map[k])
            });
            if !consistent {
                continue;
            }
            self.map[i] = j;
            self.used[j] = true;
            if self.extend(i + 1)? {
                return Some(true);
            }
            self.used[j] = false;
        }
        Some(false)
    }
}

pub fn is_order_isomorphism(a: &SubgroupLattice, b: &SubgroupLattice, map: &[usize]) -> bool {
    let n = a.len();
    if map.len() != n || b.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
        return false;
    }
    (0..n).all(|i| (0..n).all(|k| a.contains(i, k) == b.contains(map[i], map[k])))
}
