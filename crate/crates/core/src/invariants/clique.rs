use crate::bitset::ElementSet;
use crate::graph::SimpleGraph;

/// A maximum clique, sorted. Bron–Kerbosch with pivoting and a size bound.
pub fn max_clique(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut best = Vec::new();
    let mut r = Vec::new();
    extend_clique(g, &mut r, ElementSet::full(n), ElementSet::empty(n), &mut best);
    best.sort_unstable();
    best
}

fn extend_clique(g: &SimpleGraph, r: &mut Vec<usize>, mut p: ElementSet, mut x: ElementSet, best: &mut Vec<usize>) {
    if p.is_empty() {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection_len(g.neighbor_set(u)), std::cmp::Reverse(u)))
        .unwrap();
    for v in p.difference(g.neighbor_set(pivot)).to_vec() {
        r.push(v);
        let nv = g.neighbor_set(v);
        extend_clique(g, r, p.intersection(nv), x.intersection(nv), best);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

pub fn is_proper_coloring(g: &SimpleGraph, colors: &[usize]) -> bool {
    colors.len() == g.n_vertices() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

pub fn color_count(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Greedy DSATUR coloring (upper bound).
pub fn dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<ElementSet> = (0..n).map(|_| ElementSet::empty(n.max(1))).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].contains(c)).unwrap();
        colors[v] = c;
        for u in g.neighbors(v) {
            seen[u].insert(c);
        }
    }
    colors
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.n_vertices();
    let mut colors = vec![usize::MAX; n];
    if search_coloring(g, k, &mut colors, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

fn search_coloring(g: &SimpleGraph, k: usize, colors: &mut [usize], done: usize, used: usize) -> bool {
    let n = g.n_vertices();
    if done == n {
        return true;
    }
    let forbidden = |v: usize, colors: &[usize]| -> Vec<bool> {
        let mut f = vec![false; k];
        for u in g.neighbors(v) {
            if colors[u] != usize::MAX {
                f[colors[u]] = true;
            }
        }
        f
    };
    let v = (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let sat = forbidden(v, colors).iter().filter(|&&b| b).count();
            (sat, g.degree(v), std::cmp::Reverse(v))
        })
        .unwrap();
    let f = forbidden(v, colors);
    // colors beyond `used` are interchangeable, so only try the first fresh one
    for c in 0..k.min(used + 1) {
        if f[c] {
            continue;
        }
        colors[v] = c;
        if search_coloring(g, k, colors, done + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Exact chromatic number by searching between the clique bound and DSATUR.
pub fn chromatic_number(g: &SimpleGraph, omega: usize) -> usize {
    let upper = color_count(&dsatur(g));
    for k in omega..upper {
        if k_coloring(g, k).is_some() {
            return k;
        }
    }
    upper
}
