use std::collections::VecDeque;

use crate::graph::SimpleGraph;

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
pub fn distances_from(g: &SimpleGraph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n_vertices()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// `None` when the graph is empty or disconnected.
pub fn diameter(g: &SimpleGraph) -> Option<usize> {
    let n = g.n_vertices();
    if n == 0 {
        return None;
    }
    let mut best = 0;
    for s in 0..n {
        let dist = distances_from(g, s);
        let far = *dist.iter().max().unwrap();
        if far == usize::MAX {
            return None;
        }
        best = best.max(far);
    }
    Some(best)
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n_vertices();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A proper 2-coloring, if one exists.
pub fn two_coloring(g: &SimpleGraph) -> Option<Vec<bool>> {
    let n = g.n_vertices();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}
