use crate::graph::SimpleGraph;

/// A `K_{1,3}` subgraph: a center and three of its neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// First claw by center index, via degrees.
pub fn find_claw(g: &SimpleGraph) -> Option<Claw> {
    (0..g.n_vertices()).find(|&v| g.degree(v) >= 3).map(|center| {
        let mut it = g.neighbors(center);
        let leaves = [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()];
        Claw { center, leaves }
    })
}

/// Exhaustive search over 4-vertex subsets for a vertex adjacent to the
/// other three.
pub fn find_claw_by_subsets(g: &SimpleGraph) -> Option<Claw> {
    let n = g.n_vertices();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    for (i, &center) in quad.iter().enumerate() {
                        let others: Vec<usize> = quad.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                        if others.iter().all(|&v| g.has_edge(center, v)) {
                            return Some(Claw {
                                center,
                                leaves: [others[0], others[1], others[2]],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}
