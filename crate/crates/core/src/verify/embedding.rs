use crate::bitset::ElementSet;
use crate::graph::{inclusion_graph, vertex_subgroup, SimpleGraph};
use crate::group::{GroupError, GroupTable};
use crate::lattice::{lattice_of, Subgroup, SubgroupLattice};

/// A vertex map from a smaller inclusion graph into `I(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEmbedding {
    /// Image in `I(G)` of each source vertex; `None` if the corresponding
    /// subgroup was not found among the proper nontrivial subgroups of `G`.
    pub map: Vec<Option<usize>>,
    pub injective: bool,
    pub preserves_edges: bool,
}

impl VertexEmbedding {
    fn new(source: &SimpleGraph, target: &SimpleGraph, map: Vec<Option<usize>>) -> Self {
        let mut seen = vec![false; target.n_vertices()];
        let mut injective = true;
        for v in map.iter().flatten() {
            injective &= !std::mem::replace(&mut seen[*v], true);
        }
        injective &= map.iter().all(Option::is_some);
        let preserves_edges = source.edges().iter().all(|&(u, v)| match (map[u], map[v]) {
            (Some(a), Some(b)) => target.has_edge(a, b),
            _ => false,
        });
        VertexEmbedding {
            map,
            injective,
            preserves_edges,
        }
    }

    pub fn is_embedding(&self) -> bool {
        self.injective && self.preserves_edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// `I(N)` into `I(G)` by `H -> H`.
    pub subgroup: VertexEmbedding,
    /// `I(G/N)` into `I(G)` by `H/N -> H`; `NotNormal` when `N` is not normal.
    pub quotient: Result<VertexEmbedding, GroupError>,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.subgroup.is_embedding() && self.quotient.as_ref().map_or(true, VertexEmbedding::is_embedding)
    }
}

fn image_vertex(lat: &SubgroupLattice, members: &ElementSet) -> Option<usize> {
    let i = lat.index_of(members)?;
    lat.proper_nontrivial().contains(&i).then(|| i - 1)
}

/// `I(N)` mapped into `I(G)` through the inclusion `N <= G`.
pub fn subgroup_embedding(g: &GroupTable, lat: &SubgroupLattice, n: &Subgroup) -> Result<VertexEmbedding, GroupError> {
    let (table, to_global) = g.subgroup_table(n.members());
    let sub_lat = lattice_of(&table)?;
    let source = inclusion_graph(&sub_lat);
    let map = (0..source.n_vertices())
        .map(|v| {
            let local = sub_lat.subgroup(vertex_subgroup(v)).members();
            image_vertex(lat, &ElementSet::from_indices(g.order(), local.iter().map(|x| to_global[x])))
        })
        .collect();
    Ok(VertexEmbedding::new(&source, &inclusion_graph(lat), map))
}

/// `I(G/N)` mapped into `I(G)` by taking full preimages of subgroups.
pub fn quotient_embedding(g: &GroupTable, lat: &SubgroupLattice, n: &Subgroup) -> Result<VertexEmbedding, GroupError> {
    let q = g.quotient(n)?;
    let (coset_of, _) = g.cosets(n.members());
    let q_lat = lattice_of(&q)?;
    let source = inclusion_graph(&q_lat);
    let map = (0..source.n_vertices())
        .map(|v| {
            let cosets = q_lat.subgroup(vertex_subgroup(v)).members();
            let preimage = ElementSet::from_indices(g.order(), (0..g.order()).filter(|&x| cosets.contains(coset_of[x])));
            image_vertex(lat, &preimage)
        })
        .collect();
    Ok(VertexEmbedding::new(&source, &inclusion_graph(lat), map))
}

/// Both embeddings for the pair `N <= G`.
pub fn embedding_checks(g: &GroupTable, n: &Subgroup) -> Result<EmbeddingReport, GroupError> {
    let lat = lattice_of(g)?;
    embedding_checks_in(g, &lat, n)
}

/// As [`embedding_checks`] with the lattice of `G` already built.
pub fn embedding_checks_in(g: &GroupTable, lat: &SubgroupLattice, n: &Subgroup) -> Result<EmbeddingReport, GroupError> {
    let subgroup = subgroup_embedding(g, lat, n)?;
    let quotient = match quotient_embedding(g, lat, n) {
        Err(GroupError::NotNormal) => Err(GroupError::NotNormal),
        other => Ok(other?),
    };
    Ok(EmbeddingReport { subgroup, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct;
    use crate::parse::parse_spec;

    fn setup(s: &str) -> (GroupTable, SubgroupLattice) {
        let g = construct(&parse_spec(s).unwrap()).unwrap();
        let lat = lattice_of(&g).unwrap();
        (g, lat)
    }

    fn named(lat: &SubgroupLattice, map: &[Option<usize>]) -> Vec<String> {
        let mut names: Vec<String> = map.iter().map(|v| lat.name(vertex_subgroup(v.unwrap())).to_string()).collect();
        names.sort();
        names
    }

    #[test]
    fn cyclic_subgroup_of_q8() {
        let (g, lat) = setup("Q8");
        let a = lat.index_of(&g.generate(&[1])).unwrap();
        assert_eq!(lat.name(a), "<a>");
        let report = embedding_checks_in(&g, &lat, lat.subgroup(a)).unwrap();
        assert!(report.holds());
        assert_eq!(named(&lat, &report.subgroup.map), ["<a^2>"]);
        // Q8/<a> has order 2, so its graph is empty
        assert!(report.quotient.unwrap().map.is_empty());
    }

    #[test]
    fn quotient_by_center_of_q8() {
        let (g, lat) = setup("Q8");
        let center = lat.subgroups().iter().position(|s| s.order() == 2).unwrap();
        let report = embedding_checks_in(&g, &lat, lat.subgroup(center)).unwrap();
        let quotient = report.quotient.unwrap();
        assert!(quotient.is_embedding());
        assert_eq!(named(&lat, &quotient.map), ["<a>", "<ab>", "<b>"]);
    }

    #[test]
    fn whole_and_trivial() {
        let (g, lat) = setup("S4");
        let whole = embedding_checks_in(&g, &lat, lat.subgroup(lat.top())).unwrap();
        assert!(whole.holds());
        assert!(whole.quotient.unwrap().map.is_empty());
        let trivial = embedding_checks_in(&g, &lat, lat.subgroup(lat.bottom())).unwrap();
        assert!(trivial.subgroup.map.is_empty());
        assert_eq!(trivial.quotient.unwrap().map.len(), lat.len() - 2);
    }

    #[test]
    fn non_normal_quotient_is_refused() {
        let (g, lat) = setup("S3");
        let order_two = lat.subgroups().iter().position(|s| s.order() == 2).unwrap();
        let report = embedding_checks_in(&g, &lat, lat.subgroup(order_two)).unwrap();
        assert!(report.subgroup.is_embedding());
        assert_eq!(report.quotient, Err(GroupError::NotNormal));
        assert!(report.holds());
    }

    #[test]
    fn broken_maps_are_caught() {
        let edge = crate::graph::named::path(1);
        let k3 = crate::graph::named::complete(3);
        assert!(VertexEmbedding::new(&edge, &k3, vec![Some(0), Some(2)]).is_embedding());
        let collide = VertexEmbedding::new(&edge, &k3, vec![Some(0), Some(0)]);
        assert!(!collide.injective && !collide.preserves_edges);
        let missing = VertexEmbedding::new(&edge, &k3, vec![Some(0), None]);
        assert!(!missing.injective && !missing.preserves_edges);
        let dropped = VertexEmbedding::new(&edge, &crate::graph::named::empty(2), vec![Some(0), Some(1)]);
        assert!(dropped.injective && !dropped.preserves_edges);
    }
}
