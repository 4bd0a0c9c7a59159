//! Subgroup enumeration and the subgroup lattice.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde_json::json;

use crate::bitset::ElementSet;
use crate::group::{numtheory, GroupError, GroupTable, DEFAULT_ORDER_CAP};

/// A subgroup as a membership bitset plus an irredundant generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElementSet,
    generators: Vec<usize>,
}

impl Subgroup {
    /// Builds a subgroup from a member set, rejecting sets that are not
    /// closed.
    pub fn from_members(g: &GroupTable, members: ElementSet) -> Result<Subgroup, GroupError> {
        if !g.is_subgroup_set(&members) {
            return Err(GroupError::NotASubgroup);
        }
        let mut gens = Vec::new();
        let mut span = g.generate(&[]);
        for x in members.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = g.generate(&gens);
            }
        }
        Ok(Subgroup::with_generators(g, members, gens))
    }

    pub fn generated_by(g: &GroupTable, gens: &[usize]) -> Subgroup {
        let members = g.generate(gens);
        Subgroup::with_generators(g, members, gens.to_vec())
    }

    pub fn trivial(g: &GroupTable) -> Subgroup {
        Subgroup {
            members: g.generate(&[]),
            generators: Vec::new(),
        }
    }

    pub fn whole(g: &GroupTable) -> Subgroup {
        Subgroup::from_members(g, ElementSet::full(g.order())).expect("G is a subgroup of itself")
    }

    /// Drops generators that are not needed, keeping the first ones.
    fn with_generators(g: &GroupTable, members: ElementSet, mut gens: Vec<usize>) -> Subgroup {
        gens.retain(|&x| x != 0);
        gens.dedup();
        let mut i = 0;
        while i < gens.len() {
            let mut without = gens.clone();
            without.remove(i);
            if g.generate(&without) == members {
                gens = without;
            } else {
                i += 1;
            }
        }
        Subgroup {
            members,
            generators: gens,
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Generator word, e.g. `<a^2,b>`; the trivial subgroup is `<e>`.
    pub fn describe(&self, g: &GroupTable) -> String {
        if self.generators.is_empty() {
            return "<e>".to_string();
        }
        let words: Vec<&str> = self.generators.iter().map(|&x| g.label(x)).collect();
        format!("<{}>", words.join(","))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every subgroup of `g`, sorted by (order, member list).
///
/// Seeds with the cyclic subgroups and closes joins `<H, C>` of known
/// subgroups `H` with cyclic subgroups `C` until no new subgroup appears.
/// Any subgroup `<g1, ..., gk>` is reached through the chain
/// `<g1> ⊆ <g1, g2> ⊆ ...`.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>, GroupError> {
    all_subgroups_with_cap(g, DEFAULT_ORDER_CAP)
}

pub fn all_subgroups_with_cap(g: &GroupTable, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::OrderCapExceeded {
            order: g.order() as u64,
            cap,
        });
    }
    let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
    let mut known: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut frontier: Vec<ElementSet> = Vec::new();
    for x in 0..g.order() {
        let set = g.generate(&[x]);
        if !known.contains_key(&set) {
            let gens = if x == 0 { vec![] } else { vec![x] };
            known.insert(set.clone(), gens);
            if x != 0 {
                cyclic.push((set.clone(), x));
            }
            frontier.push(set);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let h_gens = known[h].clone();
            for (c, x) in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let mut gens = h_gens.clone();
                gens.push(*x);
                let joined = g.close(h, &gens);
                if !known.contains_key(&joined) {
                    known.insert(joined.clone(), gens);
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = known
        .into_iter()
        .map(|(members, gens)| Subgroup::with_generators(g, members, gens))
        .collect();
    subgroups.sort();
    Ok(subgroups)
}

/// The subgroup lattice with containment, covering pairs, height and the
/// antichain levels of the proper nontrivial subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    names: Vec<String>,
    /// `up[i]` holds every `j` with `S_i ⊆ S_j`.
    up: Vec<ElementSet>,
    /// `down[i]` holds every `j` with `S_j ⊆ S_i`.
    down: Vec<ElementSet>,
    hasse: Vec<(usize, usize)>,
    height: usize,
    levels: Vec<Vec<usize>>,
    level_of: Vec<Option<usize>>,
}

pub fn lattice_of(g: &GroupTable) -> Result<SubgroupLattice, GroupError> {
    Ok(SubgroupLattice::from_subgroups(g, all_subgroups(g)?))
}

pub fn lattice_with_cap(g: &GroupTable, cap: usize) -> Result<SubgroupLattice, GroupError> {
    Ok(SubgroupLattice::from_subgroups(g, all_subgroups_with_cap(g, cap)?))
}

impl SubgroupLattice {
    /// `subgroups` must be the complete sorted list for one group.
    pub fn from_subgroups(g: &GroupTable, subgroups: Vec<Subgroup>) -> SubgroupLattice {
        let s = subgroups.len();
        let names = subgroups.iter().map(|h| h.describe(g)).collect();
        let mut up: Vec<ElementSet> = (0..s).map(|_| ElementSet::empty(s)).collect();
        let mut down: Vec<ElementSet> = (0..s).map(|_| ElementSet::empty(s)).collect();
        for i in 0..s {
            for j in i..s {
                let (oi, oj) = (subgroups[i].order(), subgroups[j].order());
                if oj % oi == 0 && subgroups[i].is_subgroup_of(&subgroups[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let mut hasse = Vec::new();
        for j in 0..s {
            let mut strict = down[j].clone();
            let mut covered = ElementSet::empty(s);
            for k in down[j].iter().filter(|&k| k != j) {
                for m in down[k].iter().filter(|&m| m != k) {
                    covered.insert(m);
                }
            }
            strict = ElementSet::from_indices(s, strict.iter().filter(|&i| i != j && !covered.contains(i)));
            hasse.extend(strict.iter().map(|i| (i, j)));
        }
        hasse.sort_unstable();

        // longest chains measured in edges
        let mut lower_covers: Vec<Vec<usize>> = vec![Vec::new(); s];
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new(); s];
        for &(i, j) in &hasse {
            lower_covers[j].push(i);
            upper_covers[i].push(j);
        }
        let mut from_bottom = vec![0usize; s];
        for j in 0..s {
            from_bottom[j] = lower_covers[j].iter().map(|&i| from_bottom[i] + 1).max().unwrap_or(0);
        }
        let mut from_top = vec![0usize; s];
        for i in (0..s).rev() {
            from_top[i] = upper_covers[i].iter().map(|&j| from_top[j] + 1).max().unwrap_or(0);
        }
        let height = if s == 0 { 0 } else { from_bottom[s - 1] };

        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); height.saturating_sub(1)];
        let mut level_of = vec![None; s];
        for i in 1..s.saturating_sub(1) {
            let l = from_top[i] - 1;
            levels[l].push(i);
            level_of[i] = Some(l);
        }
        SubgroupLattice {
            subgroups,
            names,
            up,
            down,
            hasse,
            height,
            levels,
            level_of,
        }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// Generator word of subgroup `i`, e.g. `<a^2>`.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// `S_i ⊆ S_j`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn above(&self, i: usize) -> &ElementSet {
        &self.up[i]
    }

    pub fn below(&self, i: usize) -> &ElementSet {
        &self.down[i]
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `levels()[0]` holds the maximal subgroups, `levels()[1]` the next
    /// antichain down, and so on.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn level_of(&self, i: usize) -> Option<usize> {
        self.level_of[i]
    }

    /// Level of each inclusion-graph vertex, usable as a coloring.
    pub fn level_coloring(&self) -> Vec<usize> {
        self.proper_nontrivial()
            .map(|i| self.level_of[i].expect("proper subgroups have a level"))
            .collect()
    }

    /// Lattice indices of the proper nontrivial subgroups, in lattice order.
    pub fn proper_nontrivial(&self) -> std::ops::Range<usize> {
        1..self.subgroups.len().saturating_sub(1).max(1)
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.subgroups
            .binary_search_by(|s| s.members().cmp(members))
            .ok()
    }

    pub fn sylow_count(&self, p: u64) -> Result<usize, GroupError> {
        let order = self.subgroups.last().map_or(1, |s| s.order());
        if !numtheory::is_prime(p) || order as u64 % p != 0 {
            return Err(GroupError::PrimeDoesNotDivideOrder { p, order });
        }
        let mut pk = 1usize;
        while order % (pk * p as usize) == 0 {
            pk *= p as usize;
        }
        Ok(self.subgroups.iter().filter(|s| s.order() == pk).count())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let subgroups: Vec<_> = self
            .subgroups
            .iter()
            .map(|s| json!({"order": s.order(), "members": s.members().to_vec(), "generators": s.generators()}))
            .collect();
        json!({
            "subgroups": subgroups,
            "hasse": self.hasse.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            "height": self.height,
            "levels": self.levels,
        })
    }
}

pub fn sylow_count(g: &GroupTable, p: u64) -> Result<usize, GroupError> {
    lattice_of(g)?.sylow_count(p)
}
