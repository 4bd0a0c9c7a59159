use std::collections::BTreeMap;

use crate::group::numtheory::{exponent_pattern, factorize, is_prime};
use crate::group::{GroupSpec, GroupTable};
use crate::lattice::SubgroupLattice;

/// Isomorphism family of a spec. Specs naming isomorphic groups get equal
/// classes (e.g. `S3`, `D6` and `SD(3,2,1,1)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupClass {
    Trivial,
    /// Cyclic, by prime factorization.
    Cyclic(Vec<(u64, u32)>),
    /// Non-cyclic abelian, by invariant factors in descending order.
    Abelian(Vec<u64>),
    Quaternion8,
    /// `M8` as presented, which is the dihedral group of order 8.
    Dihedral8,
    ModularP3(u64),
    Heisenberg(u64),
    /// `Z_q x|_t Z_{p^alpha}`.
    MetacyclicQP { q: u64, p: u64, alpha: u32, t: u32 },
    /// `Z_{p^2} x| Z_q`.
    MetacyclicP2Q { p: u64, q: u64 },
    /// `(Z_p x Z_p) x| Z_q` acting diagonally; `t` is reduced modulo
    /// inversion.
    DiagonalAction { p: u64, q: u64, t: u32 },
    /// `(Z_p x Z_p) x| Z_q` acting irreducibly; `A4` is `p = 2, q = 3`.
    IrreducibleAction { p: u64, q: u64 },
    /// Dihedral groups not covered by the families above, by order.
    Dihedral(u64),
    Symmetric4,
    Alternating5,
    Other,
}

impl GroupClass {
    /// Exponent pattern of a cyclic class, largest first.
    pub fn cyclic_pattern(&self) -> Option<Vec<u32>> {
        match self {
            GroupClass::Cyclic(f) => Some(exponent_pattern(f.iter().map(|&(p, e)| p.pow(e)).product())),
            _ => None,
        }
    }

    pub fn is_cyclic_with(&self, pattern: &[u32]) -> bool {
        self.cyclic_pattern().as_deref() == Some(pattern)
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupClass::Trivial | GroupClass::Cyclic(_) | GroupClass::Abelian(_))
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(self, GroupClass::Alternating5 | GroupClass::Other)
    }

    /// Groups of prime order or the trivial group.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, GroupClass::Trivial) || self.is_cyclic_with(&[1])
    }
}

fn cyclic(n: u64) -> GroupClass {
    if n == 1 {
        GroupClass::Trivial
    } else {
        GroupClass::Cyclic(factorize(n))
    }
}

/// Invariant factors of a product of abelian classes.
fn combine_abelian(parts: &[GroupClass]) -> Option<GroupClass> {
    let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut push = |n: u64| {
        for (p, e) in factorize(n) {
            powers.entry(p).or_default().push(p.pow(e));
        }
    };
    for part in parts {
        match part {
            GroupClass::Trivial => {}
            GroupClass::Cyclic(f) => f.iter().for_each(|&(p, e)| push(p.pow(e))),
            GroupClass::Abelian(factors) => factors.iter().for_each(|&d| push(d)),
            _ => return None,
        }
    }
    let rank = powers.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; rank];
    for list in powers.values_mut() {
        list.sort_unstable_by(|a, b| b.cmp(a));
        for (i, &pp) in list.iter().enumerate() {
            factors[i] *= pp;
        }
    }
    Some(match rank {
        0 => GroupClass::Trivial,
        1 => cyclic(factors[0]),
        _ => GroupClass::Abelian(factors),
    })
}

/// Family of a valid spec.
pub fn classify(spec: &GroupSpec) -> GroupClass {
    match *spec {
        GroupSpec::Cyclic(n) => cyclic(n),
        GroupSpec::DirectProduct(ref parts) => {
            let classes: Vec<GroupClass> = parts.iter().map(classify).collect();
            let nontrivial: Vec<&GroupClass> = classes.iter().filter(|c| **c != GroupClass::Trivial).collect();
            match nontrivial.as_slice() {
                [] => GroupClass::Trivial,
                [only] => (*only).clone(),
                _ => combine_abelian(&classes).unwrap_or(GroupClass::Other),
            }
        }
        GroupSpec::Dihedral(n) => {
            let m = n / 2;
            match n {
                2 => cyclic(2),
                4 => GroupClass::Abelian(vec![2, 2]),
                8 => GroupClass::Dihedral8,
                _ if is_prime(m) => GroupClass::MetacyclicQP { q: m, p: 2, alpha: 1, t: 1 },
                _ => match factorize(m).as_slice() {
                    &[(p, 2)] if p > 2 => GroupClass::MetacyclicP2Q { p, q: 2 },
                    _ => GroupClass::Dihedral(n),
                },
            }
        }
        GroupSpec::Quaternion8 => GroupClass::Quaternion8,
        GroupSpec::Modular8 | GroupSpec::Heisenberg(2) => GroupClass::Dihedral8,
        GroupSpec::ModularP3(p) => GroupClass::ModularP3(p),
        GroupSpec::Heisenberg(p) => GroupClass::Heisenberg(p),
        GroupSpec::SemidirectQP { q, p, alpha, t } => GroupClass::MetacyclicQP { q, p, alpha, t },
        GroupSpec::SemidirectP2Q { p, q } => GroupClass::MetacyclicP2Q { p, q },
        GroupSpec::G5 { p, q, t } => {
            // diag(i, i^t) and diag(i, i^s) with ts = 1 mod q are conjugate
            // after swapping coordinates and changing the generator
            let t = u64::from(t);
            let inverse = (1..q).find(|&s| (t * s) % q == 1).unwrap_or(t);
            GroupClass::DiagonalAction { p, q, t: t.min(inverse) as u32 }
        }
        GroupSpec::G6 { p, q } => {
            if (p - 1) % q == 0 {
                GroupClass::Other
            } else {
                GroupClass::IrreducibleAction { p, q }
            }
        }
        GroupSpec::Alternating(n) => match n {
            1 | 2 => GroupClass::Trivial,
            3 => cyclic(3),
            4 => GroupClass::IrreducibleAction { p: 2, q: 3 },
            5 => GroupClass::Alternating5,
            _ => GroupClass::Other,
        },
        GroupSpec::Symmetric(n) => match n {
            1 => GroupClass::Trivial,
            2 => cyclic(2),
            3 => GroupClass::MetacyclicQP { q: 3, p: 2, alpha: 1, t: 1 },
            4 => GroupClass::Symmetric4,
            _ => GroupClass::Other,
        },
    }
}

/// `Z_p x Z_q` for primes `p`, `q` (possibly equal), read off the table.
pub fn is_product_of_two_primes(g: &GroupTable) -> bool {
    let f = factorize(g.order() as u64);
    let omega: u32 = f.iter().map(|&(_, e)| e).sum();
    if omega != 2 || !g.is_abelian() {
        return false;
    }
    f.len() == 2 || (0..g.order()).all(|x| g.element_order(x) as u64 <= f[0].0)
}

/// A Frobenius complement of prime order whose kernel is minimal normal, as
/// lattice indices `(complement, kernel)`.
///
/// A self-normalizing subgroup `H` of prime order meets each of its other
/// conjugates trivially, so it is a Frobenius complement; the kernel is the
/// identity together with the elements outside every conjugate of `H`.
pub fn frobenius_prime_complement(g: &GroupTable, lat: &SubgroupLattice) -> Option<(usize, usize)> {
    let n = g.order();
    for h in lat.proper_nontrivial() {
        let sub = lat.subgroup(h);
        if !is_prime(sub.order() as u64) {
            continue;
        }
        let normalizer = (0..n)
            .filter(|&x| sub.members().iter().all(|y| sub.contains(g.conjugate(y, x))))
            .count();
        if normalizer != sub.order() {
            continue;
        }
        let mut covered = vec![false; n];
        for x in 0..n {
            for y in sub.members().iter() {
                covered[g.conjugate(y, x)] = true;
            }
        }
        let kernel = crate::bitset::ElementSet::from_indices(n, (0..n).filter(|&x| x == 0 || !covered[x]));
        let Some(k) = lat.index_of(&kernel) else {
            continue;
        };
        if !g.is_normal(lat.subgroup(k)).unwrap_or(false) {
            continue;
        }
        let minimal = lat.below(k).iter().all(|m| {
            m == k || m == lat.bottom() || !g.is_normal(lat.subgroup(m)).unwrap_or(false)
        });
        if minimal {
            return Some((h, k));
        }
    }
    None
}
