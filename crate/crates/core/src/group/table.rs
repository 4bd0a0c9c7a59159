use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::numtheory::lcm;
use super::{GroupError, GroupSpec};
use crate::bitset::ElementSet;
use crate::lattice::Subgroup;

/// A finite group given by its full operation table.
///
/// Element 0 is always the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    op: Vec<u32>,
    inverses: Vec<u32>,
    labels: Vec<String>,
    spec: Option<GroupSpec>,
}

/// A broken table law, as reported by [`GroupTable::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    ShapeMismatch { expected: usize, found: usize },
    OpOutOfRange { x: usize, y: usize },
    IdentityLawViolation { x: usize },
    InverseViolation { x: usize },
    AssociativityViolation { x: usize, y: usize, z: usize },
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    order: usize,
    op: Vec<u32>,
    labels: Vec<String>,
    spec: Option<GroupSpec>,
}

impl GroupTable {
    /// Wraps a row-major table without checking any law; see [`Self::validate`].
    pub fn from_table(order: usize, op: Vec<u32>, labels: Vec<String>, spec: Option<GroupSpec>) -> Self {
        let inverses = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| op.get(x * order + y) == Some(&0))
                    .unwrap_or(0) as u32
            })
            .collect();
        GroupTable {
            order,
            op,
            inverses,
            labels,
            spec,
        }
    }

    /// Builds the table of `elements` under `mul`. The first element must be
    /// the identity; table indices follow the slice order.
    pub(crate) fn from_elements<T, M, L>(elements: &[T], mul: M, label: L, spec: Option<GroupSpec>) -> Self
    where
        T: Eq + std::hash::Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let index: std::collections::HashMap<&T, u32> =
            elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let n = elements.len();
        let mut op = Vec::with_capacity(n * n);
        for x in elements {
            for y in elements {
                let prod = mul(x, y);
                op.push(*index.get(&prod).expect("element set is closed under the operation"));
            }
        }
        let labels = elements.iter().map(label).collect();
        Self::from_table(n, op, labels, spec)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn raw_table(&self) -> &[u32] {
        &self.op
    }

    /// All violated table laws. Later stages are skipped once an earlier one
    /// fails, so a single corrupted entry yields a single violation.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.order;
        if self.op.len() != n * n || self.labels.len() != n || n == 0 {
            return vec![Violation::ShapeMismatch {
                expected: n * n,
                found: self.op.len(),
            }];
        }
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.op[x * n + y] as usize >= n {
                    out.push(Violation::OpOutOfRange { x, y });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..n {
            if self.op(0, x) != x || self.op(x, 0) != x {
                out.push(Violation::IdentityLawViolation { x });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..n {
            let inv = self.inverse(x);
            if self.op(x, inv) != 0 || self.op(inv, x) != 0 {
                out.push(Violation::InverseViolation { x });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return vec![Violation::AssociativityViolation { x, y, z }];
                    }
                }
            }
        }
        out
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.op(acc, x);
            k += 1;
        }
        k
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.op(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// Sorted multiset of element orders.
    pub fn element_order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.op(self.op(by, x), self.inverse(by))
    }

    /// Closure of `start` under right multiplication by `gens`. `start` must
    /// already lie inside the generated subgroup.
    pub fn close(&self, start: &ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = start.clone();
        set.insert(0);
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        self.close(&ElementSet::empty(self.order), gens)
    }

    pub fn is_subgroup_set(&self, set: &ElementSet) -> bool {
        set.width() == self.order
            && set.contains(0)
            && set
                .iter()
                .all(|x| set.contains(self.inverse(x)) && set.iter().all(|y| set.contains(self.op(x, y))))
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<(), GroupError> {
        if self.is_subgroup_set(h.members()) {
            Ok(())
        } else {
            Err(GroupError::NotASubgroup)
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool, GroupError> {
        self.check_subgroup(h)?;
        Ok(self.is_normal_set(h.members()))
    }

    pub(crate) fn is_normal_set(&self, members: &ElementSet) -> bool {
        (0..self.order).all(|g| members.iter().all(|x| members.contains(self.conjugate(x, g))))
    }

    /// The coset table `G/N`. Cosets are numbered by their smallest element,
    /// which also serves as the representative label.
    pub fn quotient(&self, n: &Subgroup) -> Result<GroupTable, GroupError> {
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let (coset_of, reps) = self.cosets(n.members());
        let m = reps.len();
        let mut op = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                op.push(coset_of[self.op(a, b)] as u32);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| if r == 0 { "N".to_string() } else { format!("{}N", self.labels[r]) })
            .collect();
        Ok(GroupTable::from_table(m, op, labels, None))
    }

    /// Left cosets `xN`: the coset id of each element, and each coset's
    /// smallest element.
    pub fn cosets(&self, members: &ElementSet) -> (Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for nn in members.iter() {
                coset_of[self.op(x, nn)] = id;
            }
        }
        (coset_of, reps)
    }

    /// The subgroup on `members` as a standalone table, together with the
    /// map from local to ambient indices.
    pub fn subgroup_table(&self, members: &ElementSet) -> (GroupTable, Vec<usize>) {
        let to_global: Vec<usize> = members.iter().collect();
        let mut to_local = vec![usize::MAX; self.order];
        for (i, &g) in to_global.iter().enumerate() {
            to_local[g] = i;
        }
        let m = to_global.len();
        let mut op = Vec::with_capacity(m * m);
        for &a in &to_global {
            for &b in &to_global {
                let l = to_local[self.op(a, b)];
                assert!(l != usize::MAX, "member set is not closed");
                op.push(l as u32);
            }
        }
        let labels = to_global.iter().map(|&g| self.labels[g].clone()).collect();
        (GroupTable::from_table(m, op, labels, None), to_global)
    }

    /// Renames elements: old element `x` becomes `perm[x]`. `perm` must fix 0.
    pub fn relabeled(&self, perm: &[usize]) -> GroupTable {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "identity must stay at index 0");
        let n = self.order;
        let mut op = vec![0u32; n * n];
        let mut labels = vec![String::new(); n];
        for x in 0..n {
            labels[perm[x]] = self.labels[x].clone();
            for y in 0..n {
                op[perm[x] * n + perm[y]] = perm[self.op(x, y)] as u32;
            }
        }
        GroupTable::from_table(n, op, labels, self.spec.clone())
    }

    /// The derived (commutator) subgroup of the subgroup on `members`.
    pub fn derived_subgroup(&self, members: &ElementSet) -> ElementSet {
        let mut gens = Vec::new();
        let mut seen = ElementSet::empty(self.order);
        for x in members.iter() {
            for y in members.iter() {
                let c = self.op(self.op(self.inverse(x), self.inverse(y)), self.op(x, y));
                if seen.insert(c) {
                    gens.push(c);
                }
            }
        }
        self.generate(&gens)
    }

    pub fn is_solvable(&self) -> bool {
        let mut current = ElementSet::full(self.order);
        loop {
            if current.len() == 1 {
                return true;
            }
            let next = self.derived_subgroup(&current);
            if next == current {
                return false;
            }
            current = next;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            order: self.order,
            op: self.op.clone(),
            labels: self.labels.clone(),
            spec: self.spec.clone(),
        })
        .expect("table serializes")
    }

    /// Parses the JSON export format; the result is not validated.
    pub fn from_json(value: &serde_json::Value) -> Result<GroupTable, serde_json::Error> {
        let t: TableJson = serde_json::from_value(value.clone())?;
        Ok(GroupTable::from_table(t.order, t.op, t.labels, t.spec))
    }
}

/// Component-wise product; element `(x, y)` gets index `x * |h| + y`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable, GroupError> {
    let order = g.order() * h.order();
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order: order as u64, cap });
    }
    let m = h.order();
    let mut op = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let a = g.op(x / m, y / m);
            let b = h.op(x % m, y % m);
            op.push((a * m + b) as u32);
        }
    }
    let mut labels = Vec::with_capacity(order);
    for x in 0..g.order() {
        for y in 0..m {
            labels.push(format!("({},{})", g.label(x), h.label(y)));
        }
    }
    let spec = match (g.spec(), h.spec()) {
        (Some(a), Some(b)) => {
            let mut parts: Vec<GroupSpec> = a.factors().into_iter().cloned().collect();
            parts.extend(b.factors().into_iter().cloned());
            Some(GroupSpec::DirectProduct(parts))
        }
        _ => None,
    };
    Ok(GroupTable::from_table(order, op, labels, spec))
}

/// Order of `(x, y)` in a product, from component orders.
pub fn product_element_order(g: &GroupTable, h: &GroupTable, x: usize, y: usize) -> usize {
    lcm(g.element_order(x) as u64, h.element_order(y) as u64) as usize
}
