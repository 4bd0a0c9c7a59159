use super::numtheory::pow_mod;
use super::table::direct_product;
use super::{GroupError, GroupSpec, GroupTable, DEFAULT_ORDER_CAP};

/// Normal-form word such as `a^2bc^3`; the empty word is `e`.
fn word(parts: &[(&str, u64)]) -> String {
    let mut s = String::new();
    for &(g, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(g),
            _ => s.push_str(&format!("{g}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

pub fn construct(spec: &GroupSpec) -> Result<GroupTable, GroupError> {
    construct_with_cap(spec, DEFAULT_ORDER_CAP)
}

/// Builds and validates the operation table of `spec`.
pub fn construct_with_cap(spec: &GroupSpec, cap: usize) -> Result<GroupTable, GroupError> {
    spec.validate()?;
    let order = spec.order().ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
    if order > cap as u64 {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    let table = build(spec, cap)?;
    let violations = table.validate();
    if !violations.is_empty() {
        return Err(GroupError::InvalidTable(format!("{spec}: {violations:?}")));
    }
    debug_assert_eq!(table.order() as u64, order);
    Ok(table)
}

fn build(spec: &GroupSpec, cap: usize) -> Result<GroupTable, GroupError> {
    let s = Some(spec.clone());
    Ok(match *spec {
        GroupSpec::Cyclic(n) => cyclic(n, s),
        GroupSpec::DirectProduct(ref parts) => {
            let mut acc = build(&parts[0], cap)?;
            for part in &parts[1..] {
                let next = build(part, cap)?;
                acc = direct_product(&acc, &next, cap)?;
            }
            if parts.len() == 1 {
                acc = GroupTable::from_table(
                    acc.order(),
                    acc.raw_table().to_vec(),
                    acc.labels().to_vec(),
                    s,
                );
            }
            acc
        }
        GroupSpec::Dihedral(n) => {
            let m = n / 2;
            metacyclic(m, 2, 0, (m + m - 1) % m.max(1), s)
        }
        GroupSpec::Quaternion8 => metacyclic(4, 2, 2, 3, s),
        GroupSpec::Modular8 => metacyclic(4, 2, 0, 3, s),
        GroupSpec::ModularP3(p) => metacyclic(p * p, p, 0, 1 + p, s),
        GroupSpec::SemidirectQP { q, p, alpha, .. } => {
            let i = spec.action_exponent()?;
            metacyclic(q, p.pow(alpha), 0, i, s)
        }
        GroupSpec::SemidirectP2Q { p, q } => {
            let i = spec.action_exponent()?;
            metacyclic(p * p, q, 0, i, s)
        }
        GroupSpec::G5 { p, q, t } => {
            let i = spec.action_exponent()?;
            let m = [[i, 0], [0, pow_mod(i, u64::from(t), p)]];
            vector_semidirect(p, m, q, s)
        }
        GroupSpec::G6 { p, q } => {
            let m = first_matrix_of_order(p, q).ok_or(GroupError::NoSuchExponent { modulus: p, order: q })?;
            vector_semidirect(p, m, q, s)
        }
        GroupSpec::Heisenberg(p) => vector_semidirect(p, [[1, 1], [0, 1]], p, s),
        GroupSpec::Alternating(n) => permutations(n as usize, true, s),
        GroupSpec::Symmetric(n) => permutations(n as usize, false, s),
    })
}

fn cyclic(n: u64, spec: Option<GroupSpec>) -> GroupTable {
    let elements: Vec<u64> = (0..n).collect();
    GroupTable::from_elements(&elements, |a, b| (a + b) % n, |&a| word(&[("a", a)]), spec)
}

/// `<a, b | a^m = 1, b^k = a^s, b a b^-1 = a^i>` with elements `a^x b^y`,
/// ordered by `(y, x)`.
fn metacyclic(m: u64, k: u64, s: u64, i: u64, spec: Option<GroupSpec>) -> GroupTable {
    let powers: Vec<u64> = (0..k).map(|y| pow_mod(i, y, m)).collect();
    let mut elements = Vec::with_capacity((m * k) as usize);
    for y in 0..k {
        for x in 0..m {
            elements.push((x, y));
        }
    }
    GroupTable::from_elements(
        &elements,
        |&(x1, y1), &(x2, y2)| {
            let wrap = if y1 + y2 >= k { s } else { 0 };
            ((x1 + powers[y1 as usize] * x2 + wrap) % m, (y1 + y2) % k)
        },
        |&(x, y)| word(&[("a", x), ("b", y)]),
        spec,
    )
}

type Mat2 = [[u64; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2, p: u64) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for (r, row) in c.iter_mut().enumerate() {
        for (col, cell) in row.iter_mut().enumerate() {
            *cell = (a[r][0] * b[0][col] + a[r][1] * b[1][col]) % p;
        }
    }
    c
}

fn mat_order(m: &Mat2, p: u64, bound: u64) -> Option<u64> {
    let id = [[1, 0], [0, 1]];
    let mut acc = *m;
    for k in 1..=bound {
        if acc == id {
            return Some(k);
        }
        acc = mat_mul(&acc, m, p);
    }
    None
}

/// First matrix of `GL_2(p)` in row-major lexicographic order whose
/// multiplicative order is exactly `q`.
pub fn first_matrix_of_order(p: u64, q: u64) -> Option<Mat2> {
    let bound = (p * p - 1) * (p * p - p);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p == 0 {
                        continue;
                    }
                    let m = [[a, b], [c, d]];
                    if mat_order(&m, p, bound) == Some(q) {
                        return Some(m);
                    }
                }
            }
        }
    }
    None
}

/// `(Z_p × Z_p) ⋊ Z_k` where the generator `c` acts on `a^x b^y` by the
/// column action of `m`. Elements `a^x b^y c^z` are ordered by `(z, y, x)`.
fn vector_semidirect(p: u64, m: Mat2, k: u64, spec: Option<GroupSpec>) -> GroupTable {
    let mut powers = vec![[[1, 0], [0, 1]]; k as usize];
    for z in 1..k as usize {
        powers[z] = mat_mul(&powers[z - 1], &m, p);
    }
    let mut elements = Vec::with_capacity((p * p * k) as usize);
    for z in 0..k {
        for y in 0..p {
            for x in 0..p {
                elements.push((x, y, z));
            }
        }
    }
    GroupTable::from_elements(
        &elements,
        |&(x1, y1, z1), &(x2, y2, z2)| {
            let a = &powers[z1 as usize];
            let x = (x1 + a[0][0] * x2 + a[0][1] * y2) % p;
            let y = (y1 + a[1][0] * x2 + a[1][1] * y2) % p;
            (x, y, (z1 + z2) % k)
        },
        |&(x, y, z)| word(&[("a", x), ("b", y), ("c", z)]),
        spec,
    )
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(perm: &[u8]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(perm: &[u8]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut s = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = perm[x] as usize;
        }
        s.push_str(&format!("({})", cycle.join(" ")));
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

/// Permutations of `{1..n}` in lexicographic order, composed right to left.
fn permutations(n: usize, even_only: bool, spec: Option<GroupSpec>) -> GroupTable {
    let elements: Vec<Vec<u8>> = all_permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    GroupTable::from_elements(
        &elements,
        |s, t| t.iter().map(|&x| s[x as usize]).collect::<Vec<u8>>(),
        |p| cycle_notation(p),
        spec,
    )
}
