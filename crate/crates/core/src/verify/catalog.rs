use crate::group::numtheory::{divisors, factorize, primes_up_to};
use crate::group::GroupSpec;

/// Largest prime used for family parameters.
pub const MAX_PRIME: u64 = 13;
/// Largest prime exponent in cyclic and abelian orders.
pub const MAX_EXPONENT: u32 = 5;

fn small_factors(n: u64) -> bool {
    factorize(n).iter().all(|&(p, e)| p <= MAX_PRIME && e <= MAX_EXPONENT)
}

/// Every catalog spec of order `2..=max_order`, sorted by order and then by
/// rendered form.
///
/// Families: cyclic and rank 2 or 3 abelian groups with small prime factors,
/// dihedral groups of every even order from 6, `Q8`, `M8`, `M_{p^3}`,
/// `Heis(p)` for odd `p`, the metacyclic families `SD` and `SDP2Q`, the
/// `(Z_p x Z_p) x| Z_q` families `G5` and `G6`, and `S3`, `S4`, `A4`, `A5`.
pub fn catalog(max_order: u64) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    if max_order < 2 {
        return specs;
    }
    let primes = primes_up_to(MAX_PRIME);

    for n in 2..=max_order {
        if small_factors(n) {
            specs.push(GroupSpec::Cyclic(n));
        }
    }
    for d1 in 2..=max_order / 2 {
        if !small_factors(d1) {
            continue;
        }
        for d2 in divisors(d1) {
            if d2 < 2 || d1 * d2 > max_order {
                continue;
            }
            specs.push(GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(d1), GroupSpec::Cyclic(d2)]));
            for d3 in divisors(d2) {
                if d3 >= 2 && d1 * d2 * d3 <= max_order {
                    specs.push(GroupSpec::DirectProduct(vec![
                        GroupSpec::Cyclic(d1),
                        GroupSpec::Cyclic(d2),
                        GroupSpec::Cyclic(d3),
                    ]));
                }
            }
        }
    }

    for n in (6..=max_order).step_by(2) {
        specs.push(GroupSpec::Dihedral(n));
    }
    specs.extend([GroupSpec::Quaternion8, GroupSpec::Modular8]);
    for &p in primes.iter().filter(|&&p| p > 2) {
        specs.push(GroupSpec::ModularP3(p));
        specs.push(GroupSpec::Heisenberg(p));
    }

    for &q in &primes {
        for &p in &primes {
            if p == q {
                continue;
            }
            for alpha in 1..=MAX_EXPONENT {
                for t in 1..=alpha {
                    if (q - 1) % p.pow(t) == 0 {
                        specs.push(GroupSpec::SemidirectQP { q, p, alpha, t });
                    }
                }
            }
            // here p plays the kernel prime and q the acting prime
            if (p - 1) % q == 0 {
                specs.push(GroupSpec::SemidirectP2Q { p, q });
                for t in 0..q as u32 {
                    specs.push(GroupSpec::G5 { p, q, t });
                }
            } else if (p + 1) % q == 0 {
                specs.push(GroupSpec::G6 { p, q });
            }
        }
    }

    specs.extend([
        GroupSpec::Symmetric(3),
        GroupSpec::Symmetric(4),
        GroupSpec::Alternating(4),
        GroupSpec::Alternating(5),
    ]);

    let mut keyed: Vec<(u64, String, GroupSpec)> = specs
        .into_iter()
        .filter_map(|s| {
            let order = s.order()?;
            (order <= max_order).then(|| (order, s.to_string(), s))
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|(_, _, s)| s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_spec;

    #[test]
    fn small_catalog() {
        let names: Vec<String> = catalog(8).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            [
                "Z2", "Z3", "Z2xZ2", "Z4", "Z5", "D6", "S3", "SD(3,2,1,1)", "Z6", "Z7", "D8", "M8", "Q8", "Z2xZ2xZ2",
                "Z4xZ2", "Z8"
            ]
        );
    }

    #[test]
    fn empty_catalog() {
        assert!(catalog(0).is_empty());
        assert!(catalog(1).is_empty());
    }

    #[test]
    fn specs_are_valid_and_round_trip() {
        for spec in catalog(200) {
            spec.validate().unwrap();
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
