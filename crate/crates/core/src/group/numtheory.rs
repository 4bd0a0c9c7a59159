//! Small integer helpers used by group construction and classification.

use super::GroupError;

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `x` modulo `n`, or `None` when `x` is not a unit.
pub fn multiplicative_order(x: u64, n: u64) -> Option<u64> {
    if n < 2 || gcd(x % n, n) != 1 {
        return None;
    }
    let mut acc = x % n;
    let mut k = 1;
    while acc != 1 {
        acc = acc * x % n;
        k += 1;
    }
    Some(k)
}

/// Smallest residue `i` in `[2, modulus)` whose multiplicative order modulo
/// `modulus` is exactly `target_order`.
///
/// An order-1 action is a direct product, so `target_order == 1` is rejected.
pub fn find_action_exponent(modulus: u64, target_order: u64) -> Result<u64, GroupError> {
    if target_order < 2 {
        return Err(GroupError::NoSuchExponent {
            modulus,
            order: target_order,
        });
    }
    (2..modulus)
        .find(|&i| multiplicative_order(i, modulus) == Some(target_order))
        .ok_or(GroupError::NoSuchExponent {
            modulus,
            order: target_order,
        })
}

/// The sorted exponent pattern of `n`, e.g. `12 = 2^2 * 3` gives `[2, 1]`.
pub fn exponent_pattern(n: u64) -> Vec<u32> {
    let mut e: Vec<u32> = factorize(n).into_iter().map(|(_, e)| e).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    e
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}
