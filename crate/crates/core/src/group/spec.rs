use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numtheory::{find_action_exponent, is_prime};
use super::GroupError;

/// A finite group named by family and parameters.
///
/// `Display` renders the textual form accepted by [`crate::parse::parse_spec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Folded left to right.
    DirectProduct(Vec<GroupSpec>),
    /// Dihedral group of the given *order* (even).
    Dihedral(u64),
    Quaternion8,
    /// `a^4 = b^2 = 1, ab = ba^-1`.
    Modular8,
    /// `a^{p^2} = b^p = 1, bab^-1 = a^{1+p}` for odd `p`.
    ModularP3(u64),
    /// `Z_q ⋊ Z_{p^alpha}` where the generator of `Z_{p^alpha}` acts with
    /// multiplicative order `p^t`.
    SemidirectQP { q: u64, p: u64, alpha: u32, t: u32 },
    /// `Z_{p^2} ⋊ Z_q` with `q | p - 1`.
    SemidirectP2Q { p: u64, q: u64 },
    /// `(Z_p × Z_p) ⋊ Z_q` acting by `diag(i, i^t)`.
    G5 { p: u64, q: u64, t: u32 },
    /// `(Z_p × Z_p) ⋊ Z_q` acting by the first order-`q` matrix of `GL_2(p)`.
    G6 { p: u64, q: u64 },
    /// `(Z_p × Z_p) ⋊ Z_p` with `cbc^-1 = ab`.
    Heisenberg(u64),
    Alternating(u32),
    Symmetric(u32),
}

fn require_prime(name: &'static str, value: u64) -> Result<(), GroupError> {
    if is_prime(value) {
        Ok(())
    } else {
        Err(GroupError::NonPrimeParameter { name, value })
    }
}

fn require(cond: bool, condition: impl Into<String>) -> Result<(), GroupError> {
    if cond {
        Ok(())
    } else {
        Err(GroupError::DivisibilityConditionFails {
            condition: condition.into(),
        })
    }
}

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

impl GroupSpec {
    /// Checks every parameter constraint without building the group.
    pub fn validate(&self) -> Result<(), GroupError> {
        match *self {
            GroupSpec::Cyclic(n) => {
                if n == 0 {
                    return Err(invalid("Z0 is not a finite group"));
                }
            }
            GroupSpec::DirectProduct(ref parts) => {
                if parts.is_empty() {
                    return Err(invalid("empty direct product"));
                }
                for part in parts {
                    part.validate()?;
                }
            }
            GroupSpec::Dihedral(n) => {
                if n < 2 || n % 2 != 0 {
                    return Err(invalid(format!("dihedral order {n} must be even and >= 2")));
                }
            }
            GroupSpec::Quaternion8 | GroupSpec::Modular8 => {}
            GroupSpec::ModularP3(p) => {
                require_prime("p", p)?;
                if p == 2 {
                    return Err(invalid("M_{p^3} needs an odd prime; use M8"));
                }
            }
            GroupSpec::SemidirectQP { q, p, alpha, t } => {
                require_prime("q", q)?;
                require_prime("p", p)?;
                if p == q {
                    return Err(invalid("SD needs distinct primes"));
                }
                if t < 1 {
                    return Err(invalid("SD needs t >= 1 (t = 0 is a direct product)"));
                }
                if t > alpha {
                    return Err(invalid(format!("SD needs t <= alpha (t={t}, alpha={alpha})")));
                }
                let pt = p.checked_pow(t).ok_or_else(|| invalid("p^t overflows"))?;
                require(
                    (q - 1) % pt == 0,
                    format!("p^t | q-1 fails: {p}^{t} = {pt} does not divide {}", q - 1),
                )?;
            }
            GroupSpec::SemidirectP2Q { p, q } => {
                require_prime("p", p)?;
                require_prime("q", q)?;
                require(p != q && (p - 1) % q == 0, format!("q | p-1 fails: {q} does not divide {}", p - 1))?;
            }
            GroupSpec::G5 { p, q, t } => {
                require_prime("p", p)?;
                require_prime("q", q)?;
                require(p != q && (p - 1) % q == 0, format!("q | p-1 fails: {q} does not divide {}", p - 1))?;
                if u64::from(t) >= q {
                    return Err(invalid(format!("G5 needs 0 <= t < q (t={t})")));
                }
            }
            GroupSpec::G6 { p, q } => {
                require_prime("p", p)?;
                require_prime("q", q)?;
                if p == q {
                    return Err(invalid("G6 needs distinct primes"));
                }
                let gl_order = (p * p - 1) * (p * p - p);
                require(
                    gl_order % q == 0,
                    format!("no element of order {q} in GL2({p}): {q} does not divide {gl_order}"),
                )?;
            }
            GroupSpec::Heisenberg(p) => require_prime("p", p)?,
            GroupSpec::Alternating(n) => {
                if !(1..=5).contains(&n) {
                    return Err(invalid(format!("A{n}: only 1 <= n <= 5 supported")));
                }
            }
            GroupSpec::Symmetric(n) => {
                if !(1..=4).contains(&n) {
                    return Err(invalid(format!("S{n}: only 1 <= n <= 4 supported")));
                }
            }
        }
        Ok(())
    }

    /// Group order implied by the parameters; `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match *self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => Some(n),
            GroupSpec::DirectProduct(ref parts) => parts
                .iter()
                .try_fold(1u64, |acc, s| acc.checked_mul(s.order()?)),
            GroupSpec::Quaternion8 | GroupSpec::Modular8 => Some(8),
            GroupSpec::ModularP3(p) | GroupSpec::Heisenberg(p) => p.checked_pow(3),
            GroupSpec::SemidirectQP { q, p, alpha, .. } => q.checked_mul(p.checked_pow(alpha)?),
            GroupSpec::SemidirectP2Q { p, q } | GroupSpec::G5 { p, q, .. } | GroupSpec::G6 { p, q } => {
                p.checked_mul(p)?.checked_mul(q)
            }
            GroupSpec::Alternating(n) => {
                let f: u64 = (1..=u64::from(n)).product();
                Some(if n < 2 { 1 } else { f / 2 })
            }
            GroupSpec::Symmetric(n) => Some((1..=u64::from(n)).product()),
        }
    }

    /// Action exponent used for metacyclic families (smallest valid residue).
    pub(crate) fn action_exponent(&self) -> Result<u64, GroupError> {
        match *self {
            GroupSpec::SemidirectQP { q, p, t, .. } => find_action_exponent(q, p.pow(t)),
            GroupSpec::SemidirectP2Q { p, q } => find_action_exponent(p * p, q),
            GroupSpec::G5 { p, q, .. } => find_action_exponent(p, q),
            _ => Err(invalid("family has no action exponent")),
        }
    }

    /// The factors of a product, or the spec itself.
    pub fn factors(&self) -> Vec<&GroupSpec> {
        match self {
            GroupSpec::DirectProduct(parts) => parts.iter().flat_map(|p| p.factors()).collect(),
            other => vec![other],
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::DirectProduct(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion8 => f.write_str("Q8"),
            GroupSpec::Modular8 => f.write_str("M8"),
            GroupSpec::ModularP3(p) => write!(f, "M{p}^3"),
            GroupSpec::SemidirectQP { q, p, alpha, t } => write!(f, "SD({q},{p},{alpha},{t})"),
            GroupSpec::SemidirectP2Q { p, q } => write!(f, "SDP2Q({p},{q})"),
            GroupSpec::G5 { p, q, t } => write!(f, "G5({p},{q},{t})"),
            GroupSpec::G6 { p, q } => write!(f, "G6({p},{q})"),
            GroupSpec::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        crate::parse::parse_spec(&text).map_err(serde::de::Error::custom)
    }
}
