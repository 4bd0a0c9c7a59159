//! Finite groups as explicit operation tables.

mod construct;
pub mod numtheory;
mod spec;
mod table;

pub use construct::{construct, construct_with_cap, first_matrix_of_order};
pub use spec::GroupSpec;
pub use table::{direct_product, product_element_order, GroupTable, Violation};

use thiserror::Error;

/// Largest group order built unless overridden.
pub const DEFAULT_ORDER_CAP: usize = 400;

/// Environment variable overriding [`DEFAULT_ORDER_CAP`].
pub const ORDER_CAP_ENV: &str = "INCL_ORDER_CAP";

pub fn order_cap_from_env() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("parameter {name} = {value} is not prime")]
    NonPrimeParameter { name: &'static str, value: u64 },
    #[error("divisibility condition fails: {condition}")]
    DivisibilityConditionFails { condition: String },
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("no residue of multiplicative order {order} modulo {modulus}")]
    NoSuchExponent { modulus: u64, order: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    #[error("constructed table violates the group laws: {0}")]
    InvalidTable(String),
}
