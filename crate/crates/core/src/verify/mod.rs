//! Executable checks of the classification results over a catalog of
//! parametrized groups.

pub mod catalog;
pub mod classify;
pub mod embedding;
pub mod expected;
pub mod instance;
pub mod poset;
pub mod sweep;
pub mod theorems;

use thiserror::Error;

pub use catalog::catalog;
pub use classify::{classify, GroupClass};
pub use embedding::{embedding_checks, embedding_checks_in, EmbeddingReport, VertexEmbedding};
pub use expected::{expected_profile, ExpectedProfile, Fact, Mismatch, Prediction};
pub use instance::{build_catalog, Instance, InstanceError};
pub use poset::{is_order_isomorphism, lattice_isomorphism, LatticeIso};
pub use sweep::{sweep, sweep_on, SweepOutput};
pub use theorems::{check_theorem, check_theorem_on, Counterexample, TheoremResult, Verdict, THEOREMS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{0} is outside every classification list")]
    UnclassifiedSpec(String),
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("unknown theorem id {0}")]
    UnknownTheorem(String),
}
