use crate::graph::{inclusion_graph, intersection_graph, SimpleGraph};
use crate::group::{construct_with_cap, GroupError, GroupSpec, GroupTable};
use crate::invariants::{analyze, metrics, InvariantError, PropertyReport};
use crate::lattice::{lattice_with_cap, SubgroupLattice};

use rayon::prelude::*;

use super::catalog::catalog;
use super::classify::{classify, GroupClass};
use super::expected::{expected_profile, ExpectedProfile};
use super::VerifyError;

/// One catalog group with everything the checks look at.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: GroupSpec,
    pub class: GroupClass,
    pub group: GroupTable,
    pub lattice: SubgroupLattice,
    pub graph: SimpleGraph,
    pub report: PropertyReport,
    pub intersection_connected: bool,
    pub profile: Result<ExpectedProfile, VerifyError>,
}

/// Why an instance could not be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceError {
    pub spec: GroupSpec,
    /// Order or vertex cap hit, as opposed to a failed internal check.
    pub resource_cap: bool,
    pub message: String,
}

impl Instance {
    pub fn build(spec: &GroupSpec, order_cap: usize) -> Result<Instance, InstanceError> {
        let fail = |resource_cap: bool, message: String| InstanceError {
            spec: spec.clone(),
            resource_cap,
            message,
        };
        let group_err = |e: GroupError| fail(matches!(e, GroupError::OrderCapExceeded { .. }), e.to_string());
        let group = construct_with_cap(spec, order_cap).map_err(group_err)?;
        let lattice = lattice_with_cap(&group, order_cap).map_err(group_err)?;
        let graph = inclusion_graph(&lattice);
        let report = analyze(&graph, Some(&lattice.level_coloring()))
            .map_err(|e| fail(matches!(e, InvariantError::VertexLimitExceeded { .. }), e.to_string()))?;
        let intersection_connected = metrics::components(&intersection_graph(&lattice)).len() == 1;
        Ok(Instance {
            spec: spec.clone(),
            class: classify(spec),
            group,
            lattice,
            graph,
            report,
            intersection_connected,
            profile: expected_profile(spec),
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Builds every catalog instance up to `max_order` in parallel, keeping
/// catalog order.
pub fn build_catalog(max_order: u64, order_cap: usize) -> (Vec<Instance>, Vec<InstanceError>) {
    let built: Vec<Result<Instance, InstanceError>> =
        catalog(max_order).par_iter().map(|s| Instance::build(s, order_cap)).collect();
    let mut instances = Vec::new();
    let mut errors = Vec::new();
    for b in built {
        match b {
            Ok(i) => instances.push(i),
            Err(e) => errors.push(e),
        }
    }
    (instances, errors)
}
