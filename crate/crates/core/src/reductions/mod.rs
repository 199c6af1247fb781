//! Gap-preserving instance transformations and their witness translators.

mod copies;
mod domination;
mod grouping;
mod lin3;

pub use copies::is_to_cb;
pub use domination::{
    ds_to_setcover, ds_witness_to_is_witness, is_to_ds, is_witness_to_ds_witness, DsGadget, GadgetRole,
};
pub use grouping::{
    check_grouping_bound, max3sat_to_is, GroupedGraph, GroupingParams, GroupingVerdict,
    PartialAssignment, GROUP_VARIABLE_CAP,
};
pub use lin3::{lin3_to_vc, vc_to_minsat, LocalAssignment, MinSatReduction, VcReduction};

use crate::instances::InstanceError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("K = {k} groups requested for {m} clauses (need 1 <= K <= m)")]
    BadGroupCount { k: usize, m: usize },
    #[error("lambda must lie in (0, 1], got {0}")]
    BadLambda(String),
    #[error("clause {clause} has {len} literals; the grouping reduction takes at most 3")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("group {group} involves {vars} variables, above the cap of {cap}")]
    GroupTooLarge { group: usize, vars: usize, cap: usize },
    #[error("block {0} is empty; the dominating-set gadget needs non-empty cliques")]
    EmptyBlock(usize),
    #[error("vertex {0} is isolated and would yield an empty clause")]
    IsolatedVertex(usize),
    #[error("witness is not an independent set")]
    NotIndependent,
    #[error("witness is not a dominating set")]
    NotDominating,
    #[error("witness vertex {0} out of range")]
    WitnessOutOfRange(usize),
    #[error("translated witness failed verification: {0}")]
    Verification(&'static str),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}
