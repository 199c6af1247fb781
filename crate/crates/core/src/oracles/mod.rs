//! Exact desk-scale solvers, used as ground truth by every check.
//!
//! Every solver re-validates its witness before returning it, and ties are
//! broken towards the lexicographically smallest witness (sorted vertex
//! lists, or assignments read as `false < true` sequences), so results do
//! not depend on search order.

mod assignment;
mod bipartite;
mod clique;
mod domination;
mod setcover;
mod subexp;

pub use assignment::{max_lin, max_sat, min_sat, optimize_assignment, ASSIGNMENT_VAR_CAP};
pub use bipartite::{max_induced_bipartite, MIBS_VERTEX_CAP};
pub use clique::{
    max_clique, max_clique_with_cap, max_independent_set, max_independent_set_with_cap,
    min_vertex_cover, CLIQUE_VERTEX_CAP,
};
pub use domination::{min_dominating_set_bounded, DOMINATION_NODE_BUDGET};
pub use setcover::{min_set_cover, SET_COVER_SET_CAP};
pub use subexp::{subexp_approx_is, SUBEXP_SUBSET_BUDGET};

use serde::Serialize;
use std::time::Duration;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} = {found} exceeds the solver cap of {limit}")]
    SizeCap { what: &'static str, limit: usize, found: usize },
    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("instance is infeasible: {0}")]
    Infeasible(&'static str),
    #[error("internal error: witness failed validation ({0})")]
    WitnessValidation(&'static str),
}

/// Optimal value, a witness attaining it, and search statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    /// Search nodes (or candidates) examined.
    pub explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub(crate) fn validated<W>(
    ok: bool,
    what: &'static str,
    result: SolveResult<W>,
) -> Result<SolveResult<W>, OracleError> {
    if ok {
        Ok(result)
    } else {
        Err(OracleError::WitnessValidation(what))
    }
}
