use super::{validated, OracleError, SolveResult};
use crate::instances::{Assignment, CnfFormula, Constraints, LinSystem};
use std::time::Instant;

pub const ASSIGNMENT_VAR_CAP: usize = 24;

/// Exhaustive optimum of the satisfied-constraint count. Assignments are
/// visited in lexicographic order and only strict improvements replace the
/// incumbent.
pub fn optimize_assignment<C: Constraints>(
    inst: &C,
    maximize: bool,
) -> Result<SolveResult<Assignment>, OracleError> {
    let vars = inst.var_count();
    if vars > ASSIGNMENT_VAR_CAP {
        return Err(OracleError::SizeCap { what: "variable count", limit: ASSIGNMENT_VAR_CAP, found: vars });
    }
    let start = Instant::now();
    let mut best: Option<(usize, Assignment)> = None;
    for mask in 0..1u64 << vars {
        let a = Assignment::from_mask(vars, mask);
        let count = inst.count_satisfied(&a).expect("length matches by construction");
        let better = match &best {
            None => true,
            Some((b, _)) => (maximize && count > *b) || (!maximize && count < *b),
        };
        if better {
            best = Some((count, a));
        }
    }
    let (value, witness) = best.expect("at least one assignment");
    let ok = inst.count_satisfied(&witness) == Ok(value);
    validated(
        ok,
        "assignment count",
        SolveResult { value, witness, explored: 1u64 << vars, elapsed: start.elapsed() },
    )
}

pub fn max_sat(f: &CnfFormula) -> Result<SolveResult<Assignment>, OracleError> {
    optimize_assignment(f, true)
}

pub fn min_sat(f: &CnfFormula) -> Result<SolveResult<Assignment>, OracleError> {
    optimize_assignment(f, false)
}

pub fn max_lin(sys: &LinSystem) -> Result<SolveResult<Assignment>, OracleError> {
    optimize_assignment(sys, true)
}
