use super::{validated, OracleError, SolveResult};
use crate::instances::SetCoverInstance;
use itertools::Itertools;
use std::time::Instant;

pub const SET_COVER_SET_CAP: usize = 24;

/// Minimum subfamily covering the ground set, by increasing size.
pub fn min_set_cover(inst: &SetCoverInstance) -> Result<SolveResult<Vec<usize>>, OracleError> {
    let m = inst.sets().len();
    if m > SET_COVER_SET_CAP {
        return Err(OracleError::SizeCap { what: "set count", limit: SET_COVER_SET_CAP, found: m });
    }
    if !inst.is_feasible() {
        return Err(OracleError::Infeasible("union of sets misses part of the ground set"));
    }
    let start = Instant::now();
    let mut explored = 0u64;
    for size in 0..=m {
        for chosen in (0..m).combinations(size) {
            explored += 1;
            if inst.covers(&chosen) {
                let ok = inst.covers(&chosen);
                return validated(
                    ok,
                    "set cover",
                    SolveResult { value: size, witness: chosen, explored, elapsed: start.elapsed() },
                );
            }
        }
    }
    unreachable!("a feasible instance is covered by all its sets")
}
