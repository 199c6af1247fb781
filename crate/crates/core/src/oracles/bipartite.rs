use super::{validated, OracleError, SolveResult};
use crate::instances::Graph;
use itertools::Itertools;
use std::time::Instant;

pub const MIBS_VERTEX_CAP: usize = 16;

/// Largest vertex set inducing a bipartite subgraph, by subset scan from
/// the largest size down (lexicographic order within a size).
pub fn max_induced_bipartite(g: &Graph) -> Result<SolveResult<Vec<usize>>, OracleError> {
    let n = g.n();
    if n > MIBS_VERTEX_CAP {
        return Err(OracleError::SizeCap { what: "vertex count", limit: MIBS_VERTEX_CAP, found: n });
    }
    let start = Instant::now();
    let mut explored = 0u64;
    for size in (0..=n).rev() {
        for subset in (0..n).combinations(size) {
            explored += 1;
            if g.induces_bipartite(&subset) {
                let ok = g.induces_bipartite(&subset);
                return validated(
                    ok,
                    "induced bipartite subgraph",
                    SolveResult { value: size, witness: subset, explored, elapsed: start.elapsed() },
                );
            }
        }
    }
    unreachable!("the empty set induces a bipartite graph")
}
