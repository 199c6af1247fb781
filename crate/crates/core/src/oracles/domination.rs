//! Size-bounded exact search for minimum dominating sets.
//!
//! Branches on the lowest undominated vertex: some member of its closed
//! neighbourhood must be picked. Sibling branches forbid the choices already
//! tried, so each set is explored at most once.

use super::{validated, OracleError, SolveResult};
use crate::bitset::Bitset;
use crate::instances::Graph;
use std::time::Instant;

pub const DOMINATION_NODE_BUDGET: u64 = 10_000_000;

struct Search<'a> {
    closed: &'a [Bitset],
    explored: u64,
    budget: u64,
}

impl Search<'_> {
    fn exists(
        &mut self,
        left: usize,
        dominated: &Bitset,
        forbidden: &Bitset,
        picked: &mut Vec<usize>,
    ) -> Result<bool, OracleError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        let Some(u) = dominated.complement().first() else {
            return Ok(true);
        };
        if left == 0 {
            return Ok(false);
        }
        let mut forbidden = forbidden.clone();
        for w in self.closed[u].iter() {
            if forbidden.contains(w) {
                continue;
            }
            let mut next = dominated.clone();
            next.union_with(&self.closed[w]);
            picked.push(w);
            if self.exists(left - 1, &next, &forbidden, picked)? {
                return Ok(true);
            }
            picked.pop();
            forbidden.insert(w);
        }
        Ok(false)
    }
}

/// Smallest dominating set of size at most `size_cap` (lexicographically
/// smallest among minimum ones), or `None` if every dominating set is larger.
pub fn min_dominating_set_bounded(
    g: &Graph,
    size_cap: usize,
) -> Result<Option<SolveResult<Vec<usize>>>, OracleError> {
    let start = Instant::now();
    let n = g.n();
    let closed: Vec<Bitset> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut search = Search { closed: &closed, explored: 0, budget: DOMINATION_NODE_BUDGET };
    let nothing = Bitset::new(n);

    let mut found = None;
    for k in 0..=size_cap.min(n) {
        let mut picked = Vec::new();
        if search.exists(k, &nothing, &nothing, &mut picked)? {
            found = Some(picked);
            break;
        }
    }
    let Some(mut best) = found else {
        return Ok(None);
    };
    best.sort_unstable();
    let gamma = best.len();

    // Lexicographic minimisation, one position at a time.
    let mut chosen: Vec<usize> = Vec::with_capacity(gamma);
    while chosen.len() < gamma {
        let pos = chosen.len();
        let lo = chosen.last().map_or(0, |&v| v + 1);
        for v in lo..best[pos] {
            let mut forced = chosen.clone();
            forced.push(v);
            let mut dominated = Bitset::new(n);
            for &f in &forced {
                dominated.union_with(&closed[f]);
            }
            let forbidden = Bitset::from_iter(n, 0..=v);
            let mut picked = Vec::new();
            if search.exists(gamma - pos - 1, &dominated, &forbidden, &mut picked)? {
                picked.sort_unstable();
                best = forced;
                best.extend(picked);
                break;
            }
        }
        chosen.push(best[pos]);
    }
    debug_assert_eq!(chosen, best);
    let ok = chosen.len() == gamma && g.is_dominating(&chosen);
    validated(
        ok,
        "dominating set",
        SolveResult { value: gamma, witness: chosen, explored: search.explored, elapsed: start.elapsed() },
    )
    .map(Some)
}
