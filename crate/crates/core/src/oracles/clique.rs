//! Branch and bound for maximum clique with a greedy-colouring bound, on
//! bit-packed candidate sets.

use super::{validated, OracleError, SolveResult};
use crate::bitset::Bitset;
use crate::instances::Graph;
use std::time::Instant;

pub const CLIQUE_VERTEX_CAP: usize = 200;

struct Search<'a> {
    adj: &'a [Bitset],
    /// Size to beat.
    bound: usize,
    best: Option<Vec<usize>>,
    /// Stop as soon as a clique of this size is found.
    stop_at: usize,
    explored: u64,
}

impl Search<'_> {
    /// Orders `cand` by greedy colour classes; returns vertices with the
    /// colour number of each (an upper bound on the clique size among the
    /// prefix ending there).
    fn colour_sort(&self, cand: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colours = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    /// Returns true once `stop_at` is reached.
    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Bitset) -> bool {
        let (order, colours) = self.colour_sort(&cand);
        for idx in (0..order.len()).rev() {
            if current.len() + colours[idx] <= self.bound {
                return false;
            }
            let v = order[idx];
            self.explored += 1;
            current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.bound {
                    self.bound = current.len();
                    self.best = Some(current.clone());
                    if self.bound >= self.stop_at {
                        return true;
                    }
                }
            } else if self.expand(current, next) {
                return true;
            }
            current.pop();
            cand.remove(v);
        }
        false
    }
}

/// A clique of size at least `need` inside `cand`, if one exists.
fn find_at_least(adj: &[Bitset], cand: &Bitset, need: usize, explored: &mut u64) -> Option<Vec<usize>> {
    if need == 0 {
        return Some(Vec::new());
    }
    if cand.count() < need {
        return None;
    }
    let mut s = Search { adj, bound: need - 1, best: None, stop_at: need, explored: 0 };
    s.expand(&mut Vec::new(), cand.clone());
    *explored += s.explored;
    s.best
}

/// Maximum clique over the relation `adj` (irreflexive and symmetric),
/// lexicographically smallest among the optima.
fn solve(adj: &[Bitset], n: usize) -> (Vec<usize>, u64) {
    let mut s = Search { adj, bound: 0, best: None, stop_at: usize::MAX, explored: 0 };
    s.expand(&mut Vec::new(), Bitset::full(n));
    let mut explored = s.explored;
    let mut best = s.best.unwrap_or_default();
    best.sort_unstable();
    let omega = best.len();

    // Walk the witness towards its lexicographic minimum: at each position
    // try every smaller candidate first. `best` always extends `chosen`.
    let mut chosen: Vec<usize> = Vec::with_capacity(omega);
    let mut cand = Bitset::full(n);
    while chosen.len() < omega {
        let pos = chosen.len();
        let need = omega - pos - 1;
        let current = best[pos];
        let smaller: Vec<usize> = cand.iter().take_while(|&v| v < current).collect();
        for v in smaller {
            let mut sub = cand.intersection(&adj[v]);
            sub.retain_above(v);
            if let Some(mut rest) = find_at_least(adj, &sub, need, &mut explored) {
                rest.truncate(need);
                rest.sort_unstable();
                best.truncate(pos);
                best.push(v);
                best.extend(rest);
                break;
            }
        }
        let v = best[pos];
        chosen.push(v);
        cand.intersect_with(&adj[v]);
        cand.retain_above(v);
    }
    (chosen, explored)
}

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        return Err(OracleError::SizeCap { what: "vertex count", limit: cap, found: n });
    }
    Ok(())
}

pub fn max_clique(g: &Graph) -> Result<SolveResult<Vec<usize>>, OracleError> {
    max_clique_with_cap(g, CLIQUE_VERTEX_CAP)
}

pub fn max_clique_with_cap(g: &Graph, cap: usize) -> Result<SolveResult<Vec<usize>>, OracleError> {
    check_cap(g.n(), cap)?;
    let start = Instant::now();
    let adj: Vec<Bitset> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    let (witness, explored) = solve(&adj, g.n());
    let ok = g.is_clique(&witness);
    validated(
        ok,
        "clique",
        SolveResult { value: witness.len(), witness, explored, elapsed: start.elapsed() },
    )
}

pub fn max_independent_set(g: &Graph) -> Result<SolveResult<Vec<usize>>, OracleError> {
    max_independent_set_with_cap(g, CLIQUE_VERTEX_CAP)
}

pub fn max_independent_set_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<SolveResult<Vec<usize>>, OracleError> {
    check_cap(g.n(), cap)?;
    let start = Instant::now();
    let n = g.n();
    let adj: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut row = g.neighbors(v).complement();
            row.remove(v);
            row
        })
        .collect();
    let (witness, explored) = solve(&adj, n);
    let ok = g.is_independent(&witness);
    validated(
        ok,
        "independent set",
        SolveResult { value: witness.len(), witness, explored, elapsed: start.elapsed() },
    )
}

/// Complement of the maximum independent set witness.
pub fn min_vertex_cover(g: &Graph) -> Result<SolveResult<Vec<usize>>, OracleError> {
    let is = max_independent_set(g)?;
    let inside = g.vertex_set(&is.witness);
    let witness: Vec<usize> = (0..g.n()).filter(|&v| !inside.contains(v)).collect();
    let ok = g.is_vertex_cover(&witness);
    validated(
        ok,
        "vertex cover",
        SolveResult { value: witness.len(), witness, explored: is.explored, elapsed: is.elapsed },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_and_complete() {
        let c5 = Graph::cycle(5);
        assert_eq!(max_independent_set(&c5).unwrap().value, 2);
        assert_eq!(max_clique(&c5).unwrap().value, 2);
        let k6 = Graph::complete(6);
        assert_eq!(max_independent_set(&k6).unwrap().value, 1);
        assert_eq!(max_clique(&k6).unwrap().witness, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn lexicographic_witness() {
        // two triangles {3,4,5} and {0,1,2}; the search may meet either first
        let g = Graph::from_edges(6, [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(max_clique(&g).unwrap().witness, vec![0, 1, 2]);
        assert_eq!(max_independent_set(&g).unwrap().witness, vec![0, 3]);
        assert_eq!(max_clique(&Graph::empty(3)).unwrap().witness, vec![0]);
        assert_eq!(max_clique(&Graph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(min_vertex_cover(&Graph::complete(3)).unwrap().value, 2);
        let matching = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(min_vertex_cover(&matching).unwrap().value, 3);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(max_clique(&Graph::empty(201)), Err(OracleError::SizeCap { .. })));
        assert!(max_clique_with_cap(&Graph::empty(201), 500).is_ok());
    }
}
