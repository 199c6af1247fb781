use super::{validated, OracleError, SolveResult};
use crate::instances::Graph;
use itertools::Itertools;
use std::time::Instant;

pub const SUBEXP_SUBSET_BUDGET: u64 = 10_000_000;

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Largest independent set among all vertex subsets of size at most `cap`.
///
/// The value is `min(α(g), cap)`: a larger optimum contains independent
/// `cap`-subsets. Sizes are scanned from `cap` down, so the first hit is the
/// answer and is lexicographically smallest at that size.
pub fn subexp_approx_is(g: &Graph, cap: usize) -> Result<SolveResult<Vec<usize>>, OracleError> {
    let n = g.n();
    let cap = cap.min(n);
    let total: u64 = (0..=cap).map(|s| binomial(n, s)).fold(0u64, u64::saturating_add);
    if total > SUBEXP_SUBSET_BUDGET {
        return Err(OracleError::BudgetExceeded(SUBEXP_SUBSET_BUDGET));
    }
    let start = Instant::now();
    let mut explored = 0u64;
    for size in (0..=cap).rev() {
        for subset in (0..n).combinations(size) {
            explored += 1;
            if g.is_independent(&subset) {
                let ok = g.is_independent(&subset);
                return validated(
                    ok,
                    "independent set",
                    SolveResult { value: size, witness: subset, explored, elapsed: start.elapsed() },
                );
            }
        }
    }
    unreachable!("the empty set is independent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(subexp_approx_is(&Graph::empty(5), 2).unwrap().value, 2);
        assert_eq!(subexp_approx_is(&Graph::complete(5), 3).unwrap().value, 1);
        assert!(subexp_approx_is(&Graph::empty(60), 8).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
